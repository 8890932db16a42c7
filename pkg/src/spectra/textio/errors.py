from __future__ import annotations

from pathlib import Path
from typing import Optional, Union

from spectra.errors import SpectraError


class TextFormatError(SpectraError):
    """Base exception for unreadable workbench documents."""


class SentenceSyntaxError(TextFormatError):
    """Raised when a sentence document does not match the grammar or its declarations."""

    def __init__(self, message: str, line: int, column: int, offset: int):
        super().__init__(f"line {line}, column {column} - {message}")
        self.line = line
        self.column = column
        self.offset = offset


class DocumentValidationError(TextFormatError):
    """Raised when a structure or machine document fails validation."""

    def __init__(
        self, message: str, source: Union[Path, str] = "<text>", line: Optional[int] = None
    ):
        location = f"{source}:{line}" if line is not None else str(source)
        super().__init__(f"{location} - {message}")
        self.source = source
        self.line = line


__all__ = ["DocumentValidationError", "SentenceSyntaxError", "TextFormatError"]
