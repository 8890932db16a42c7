from __future__ import annotations

from spectra.errors import CapExceededError, SpectraError


class CompilationError(SpectraError):
    """Raised when a machine cannot be compiled under the requested construction."""


class WindowCapExceeded(CapExceededError):
    """Raised when a machine needs more transition windows than the configured cap."""

    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(f"Machine needs {count} transition windows, cap is {cap}")


__all__ = ["CompilationError", "WindowCapExceeded"]
