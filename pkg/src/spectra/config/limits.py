from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Dict, Optional, Union

import yaml

from spectra.errors import SpectraError

from .yaml_lines import LineLoader, get_line, yaml_error_line

DEFAULT_LIMITS_PATH = Path("config/limits/default.yml")


class LimitsError(SpectraError):
    """Base exception for limits-file issues."""


class LimitsValidationError(LimitsError):
    """Raised when a limits file fails validation."""

    def __init__(self, message: str, file_path: Path, line: Optional[int] = None):
        location = f"{file_path}:{line}" if line is not None else str(file_path)
        super().__init__(f"{location} - {message}")
        self.file_path = file_path
        self.line = line


@dataclass(frozen=True)
class WorkbenchLimits:
    """Every safety cap of the workbench. Exceeding one is an error, never a silent cut."""

    enumeration_cap: int = 24
    window_cap: int = 50_000
    configuration_cap: int = 1_000_000
    n_min: int = 4
    distribute_cap: int = 64
    workers: int = 1

    def override(self, **values: Optional[int]) -> "WorkbenchLimits":
        """Return a copy with every non-None value replaced (command-line flags win)."""
        changes = {key: value for key, value in values.items() if value is not None}
        unknown = sorted(set(changes) - {f.name for f in fields(self)})
        if unknown:
            raise LimitsError(f"Unknown limit(s): {', '.join(unknown)}")
        updated = replace(self, **changes)
        _check_ranges(updated, Path("<flags>"), {})
        return updated


# Smallest accepted value per limit.
_MINIMUM: Dict[str, int] = {
    "enumeration_cap": 0,
    "window_cap": 1,
    "configuration_cap": 1,
    "n_min": 1,
    "distribute_cap": 1,
    "workers": 1,
}


def _check_ranges(limits: WorkbenchLimits, path: Path, lines: Dict[str, Optional[int]]) -> None:
    for name, minimum in _MINIMUM.items():
        value = getattr(limits, name)
        if value < minimum:
            raise LimitsValidationError(
                f"{name} must be at least {minimum}, got {value}", path, lines.get(name)
            )


def load_limits(path: Optional[Union[os.PathLike, str]] = None) -> WorkbenchLimits:
    """Read a YAML limits file; missing keys keep their built-in defaults.

    Without a path the built-in defaults are returned unchanged.
    """
    if path is None:
        return WorkbenchLimits()
    file_path = Path(path).expanduser()
    if not file_path.exists():
        raise LimitsError(f"Limits file not found: {file_path}")
    try:
        with file_path.open("r", encoding="utf-8") as handle:
            raw = yaml.load(handle, Loader=LineLoader) or {}
    except yaml.YAMLError as exc:
        raise LimitsValidationError(f"Invalid YAML: {exc}", file_path, yaml_error_line(exc))

    if not isinstance(raw, dict):
        raise LimitsValidationError("Limits file must define a dictionary", file_path)
    section = raw.get("limits", raw)
    if not isinstance(section, dict):
        raise LimitsValidationError(
            "limits section must be a dictionary", file_path, get_line(section)
        )

    known = {f.name for f in fields(WorkbenchLimits)}
    values: Dict[str, int] = {}
    lines: Dict[str, Optional[int]] = {}
    for key, value in section.items():
        if key not in known:
            raise LimitsValidationError(f"Unknown limit '{key}'", file_path, get_line(key))
        if not isinstance(value, int) or isinstance(value, bool):
            raise LimitsValidationError(
                f"{key} must be an integer, got {value!r}", file_path, get_line(key)
            )
        values[str(key)] = value
        lines[str(key)] = get_line(key)
    limits = WorkbenchLimits(**values)
    _check_ranges(limits, file_path, lines)
    return limits


__all__ = [
    "DEFAULT_LIMITS_PATH",
    "LimitsError",
    "LimitsValidationError",
    "WorkbenchLimits",
    "load_limits",
]
