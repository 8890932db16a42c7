"""Workbench limits and YAML helpers."""

from .limits import (
    DEFAULT_LIMITS_PATH,
    LimitsError,
    LimitsValidationError,
    WorkbenchLimits,
    load_limits,
)

__all__ = [
    "DEFAULT_LIMITS_PATH",
    "LimitsError",
    "LimitsValidationError",
    "WorkbenchLimits",
    "load_limits",
]
