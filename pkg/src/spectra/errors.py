from __future__ import annotations


class SpectraError(Exception):
    """Base exception for every workbench failure."""


class CapExceededError(SpectraError):
    """Base exception for configured safety caps (enumeration, windows, configurations)."""
