"""Bounded simulation of nondeterministic multi-tape Turing machines."""

from .configuration import Configuration, binary_of, successors
from .simulator import (
    DEFAULT_CONFIGURATION_CAP,
    BoundKind,
    ConfigurationCapExceeded,
    Strategy,
    accepts_binary,
    bounds_for,
    render_run,
    replay,
    run_binary,
    simulate,
    spectrum_oracle,
)

__all__ = [
    "BoundKind",
    "Configuration",
    "ConfigurationCapExceeded",
    "DEFAULT_CONFIGURATION_CAP",
    "Strategy",
    "accepts_binary",
    "binary_of",
    "bounds_for",
    "render_run",
    "replay",
    "run_binary",
    "simulate",
    "spectrum_oracle",
    "successors",
]
