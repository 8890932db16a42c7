"""Brute-force model finding: the ground-truth oracle for spectra."""

from .enumeration import (
    DEFAULT_ENUMERATION_CAP,
    EnumerationCapExceeded,
    count_models,
    enumerate_structures,
    expansions,
    fact_positions,
    find_model,
)
from .spectrum import has_expansion, has_model_of_size, resolve_method, spectrum_up_to

__all__ = [
    "DEFAULT_ENUMERATION_CAP",
    "EnumerationCapExceeded",
    "count_models",
    "enumerate_structures",
    "expansions",
    "fact_positions",
    "find_model",
    "has_expansion",
    "has_model_of_size",
    "resolve_method",
    "spectrum_up_to",
]
