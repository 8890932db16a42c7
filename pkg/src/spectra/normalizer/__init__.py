"""Normal form for k-variable sentences: aux relations plus two clause shapes."""

from .model import (
    Clause,
    ClauseShape,
    MatrixLiteral,
    NormalizationError,
    NormalizedSentence,
    VariableBudgetExceeded,
    dnf_terms,
)
from .normalize import free_in_order, normalize
from .verify import normalized_to_sentence, verify_shape

__all__ = [
    "Clause",
    "ClauseShape",
    "MatrixLiteral",
    "NormalizationError",
    "NormalizedSentence",
    "VariableBudgetExceeded",
    "dnf_terms",
    "free_in_order",
    "normalize",
    "normalized_to_sentence",
    "verify_shape",
]
