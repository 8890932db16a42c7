"""First-order syntax, finite structures and direct evaluation."""

from .semantics import UnboundVariableError, check_vocabulary, evaluate
from .structures import Assignment, FiniteStructure, StructureError
from .syntax import (
    And,
    Atom,
    Eq,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    RelationSymbol,
    Vocabulary,
    VocabularyError,
    atom,
    conj,
    disj,
    exists,
    forall,
    iff,
    implies,
    neg,
)
from .transforms import (
    distinct_variable_count,
    free_variables,
    max_arity,
    rename_variables,
    swap_variables,
    to_negation_normal_form,
)

__all__ = [
    "And",
    "Assignment",
    "Atom",
    "Eq",
    "Exists",
    "FiniteStructure",
    "Forall",
    "Formula",
    "Iff",
    "Implies",
    "Not",
    "Or",
    "RelationSymbol",
    "StructureError",
    "UnboundVariableError",
    "Vocabulary",
    "VocabularyError",
    "atom",
    "check_vocabulary",
    "conj",
    "disj",
    "distinct_variable_count",
    "evaluate",
    "exists",
    "forall",
    "free_variables",
    "iff",
    "implies",
    "max_arity",
    "neg",
    "rename_variables",
    "swap_variables",
    "to_negation_normal_form",
]
