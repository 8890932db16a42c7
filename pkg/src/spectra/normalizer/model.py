from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from functools import cached_property
from typing import List, Optional, Tuple

from spectra.errors import SpectraError
from spectra.logic.syntax import (
    And,
    Atom,
    Eq,
    Formula,
    Not,
    Or,
    RelationSymbol,
    Vocabulary,
    conj,
    exists,
    forall,
)

FORALL = "forall"
EXISTS = "exists"


class NormalizationError(SpectraError):
    """Raised when a sentence cannot be normalized."""


class VariableBudgetExceeded(NormalizationError):
    """Raised when a sentence uses more distinct variables than the requested bound."""


class ClauseShape(IntEnum):
    UNIVERSAL = 1
    UNIVERSAL_EXISTENTIAL = 2


@dataclass(frozen=True)
class MatrixLiteral:
    """``relation(args)`` or, when ``relation`` is None, the equality ``args[0] = args[1]``."""

    relation: Optional[str]
    args: Tuple[str, ...]
    positive: bool = True

    @classmethod
    def from_formula(cls, f: Formula) -> "MatrixLiteral":
        positive = True
        if isinstance(f, Not):
            positive, f = False, f.body
        if isinstance(f, Eq):
            return cls(None, (f.left, f.right), positive)
        if isinstance(f, Atom):
            return cls(f.relation, f.args, positive)
        raise NormalizationError(f"Not a literal: {f!r}")

    def to_formula(self) -> Formula:
        base: Formula = (
            Eq(self.args[0], self.args[1]) if self.relation is None else Atom(self.relation, self.args)
        )
        return base if self.positive else Not(base)


@dataclass(frozen=True)
class Clause:
    """A quantifier prefix over a quantifier-free matrix.

    Clauses produced by :func:`normalize` always have a ``forall*`` prefix
    (shape 1) or ``forall* exists`` prefix (shape 2) and a DNF matrix.
    Hand-built clauses may violate that; :func:`verify_shape` reports it.
    """

    shape: ClauseShape
    quantifiers: Tuple[Tuple[str, str], ...]
    matrix: Formula
    origin: str = ""

    @property
    def prefix(self) -> Tuple[str, ...]:
        return tuple(var for _, var in self.quantifiers)

    @property
    def universal(self) -> Tuple[str, ...]:
        if self.shape is ClauseShape.UNIVERSAL_EXISTENTIAL:
            return self.prefix[:-1]
        return self.prefix

    @property
    def existential(self) -> Optional[str]:
        if self.shape is ClauseShape.UNIVERSAL_EXISTENTIAL:
            return self.prefix[-1]
        return None

    @property
    def variables(self) -> frozenset:
        return frozenset(self.prefix) | self.matrix.variables

    @cached_property
    def terms(self) -> Tuple[Tuple[MatrixLiteral, ...], ...]:
        """DNF terms of the matrix; raises when the matrix is not in DNF."""
        terms = dnf_terms(self.matrix)
        if terms is None:
            raise NormalizationError(f"Clause matrix is not in DNF: {self.matrix!r}")
        return terms

    @property
    def literal_count(self) -> int:
        return sum(len(term) for term in self.terms)

    def to_formula(self) -> Formula:
        body = self.matrix
        for kind, var in reversed(self.quantifiers):
            body = forall(var, body) if kind == FORALL else exists(var, body)
        return body

    @classmethod
    def universal_clause(
        cls, variables: Tuple[str, ...], matrix: Formula, origin: str = ""
    ) -> "Clause":
        return cls(ClauseShape.UNIVERSAL, tuple((FORALL, v) for v in variables), matrix, origin)

    @classmethod
    def existential_clause(
        cls, variables: Tuple[str, ...], witness: str, matrix: Formula, origin: str = ""
    ) -> "Clause":
        quantifiers = tuple((FORALL, v) for v in variables) + ((EXISTS, witness),)
        return cls(ClauseShape.UNIVERSAL_EXISTENTIAL, quantifiers, matrix, origin)


def dnf_terms(matrix: Formula) -> Optional[Tuple[Tuple[MatrixLiteral, ...], ...]]:
    disjuncts = matrix.operands if isinstance(matrix, Or) else (matrix,)
    result: List[Tuple[MatrixLiteral, ...]] = []
    for disjunct in disjuncts:
        literals = disjunct.operands if isinstance(disjunct, And) else (disjunct,)
        term: List[MatrixLiteral] = []
        for literal in literals:
            if isinstance(literal, (Atom, Eq)) or (
                isinstance(literal, Not) and isinstance(literal.body, (Atom, Eq))
            ):
                term.append(MatrixLiteral.from_formula(literal))
            else:
                return None
        result.append(tuple(term))
    return tuple(result)


@dataclass(frozen=True)
class NormalizedSentence:
    """Existential relation list plus a clause list in the two normal shapes."""

    base: Vocabulary
    auxiliary: Tuple[RelationSymbol, ...]
    clauses: Tuple[Clause, ...]
    root: Optional[str] = None
    k: int = 0
    definitions: Tuple[Tuple[str, Formula], ...] = field(default=(), compare=False)

    @property
    def vocabulary(self) -> Vocabulary:
        return self.base.extend(self.auxiliary)

    @property
    def auxiliary_names(self) -> Tuple[str, ...]:
        return tuple(symbol.name for symbol in self.auxiliary)

    def to_formula(self) -> Formula:
        return conj(*(clause.to_formula() for clause in self.clauses))


__all__ = [
    "Clause",
    "ClauseShape",
    "EXISTS",
    "FORALL",
    "MatrixLiteral",
    "NormalizationError",
    "NormalizedSentence",
    "VariableBudgetExceeded",
    "dnf_terms",
]
