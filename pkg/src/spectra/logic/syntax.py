from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Iterator, Optional, Sequence, Tuple, Union

from spectra.errors import SpectraError

IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class VocabularyError(SpectraError):
    """Raised when a relation symbol is undeclared, redeclared or used with the wrong arity."""


@dataclass(frozen=True)
class RelationSymbol:
    name: str
    arity: int

    def __post_init__(self) -> None:
        if not IDENTIFIER.match(self.name):
            raise VocabularyError(f"Invalid relation name '{self.name}'")
        if self.arity < 0:
            raise VocabularyError(f"Relation '{self.name}' has negative arity {self.arity}")

    def __str__(self) -> str:
        return f"{self.name}/{self.arity}"


@dataclass(frozen=True)
class Vocabulary:
    """Ordered relational vocabulary. Equality is logical and never listed here."""

    relations: Tuple[RelationSymbol, ...] = ()

    def __post_init__(self) -> None:
        seen = set()
        for symbol in self.relations:
            if symbol.name in seen:
                raise VocabularyError(f"Relation '{symbol.name}' declared twice")
            seen.add(symbol.name)

    @classmethod
    def of(cls, *pairs: Tuple[str, int]) -> "Vocabulary":
        return cls(tuple(RelationSymbol(name, arity) for name, arity in pairs))

    @cached_property
    def _index(self) -> Dict[str, int]:
        return {symbol.name: symbol.arity for symbol in self.relations}

    def arity(self, name: str) -> Optional[int]:
        return self._index.get(name)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def __iter__(self) -> Iterator[RelationSymbol]:
        return iter(self.relations)

    def __len__(self) -> int:
        return len(self.relations)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(symbol.name for symbol in self.relations)

    def extend(self, symbols: Iterable[RelationSymbol]) -> "Vocabulary":
        """Return a vocabulary with ``symbols`` appended; repeated identical symbols are skipped."""
        merged = list(self.relations)
        for symbol in symbols:
            known = self.arity(symbol.name)
            if known is None and all(s.name != symbol.name for s in merged):
                merged.append(symbol)
            elif known is not None and known != symbol.arity:
                raise VocabularyError(
                    f"Relation '{symbol.name}' has arity {known}, cannot redeclare as {symbol.arity}"
                )
        return Vocabulary(tuple(merged))

    def restrict(self, names: Iterable[str]) -> "Vocabulary":
        wanted = set(names)
        return Vocabulary(tuple(s for s in self.relations if s.name in wanted))


class Formula:
    """Base class of the first-order AST. Nodes are frozen dataclasses."""

    @cached_property
    def free_variables(self) -> FrozenSet[str]:
        return _free(self)

    @cached_property
    def variables(self) -> FrozenSet[str]:
        return _all_variables(self)

    @cached_property
    def relation_symbols(self) -> FrozenSet[RelationSymbol]:
        return _relations(self)

    def children(self) -> Tuple["Formula", ...]:
        return ()


@dataclass(frozen=True)
class Eq(Formula):
    left: str
    right: str


@dataclass(frozen=True)
class Atom(Formula):
    relation: str
    args: Tuple[str, ...] = ()

    @property
    def arity(self) -> int:
        return len(self.args)


@dataclass(frozen=True)
class Not(Formula):
    body: Formula

    def children(self) -> Tuple[Formula, ...]:
        return (self.body,)


@dataclass(frozen=True)
class And(Formula):
    operands: Tuple[Formula, ...]

    def __post_init__(self) -> None:
        if len(self.operands) < 2:
            raise ValueError("And needs at least two operands")

    def children(self) -> Tuple[Formula, ...]:
        return self.operands


@dataclass(frozen=True)
class Or(Formula):
    operands: Tuple[Formula, ...]

    def __post_init__(self) -> None:
        if len(self.operands) < 2:
            raise ValueError("Or needs at least two operands")

    def children(self) -> Tuple[Formula, ...]:
        return self.operands


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula

    def children(self) -> Tuple[Formula, ...]:
        return (self.left, self.right)


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula

    def children(self) -> Tuple[Formula, ...]:
        return (self.left, self.right)


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula

    def children(self) -> Tuple[Formula, ...]:
        return (self.body,)


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula

    def children(self) -> Tuple[Formula, ...]:
        return (self.body,)


Quantifier = Union[Forall, Exists]
AtomicFormula = Union[Eq, Atom]


def _free(f: Formula) -> FrozenSet[str]:
    if isinstance(f, Eq):
        return frozenset((f.left, f.right))
    if isinstance(f, Atom):
        return frozenset(f.args)
    if isinstance(f, (Forall, Exists)):
        return f.body.free_variables - {f.var}
    result: FrozenSet[str] = frozenset()
    for child in f.children():
        result = result | child.free_variables
    return result


def _all_variables(f: Formula) -> FrozenSet[str]:
    if isinstance(f, Eq):
        return frozenset((f.left, f.right))
    if isinstance(f, Atom):
        return frozenset(f.args)
    if isinstance(f, (Forall, Exists)):
        return f.body.variables | {f.var}
    result: FrozenSet[str] = frozenset()
    for child in f.children():
        result = result | child.variables
    return result


def _relations(f: Formula) -> FrozenSet[RelationSymbol]:
    if isinstance(f, Atom):
        return frozenset((RelationSymbol(f.relation, f.arity),))
    if isinstance(f, Eq):
        return frozenset()
    result: FrozenSet[RelationSymbol] = frozenset()
    for child in f.children():
        result = result | child.relation_symbols
    return result


def is_literal(f: Formula) -> bool:
    return isinstance(f, (Eq, Atom)) or (isinstance(f, Not) and isinstance(f.body, (Eq, Atom)))


# Builders. ``conj``/``disj`` flatten nested operands of the same kind and collapse singletons.


def conj(*parts: Formula) -> Formula:
    flat = _flatten(parts, And)
    if not flat:
        raise ValueError("conj() needs at least one operand")
    return flat[0] if len(flat) == 1 else And(tuple(flat))


def disj(*parts: Formula) -> Formula:
    flat = _flatten(parts, Or)
    if not flat:
        raise ValueError("disj() needs at least one operand")
    return flat[0] if len(flat) == 1 else Or(tuple(flat))


def _flatten(parts: Sequence[Formula], kind: type) -> list:
    flat: list = []
    for part in parts:
        if isinstance(part, kind):
            flat.extend(part.operands)  # type: ignore[attr-defined]
        else:
            flat.append(part)
    return flat


def neg(f: Formula) -> Formula:
    return f.body if isinstance(f, Not) else Not(f)


def implies(guards: Union[Formula, Sequence[Formula]], body: Formula) -> Formula:
    """``guards -> body``; an empty guard list returns ``body`` unchanged."""
    if isinstance(guards, Formula):
        return Implies(guards, body)
    if not guards:
        return body
    return Implies(conj(*guards), body)


def iff(left: Formula, right: Formula) -> Formula:
    return Iff(left, right)


def forall(variables: Union[str, Sequence[str]], body: Formula) -> Formula:
    names = (variables,) if isinstance(variables, str) else tuple(variables)
    for name in reversed(names):
        body = Forall(name, body)
    return body


def exists(variables: Union[str, Sequence[str]], body: Formula) -> Formula:
    names = (variables,) if isinstance(variables, str) else tuple(variables)
    for name in reversed(names):
        body = Exists(name, body)
    return body


def atom(relation: str, *args: str) -> Atom:
    return Atom(relation, tuple(args))


__all__ = [
    "And",
    "Atom",
    "AtomicFormula",
    "Eq",
    "Exists",
    "Forall",
    "Formula",
    "IDENTIFIER",
    "Iff",
    "Implies",
    "Not",
    "Or",
    "Quantifier",
    "RelationSymbol",
    "Vocabulary",
    "VocabularyError",
    "atom",
    "conj",
    "disj",
    "exists",
    "forall",
    "iff",
    "implies",
    "is_literal",
    "neg",
]
