from __future__ import annotations

from typing import FrozenSet, Iterator, Mapping

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
    conj,
    disj,
)


def free_variables(f: Formula) -> FrozenSet[str]:
    return f.free_variables


def distinct_variable_count(f: Formula) -> int:
    """Number of distinct variable identifiers in ``f``, bound or free, reuse counted once."""
    return len(f.variables)


def max_arity(f: Formula) -> int:
    return max((symbol.arity for symbol in f.relation_symbols), default=0)


def subformulas(f: Formula) -> Iterator[Formula]:
    """Post-order walk over every node of ``f``."""
    stack = [(f, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            yield node
            continue
        stack.append((node, True))
        for child in reversed(node.children()):
            stack.append((child, False))


def to_negation_normal_form(f: Formula) -> Formula:
    """Push negations onto atoms and eliminate ``->`` and ``<->``.

    Quantified variables are kept, so the distinct-variable count never grows.
    """
    return _nnf(f, True)


def _nnf(f: Formula, positive: bool) -> Formula:
    if isinstance(f, (Eq, Atom)):
        return f if positive else Not(f)
    if isinstance(f, Not):
        return _nnf(f.body, not positive)
    if isinstance(f, (And, Or)):
        parts = [_nnf(op, positive) for op in f.operands]
        as_and = isinstance(f, And) == positive
        return conj(*parts) if as_and else disj(*parts)
    if isinstance(f, Implies):
        if positive:
            return disj(_nnf(f.left, False), _nnf(f.right, True))
        return conj(_nnf(f.left, True), _nnf(f.right, False))
    if isinstance(f, Iff):
        left_pos, left_neg = _nnf(f.left, True), _nnf(f.left, False)
        right_pos, right_neg = _nnf(f.right, True), _nnf(f.right, False)
        if positive:
            return disj(conj(left_pos, right_pos), conj(left_neg, right_neg))
        return disj(conj(left_pos, right_neg), conj(left_neg, right_pos))
    if isinstance(f, Forall):
        body = _nnf(f.body, positive)
        return Forall(f.var, body) if positive else Exists(f.var, body)
    if isinstance(f, Exists):
        body = _nnf(f.body, positive)
        return Exists(f.var, body) if positive else Forall(f.var, body)
    raise TypeError(f"Unknown formula node {type(f).__name__}")


def is_negation_normal_form(f: Formula) -> bool:
    for node in subformulas(f):
        if isinstance(node, (Implies, Iff)):
            return False
        if isinstance(node, Not) and not isinstance(node.body, (Eq, Atom)):
            return False
    return True


def rename_variables(f: Formula, mapping: Mapping[str, str]) -> Formula:
    """Apply a variable bijection to every occurrence, bound and free.

    ``mapping`` must be injective on the variables of ``f``; a bijective
    renaming commutes with binding, so no capture can occur.
    """
    targets = [mapping.get(v, v) for v in f.variables]
    if len(set(targets)) != len(targets):
        raise ValueError("Variable renaming must be injective on the formula's variables")
    return _rename(f, mapping)


def swap_variables(f: Formula, a: str, b: str) -> Formula:
    if a == b:
        return f
    return _rename(f, {a: b, b: a})


def _rename(f: Formula, m: Mapping[str, str]) -> Formula:
    if isinstance(f, Eq):
        return Eq(m.get(f.left, f.left), m.get(f.right, f.right))
    if isinstance(f, Atom):
        return Atom(f.relation, tuple(m.get(v, v) for v in f.args))
    if isinstance(f, Not):
        return Not(_rename(f.body, m))
    if isinstance(f, And):
        return And(tuple(_rename(op, m) for op in f.operands))
    if isinstance(f, Or):
        return Or(tuple(_rename(op, m) for op in f.operands))
    if isinstance(f, Implies):
        return Implies(_rename(f.left, m), _rename(f.right, m))
    if isinstance(f, Iff):
        return Iff(_rename(f.left, m), _rename(f.right, m))
    if isinstance(f, Forall):
        return Forall(m.get(f.var, f.var), _rename(f.body, m))
    if isinstance(f, Exists):
        return Exists(m.get(f.var, f.var), _rename(f.body, m))
    raise TypeError(f"Unknown formula node {type(f).__name__}")


__all__ = [
    "distinct_variable_count",
    "free_variables",
    "is_negation_normal_form",
    "max_arity",
    "rename_variables",
    "subformulas",
    "swap_variables",
    "to_negation_normal_form",
]
