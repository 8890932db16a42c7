from __future__ import annotations

import itertools
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from spectra.logic.syntax import (
    And,
    Atom,
    Eq,
    Exists,
    Forall,
    Formula,
    Not,
    Or,
    RelationSymbol,
    Vocabulary,
    conj,
    disj,
)
from spectra.logic.transforms import distinct_variable_count, to_negation_normal_form

from .model import (
    Clause,
    NormalizationError,
    NormalizedSentence,
    VariableBudgetExceeded,
)

logger = logging.getLogger(__name__)

AUX_BASENAME = "Aux"


def free_in_order(f: Formula) -> Tuple[str, ...]:
    """Free variables of ``f`` in order of first occurrence, left to right."""
    seen: List[str] = []

    def walk(node: Formula, bound: frozenset) -> None:
        if isinstance(node, Eq):
            names: Sequence[str] = (node.left, node.right)
        elif isinstance(node, Atom):
            names = node.args
        elif isinstance(node, (Forall, Exists)):
            walk(node.body, bound | {node.var})
            return
        else:
            for child in node.children():
                walk(child, bound)
            return
        for name in names:
            if name not in bound and name not in seen:
                seen.append(name)

    walk(f, frozenset())
    return tuple(seen)


def _truth_table_dnf(atoms: Sequence[Formula], predicate) -> Formula:
    """DNF of ``predicate`` over the distinct ``atoms``, one minterm per satisfying row."""
    distinct: List[Formula] = []
    for a in atoms:
        if a not in distinct:
            distinct.append(a)
    minterms: List[Formula] = []
    for row in itertools.product((True, False), repeat=len(distinct)):
        values = dict(zip(distinct, row))
        if predicate(values):
            literals = [a if v else Not(a) for a, v in zip(distinct, row)]
            minterms.append(conj(*literals))
    if not minterms:
        raise NormalizationError("Definition body is unsatisfiable")
    return disj(*minterms)


class _Normalizer:
    def __init__(self, base: Vocabulary):
        self.base = base
        self.auxiliary: List[RelationSymbol] = []
        self.clauses: List[Clause] = []
        self.definitions: List[Tuple[str, Formula]] = []
        self.memo: Dict[Formula, Atom] = {}
        self._counter = 0

    def _fresh(self, theta: Formula) -> Atom:
        while True:
            self._counter += 1
            name = f"{AUX_BASENAME}{self._counter}"
            if name not in self.base:
                break
        args = free_in_order(theta)
        self.auxiliary.append(RelationSymbol(name, len(args)))
        self.definitions.append((name, theta))
        return Atom(name, args)

    def visit(self, theta: Formula) -> Formula:
        """Return the atom standing for ``theta``, emitting its defining clauses."""
        if isinstance(theta, (Atom, Eq)):
            return theta
        cached = self.memo.get(theta)
        if cached is not None:
            return cached
        if isinstance(theta, Not):
            if not isinstance(theta.body, (Atom, Eq)):
                raise NormalizationError("Input is not in negation normal form")
            head = self._fresh(theta)
            matrix = _truth_table_dnf(
                [head, theta.body], lambda v, h=head, b=theta.body: v[h] == (not v[b])
            )
            self.clauses.append(Clause.universal_clause(head.args, matrix, "negated-atom"))
        elif isinstance(theta, (And, Or)):
            head = self._binary(theta)
        elif isinstance(theta, Forall):
            inner = self.visit(theta.body)
            head = self._fresh(theta)
            self.clauses.append(
                Clause.universal_clause(
                    head.args + (theta.var,), disj(Not(head), inner), "forall-down"
                )
            )
            self.clauses.append(
                Clause.existential_clause(
                    head.args, theta.var, disj(head, _negate(inner)), "forall-up"
                )
            )
        elif isinstance(theta, Exists):
            inner = self.visit(theta.body)
            head = self._fresh(theta)
            self.clauses.append(
                Clause.universal_clause(
                    head.args + (theta.var,), disj(_negate(inner), head), "exists-up"
                )
            )
            self.clauses.append(
                Clause.existential_clause(
                    head.args, theta.var, disj(Not(head), inner), "exists-down"
                )
            )
        else:
            raise NormalizationError(f"Unexpected node {type(theta).__name__} after NNF")
        self.memo[theta] = head
        return head

    def _binary(self, theta: Formula) -> Atom:
        operands = theta.operands  # type: ignore[attr-defined]
        kind = type(theta)
        left = self.visit(operands[0])
        current: Formula = operands[0]
        head: Optional[Atom] = None
        for operand in operands[1:]:
            right = self.visit(operand)
            current = kind((current, operand))
            cached = self.memo.get(current)
            if cached is not None:
                head, left = cached, cached
                continue
            head = self._fresh(current)
            self.clauses.append(
                Clause.universal_clause(
                    head.args, self._connective(head, left, right, kind is And), "connective"
                )
            )
            self.memo[current] = head
            left = head
        assert head is not None
        return head

    @staticmethod
    def _connective(head: Formula, left: Formula, right: Formula, is_and: bool) -> Formula:
        def holds(v) -> bool:
            body = (v[left] and v[right]) if is_and else (v[left] or v[right])
            return v[head] == body

        return _truth_table_dnf([head, left, right], holds)

    def root(self, g: Formula) -> Atom:
        top = self.visit(g)
        if isinstance(top, Atom) and top.relation not in self.base:
            return top
        # The whole sentence is a single atom: R <-> A through the connective case.
        head = self._fresh(g)
        matrix = _truth_table_dnf([head, top], lambda v, h=head, t=top: v[h] == v[t])
        self.clauses.append(Clause.universal_clause(head.args, matrix, "connective"))
        return head


def _negate(f: Formula) -> Formula:
    return f.body if isinstance(f, Not) else Not(f)


def normalize(
    f: Formula, k: Optional[int] = None, base: Optional[Vocabulary] = None
) -> NormalizedSentence:
    """Rewrite a sentence as aux relations plus clauses of the two normal shapes.

    Every subformula theta of the negation normal form gets a relation
    ``R_theta`` over its free variables (atoms stand for themselves) and
    clauses stating ``R_theta <-> theta`` one level deep. The sentence holds
    in a structure iff some interpretation of the aux relations satisfies
    every clause.
    """
    if f.free_variables:
        raise NormalizationError(
            f"normalize() needs a sentence; free variable(s) {sorted(f.free_variables)}"
        )
    count = distinct_variable_count(f)
    budget = count if k is None else k
    if count > budget:
        raise VariableBudgetExceeded(f"Sentence uses {count} variables, budget is {budget}")
    if base is None:
        base = Vocabulary(tuple(sorted(f.relation_symbols, key=lambda s: s.name)))
    g = to_negation_normal_form(f)
    normalizer = _Normalizer(base)
    root = normalizer.root(g)
    normalizer.clauses.append(Clause.universal_clause((), root, "root"))
    logger.debug(
        "Normalized sentence: %d aux relation(s), %d clause(s)",
        len(normalizer.auxiliary),
        len(normalizer.clauses),
    )
    return NormalizedSentence(
        base=base,
        auxiliary=tuple(normalizer.auxiliary),
        clauses=tuple(normalizer.clauses),
        root=root.relation,
        k=budget,
        definitions=tuple(normalizer.definitions),
    )


__all__ = ["free_in_order", "normalize"]
