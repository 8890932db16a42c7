"""Direct instantiation of arbitrary sentences into conjunction-of-DNF form.

Quantifiers are expanded over ``[N]``, equality and relations interpreted by a
fixed structure are folded to constants, and the resulting negation-normal tree
is cut into DNF blocks. An ``Or`` whose ``And`` children would distribute past
``distribute_cap`` terms is split along its widest ``And``; remaining wide
children are replaced by definitional atoms ``d`` with ``d -> child`` (positive
occurrences only), which keeps the result equisatisfiable.
"""

from __future__ import annotations

import logging
from typing import Dict, FrozenSet, List, Optional, Tuple, Union

from spectra.logic.structures import FiniteStructure
from spectra.logic.syntax import (
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
    VocabularyError,
)

from .atoms import AtomTable, Block, GroundAtom, GroundFormula, normalize_block

logger = logging.getLogger(__name__)

DEFAULT_DISTRIBUTE_CAP = 64

_AND, _OR = "&", "|"
Node = Union[bool, int, Tuple[str, Tuple["Node", ...]]]
TermSet = FrozenSet[int]


class _Grounder:
    def __init__(self, n: int, fixed: Optional[FiniteStructure], distribute_cap: int):
        self.n = n
        self.fixed = fixed
        self.fixed_names = set(fixed.vocabulary.names) if fixed is not None else set()
        self.cap = distribute_cap
        self.table = AtomTable()
        self.env: Dict[str, int] = {}

    # Instantiation -------------------------------------------------------

    def ground(self, f: Formula, positive: bool) -> Node:
        if isinstance(f, Atom):
            values = tuple(self.env[v] for v in f.args)
            if f.relation in self.fixed_names:
                truth = self.fixed.holds(f.relation, values)  # type: ignore[union-attr]
                return truth == positive
            index = self.table.intern(GroundAtom(f.relation, values))
            return index if positive else -index
        if isinstance(f, Eq):
            return (self.env[f.left] == self.env[f.right]) == positive
        if isinstance(f, Not):
            return self.ground(f.body, not positive)
        if isinstance(f, (And, Or)):
            kind = _AND if isinstance(f, And) == positive else _OR
            return self._combine(kind, ((op, positive) for op in f.operands))
        if isinstance(f, Implies):
            if positive:
                return self._combine(_OR, ((f.left, False), (f.right, True)))
            return self._combine(_AND, ((f.left, True), (f.right, False)))
        if isinstance(f, Iff):
            if positive:
                first = self._combine(_OR, ((f.left, False), (f.right, True)))
                second = self._combine(_OR, ((f.left, True), (f.right, False)))
            else:
                first = self._combine(_OR, ((f.left, True), (f.right, True)))
                second = self._combine(_OR, ((f.left, False), (f.right, False)))
            return self._join(_AND, [first, second])
        if isinstance(f, (Forall, Exists)):
            kind = _AND if isinstance(f, Forall) == positive else _OR
            return self._quantify(kind, f.var, f.body, positive)
        raise TypeError(f"Unknown formula node {type(f).__name__}")

    def _combine(self, kind: str, parts) -> Node:
        absorbing = kind == _OR
        collected: List[Node] = []
        for sub, polarity in parts:
            node = self.ground(sub, polarity)
            if node is absorbing:
                return absorbing
            if node is not (not absorbing):
                collected.append(node)
        return self._join(kind, collected)

    def _quantify(self, kind: str, var: str, body: Formula, positive: bool) -> Node:
        absorbing = kind == _OR
        saved = self.env.get(var)
        collected: List[Node] = []
        try:
            for value in range(self.n):
                self.env[var] = value
                node = self.ground(body, positive)
                if node is absorbing:
                    return absorbing
                if node is not (not absorbing):
                    collected.append(node)
        finally:
            if saved is None:
                self.env.pop(var, None)
            else:
                self.env[var] = saved
        return self._join(kind, collected)

    @staticmethod
    def _join(kind: str, nodes: List[Node]) -> Node:
        absorbing = kind == _OR
        flat: List[Node] = []
        for node in nodes:
            if node is absorbing:
                return absorbing
            if node is (not absorbing):
                continue
            if isinstance(node, tuple) and node[0] == kind:
                flat.extend(node[1])
            else:
                flat.append(node)
        if not flat:
            return not absorbing
        if len(flat) == 1:
            return flat[0]
        return (kind, tuple(flat))

    # Block construction ---------------------------------------------------

    def terms(self, node: Node) -> Optional[List[TermSet]]:
        """DNF expansion of ``node`` or None when it exceeds the distribution cap."""
        if isinstance(node, bool):
            return [frozenset()] if node else []
        if isinstance(node, int):
            return [frozenset((node,))]
        kind, children = node
        if kind == _OR:
            out: List[TermSet] = []
            for child in children:
                expanded = self.terms(child)
                if expanded is None:
                    return None
                out.extend(expanded)
            return out
        acc: List[TermSet] = [frozenset()]
        for child in children:
            expanded = self.terms(child)
            if expanded is None:
                return None
            acc = [
                merged
                for left in acc
                for right in expanded
                for merged in (left | right,)
                if not any(-lit in merged for lit in right)
            ]
            if len(acc) > self.cap:
                return None
        return acc

    def blocks(self, node: Node) -> List[List[TermSet]]:
        if node is True:
            return []
        if node is False:
            return [[]]
        if isinstance(node, tuple) and node[0] == _AND:
            out: List[List[TermSet]] = []
            for child in node[1]:
                out.extend(self.blocks(child))
            return out
        return self._or_blocks([], [node])

    def _or_blocks(self, prefix: List[TermSet], rest: List[Node]) -> List[List[TermSet]]:
        terms = list(prefix)
        hard: List[Tuple[str, Tuple[Node, ...]]] = []
        pending = list(rest)
        while pending:
            node = pending.pop(0)
            if isinstance(node, tuple) and node[0] == _OR:
                pending[:0] = list(node[1])
                continue
            expanded = self.terms(node)
            if expanded is None:
                hard.append(node)  # type: ignore[arg-type]
            else:
                terms.extend(expanded)
        if not hard:
            return [terms]
        hard.sort(key=lambda h: len(h[1]), reverse=True)
        split, others = hard[0], hard[1:]
        out: List[List[TermSet]] = []
        for other in others:
            definition = self.table.fresh()
            terms.append(frozenset((definition,)))
            out.extend(self._or_blocks([frozenset((-definition,))], [other]))
        for child in split[1]:
            out.extend(self._or_blocks(terms, [child]))
        return out


def ground_sentence(
    f: Formula,
    n: int,
    fixed: Optional[FiniteStructure] = None,
    distribute_cap: int = DEFAULT_DISTRIBUTE_CAP,
) -> GroundFormula:
    """Ground a sentence over ``[n]`` into an equisatisfiable conjunction of DNF blocks.

    Relations of ``fixed`` (whose size must be ``n``) are interpreted by it;
    every other relation becomes free propositional atoms.
    """
    if f.free_variables:
        raise ValueError(f"Cannot ground a formula with free variables {sorted(f.free_variables)}")
    if fixed is not None:
        if fixed.size != n:
            raise ValueError(f"Fixed structure has size {fixed.size}, expected {n}")
        for symbol in f.relation_symbols:
            known = fixed.vocabulary.arity(symbol.name)
            if known is not None and known != symbol.arity:
                raise VocabularyError(
                    f"Relation '{symbol.name}' has arity {symbol.arity}, fixed as {known}"
                )
    grounder = _Grounder(n, fixed, distribute_cap)
    tree = grounder.ground(f, True)
    blocks: List[Block] = []
    for raw in grounder.blocks(tree):
        block = normalize_block(raw)
        if block is not None:
            blocks.append(block)
    g = grounder.table.finish(n, blocks)
    logger.debug("Direct grounding at N=%d: %d atoms, %d blocks", n, len(g.atoms), len(g.blocks))
    return g


__all__ = ["DEFAULT_DISTRIBUTE_CAP", "ground_sentence"]
