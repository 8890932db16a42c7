from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from spectra.logic.structures import FiniteStructure
from spectra.normalizer.model import Clause, NormalizedSentence

from .atoms import AtomTable, Block, GroundAtom, GroundFormula, normalize_block

logger = logging.getLogger(__name__)

_EQ, _FIXED, _FREE = 0, 1, 2


@dataclass(frozen=True)
class _CompiledLiteral:
    kind: int
    relation: Optional[str]
    positions: Tuple[int, ...]
    positive: bool


def _compile(clause: Clause, fixed: Optional[FiniteStructure]) -> List[List[_CompiledLiteral]]:
    slots = {var: i for i, var in enumerate(clause.prefix)}
    compiled: List[List[_CompiledLiteral]] = []
    for term in clause.terms:
        row: List[_CompiledLiteral] = []
        for literal in term:
            missing = [a for a in literal.args if a not in slots]
            if missing:
                raise ValueError(f"Matrix variable(s) {missing} not bound by the clause prefix")
            positions = tuple(slots[a] for a in literal.args)
            if literal.relation is None:
                kind = _EQ
            elif fixed is not None and literal.relation in fixed.vocabulary:
                kind = _FIXED
            else:
                kind = _FREE
            row.append(_CompiledLiteral(kind, literal.relation, positions, literal.positive))
        compiled.append(row)
    return compiled


def _instantiate(
    terms: Sequence[Sequence[_CompiledLiteral]],
    env: Tuple[int, ...],
    table: AtomTable,
    fixed: Optional[FiniteStructure],
) -> Iterator[Tuple[int, ...]]:
    for term in terms:
        out: List[int] = []
        alive = True
        for lit in term:
            values = tuple(env[p] for p in lit.positions)
            if lit.kind == _EQ:
                truth = values[0] == values[1]
            elif lit.kind == _FIXED:
                truth = fixed.holds(lit.relation, values)  # type: ignore[union-attr, arg-type]
            else:
                index = table.intern(GroundAtom(lit.relation, values))  # type: ignore[arg-type]
                out.append(index if lit.positive else -index)
                continue
            if truth != lit.positive:
                alive = False
                break
        if alive:
            yield tuple(out)


def _clause_blocks(
    clause: Clause, n: int, table: AtomTable, fixed: Optional[FiniteStructure]
) -> Iterator[Block]:
    terms = _compile(clause, fixed)
    width = len(clause.universal)
    witness = clause.existential is not None
    for values in itertools.product(range(n), repeat=width):
        if witness:
            raw = [
                term
                for last in range(n)
                for term in _instantiate(terms, values + (last,), table, fixed)
            ]
        else:
            raw = list(_instantiate(terms, values, table, fixed))
        block = normalize_block(raw)
        if block is not None:
            yield block


def ground(
    ns: NormalizedSentence, n: int, fixed: Optional[FiniteStructure] = None
) -> GroundFormula:
    """Instantiate every clause over ``[n]``.

    Equality literals, and literals over relations interpreted by ``fixed``,
    are evaluated away; the remaining atoms are free propositional variables.
    """
    if n < 1:
        raise ValueError("Domain size must be positive")
    if fixed is not None and fixed.size != n:
        raise ValueError(f"Fixed structure has size {fixed.size}, expected {n}")
    table = AtomTable()
    blocks: List[Block] = []
    for clause in ns.clauses:
        blocks.extend(_clause_blocks(clause, n, table, fixed))
    g = table.finish(n, blocks)
    logger.debug(
        "Grounded %d clause(s) at N=%d: %d atoms, size %d", len(ns.clauses), n, len(g.atoms), g.size
    )
    return g


def measure_size(
    ns: NormalizedSentence, n: int, fixed: Optional[FiniteStructure] = None
) -> int:
    """Literal count of ``ground(ns, n)`` computed block by block without keeping blocks."""
    table = AtomTable()
    total = 0
    for clause in ns.clauses:
        for block in _clause_blocks(clause, n, table, fixed):
            total += sum(len(term) for term in block)
    return total


def size_bound(ns: NormalizedSentence, n: int) -> int:
    """Literal occurrences before block simplification: each matrix times ``n`` per prefix variable.

    An upper bound on :func:`measure_size`, reached exactly when no block simplifies.
    Existential clauses repeat their head-only terms once per witness value, and
    those repeats are merged.
    """
    return sum(clause.literal_count * n ** len(clause.prefix) for clause in ns.clauses)


__all__ = ["ground", "measure_size", "size_bound"]
