from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field
from functools import cmp_to_key
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .atoms import Block, GroundFormula, Literal

logger = logging.getLogger(__name__)


@dataclass
class ComparisonCounter:
    count: int = 0


def literal_set_consistent(
    literals: Iterable[Literal], counter: Optional[ComparisonCounter] = None
) -> bool:
    """True iff no atom occurs with both signs: sort by (atom, sign), then scan neighbours."""

    def compare(a: Literal, b: Literal) -> int:
        if counter is not None:
            counter.count += 1
        return (abs(a) - abs(b)) or (a - b)

    ordered = sorted(literals, key=cmp_to_key(compare))
    for previous, current in zip(ordered, ordered[1:]):
        if counter is not None:
            counter.count += 1
        if previous == -current:
            return False
    return True


@dataclass
class SatResult:
    satisfiable: bool
    witness: Dict[int, bool] = field(default_factory=dict)
    decisions: int = 0
    backtracks: int = 0

    def __bool__(self) -> bool:
        return self.satisfiable

    def chosen_literals(self) -> List[Literal]:
        return [atom if value else -atom for atom, value in sorted(self.witness.items())]


class BacktrackingSolver:
    """Chooses one disjunct per conjunct, keeping the chosen literal set consistent.

    The next conjunct is always an unsatisfied one with the fewest disjuncts
    still consistent with the trail, so single-choice conjuncts are taken first.
    Backtracking is chronological; there is no learning and no restart.
    """

    def __init__(self, g: GroundFormula):
        self.g = g
        self.blocks: List[Block] = list(g.blocks)
        atom_count = len(g.atoms)
        self.value: List[Optional[bool]] = [None] * (atom_count + 1)
        self.occurrences: List[List[Tuple[int, int, bool]]] = [[] for _ in range(atom_count + 1)]
        self.false_count: List[List[int]] = []
        self.true_count: List[List[int]] = []
        self.alive: List[int] = []
        self.satisfied: List[int] = []
        for b, block in enumerate(self.blocks):
            self.false_count.append([0] * len(block))
            self.true_count.append([0] * len(block))
            self.alive.append(len(block))
            self.satisfied.append(0)
            for t, term in enumerate(block):
                for literal in term:
                    self.occurrences[abs(literal)].append((b, t, literal > 0))
        self.heap: List[Tuple[int, int]] = [(len(block), b) for b, block in enumerate(self.blocks)]
        heapq.heapify(self.heap)
        self.trail: List[int] = []
        self.dead_blocks = sum(1 for block in self.blocks if not block)

    def _assign(self, atom: int, value: bool) -> None:
        self.value[atom] = value
        self.trail.append(atom)
        for b, t, sign in self.occurrences[atom]:
            if sign == value:
                self.true_count[b][t] += 1
                if self.true_count[b][t] == len(self.blocks[b][t]):
                    self.satisfied[b] += 1
            else:
                self.false_count[b][t] += 1
                if self.false_count[b][t] == 1:
                    self.alive[b] -= 1
                    if self.alive[b] == 0 and self.satisfied[b] == 0:
                        self.dead_blocks += 1
                    heapq.heappush(self.heap, (self.alive[b], b))

    def _undo_to(self, length: int) -> None:
        while len(self.trail) > length:
            atom = self.trail.pop()
            value = self.value[atom]
            self.value[atom] = None
            for b, t, sign in self.occurrences[atom]:
                if sign == value:
                    if self.true_count[b][t] == len(self.blocks[b][t]):
                        self.satisfied[b] -= 1
                        if self.satisfied[b] == 0:
                            heapq.heappush(self.heap, (self.alive[b], b))
                    self.true_count[b][t] -= 1
                else:
                    self.false_count[b][t] -= 1
                    if self.false_count[b][t] == 0:
                        if self.alive[b] == 0 and self.satisfied[b] == 0:
                            self.dead_blocks -= 1
                        self.alive[b] += 1
                        heapq.heappush(self.heap, (self.alive[b], b))

    def _apply(self, b: int, t: int) -> None:
        for literal in self.blocks[b][t]:
            atom = abs(literal)
            if self.value[atom] is None:
                self._assign(atom, literal > 0)

    def _next_block(self) -> Optional[int]:
        while self.heap:
            alive, b = self.heap[0]
            if self.satisfied[b] > 0 or alive != self.alive[b]:
                heapq.heappop(self.heap)
                continue
            return b
        return None

    def _live_terms(self, b: int) -> List[int]:
        return [t for t in range(len(self.blocks[b])) if self.false_count[b][t] == 0]

    def solve(self) -> SatResult:
        decisions = backtracks = 0
        # Each choice point: (block, live terms, next position, trail length).
        stack: List[Tuple[int, List[int], int, int]] = []
        while True:
            if self.dead_blocks:
                while stack:
                    b, terms, position, length = stack.pop()
                    self._undo_to(length)
                    backtracks += 1
                    if position < len(terms):
                        stack.append((b, terms, position + 1, length))
                        self._apply(b, terms[position])
                        decisions += 1
                        break
                else:
                    logger.debug("Unsatisfiable after %d decision(s)", decisions)
                    return SatResult(False, decisions=decisions, backtracks=backtracks)
                continue
            b = self._next_block()
            if b is None:
                witness = {
                    atom: bool(self.value[atom]) for atom in range(1, len(self.g.atoms) + 1)
                }
                logger.debug("Satisfiable after %d decision(s)", decisions)
                return SatResult(True, witness, decisions, backtracks)
            terms = self._live_terms(b)
            stack.append((b, terms, 1, len(self.trail)))
            self._apply(b, terms[0])
            decisions += 1


def satisfiable(g: GroundFormula) -> SatResult:
    return BacktrackingSolver(g).solve()


def iter_models(
    g: GroundFormula, project: Optional[Sequence[int]] = None
) -> Iterator[Dict[int, bool]]:
    """Yield every distinct assignment to ``project`` (all atoms by default) that extends to a model."""
    atoms = list(project) if project is not None else list(range(1, len(g.atoms) + 1))
    blocks = list(g.blocks)
    while True:
        candidate = GroundFormula(g.domain_size, g.atoms, blocks, g.size)
        result = satisfiable(candidate)
        if not result:
            return
        model = {atom: result.witness[atom] for atom in atoms}
        yield model
        if not atoms:
            return
        blocking = tuple((-atom if value else atom,) for atom, value in model.items())
        blocks = blocks + [blocking]


def truth_table_satisfiable(g: GroundFormula) -> bool:
    """Exhaustive check over all ``2^atoms`` assignments."""
    count = len(g.atoms)
    for mask in range(1 << count):
        assignment = {i + 1: bool(mask >> i & 1) for i in range(count)}
        if g.holds_under(assignment):
            return True
    return False


__all__ = [
    "BacktrackingSolver",
    "ComparisonCounter",
    "SatResult",
    "iter_models",
    "literal_set_consistent",
    "satisfiable",
    "truth_table_satisfiable",
]
