"""Canonical structures for compiled sentences.

``canonical_structure`` interprets the order and arithmetic relations the way
their axioms force them; ``encode_run`` adds the grid labels of one accepting
run, giving the model whose existence the compiled sentence asserts.
"""

from __future__ import annotations

import math
from typing import Dict, Iterator, Set, Tuple

from spectra.logic.structures import FiniteStructure, Row
from spectra.logic.syntax import Vocabulary
from spectra.reports.schemas import RunStep, RunVerdict
from spectra.textio.machine import TMDocument

from .axioms import step_relations
from .errors import CompilationError
from .grid import Grid, PairedGrid
from .names import (
    ADD,
    BIT,
    DIV,
    DOUBLE,
    FLAT_ARITHMETIC,
    HALF,
    INPUT,
    INPUTAT,
    IS_R,
    LESS_R,
    LESS_R2,
    LT,
    MAX,
    MAXX,
    MIN,
    MINX,
    MINY,
    MUL,
    MULR,
    ORDER_RELATIONS,
    PAIRED_ARITHMETIC,
    PIX,
    PROJECT,
    RCYC,
    SAMEROW,
    STEP_IDLE,
    SUC,
    SUCX,
    SUCY,
    ZEROAT,
    headright_relation,
    state_relation,
    symbol_relation,
)

Relations = Dict[str, Set[Row]]


def _order(n: int) -> Relations:
    return {
        LT: {(a, b) for a in range(n) for b in range(a + 1, n)},
        SUC: {(a, a + 1) for a in range(n - 1)},
        MIN: {(0,)},
        MAX: {(n - 1,)},
    }


def _flat_arithmetic(n: int) -> Relations:
    return {
        DOUBLE: {(2 * y, y) for y in range(n) if 2 * y < n},
        HALF: {(y // 2, y) for y in range(n)},
        DIV: {((n - 1) >> y, y) for y in range(n)},
        BIT: {(y,) for y in range(n) if (n - 1) >> y & 1},
        INPUT: {(y,) for y in range(n) if n >> y & 1},
    }


def _paired_arithmetic(n: int) -> Relations:
    root = math.isqrt(n - 1)
    pairs = [(a + b * root, a, b) for b in range(root) for a in range(root)]
    msb = n.bit_length() - 1

    def cell_bits(bit: int) -> Set[Row]:
        found = set()
        for x in range(n):
            for r, a, _ in pairs:
                c = x * root + a
                if c < n and (n >> c & 1) == bit and (bit or c < msb):
                    found.add((x, r))
        return found

    return {
        ADD: {(x, y, x + y) for x in range(n) for y in range(n) if x + y < n},
        MUL: {(x, y, x * y) for x in range(n) for y in range(n) if x * y < n},
        IS_R: {(root,)},
        LESS_R: {(x,) for x in range(root)},
        LESS_R2: {(x,) for x in range(root * root)},
        PROJECT: set(pairs),
        RCYC: {(a, (a + 1) % root) for a in range(root)},
        SUCX: {(r, (a + 1) % root + b * root) for r, a, b in pairs},
        SUCY: {(r, a + (b + 1) % root * root) for r, a, b in pairs},
        MINX: {(r,) for r, a, _ in pairs if a == 0},
        MINY: {(r,) for r, _, b in pairs if b == 0},
        MAXX: {(r,) for r, a, _ in pairs if a == root - 1},
        SAMEROW: {(r, z) for r, _, b in pairs for z, _, d in pairs if b == d},
        MULR: {(x, x * root) for x in range(n) if x * root < n},
        PIX: {(r, a) for r, a, _ in pairs},
        INPUTAT: cell_bits(1),
        ZEROAT: cell_bits(0),
    }


def canonical_relations(n: int, paired: bool = False) -> Relations:
    relations = _order(n)
    relations.update(_flat_arithmetic(n))
    if paired:
        relations.update(_paired_arithmetic(n))
    return relations


def canonical_vocabulary(paired: bool = False) -> Vocabulary:
    pairs = ORDER_RELATIONS + FLAT_ARITHMETIC + (PAIRED_ARITHMETIC if paired else ())
    return Vocabulary.of(*pairs)


def order_structure(n: int) -> FiniteStructure:
    """The natural order on ``[n]`` with its successor, minimum and maximum."""
    return FiniteStructure(n, Vocabulary.of(*ORDER_RELATIONS), _order(n))


def canonical_structure(n: int, grid: Grid) -> FiniteStructure:
    """Order and arithmetic relations of ``grid``'s construction, as their axioms force them."""
    paired = isinstance(grid, PairedGrid)
    return FiniteStructure(n, canonical_vocabulary(paired), canonical_relations(n, paired))


# Grid coordinates --------------------------------------------------------


def _digits(value: int, n: int, k: int) -> Tuple[int, ...]:
    out = []
    for _ in range(k):
        value, digit = divmod(value, n)
        out.append(digit)
    if value:
        raise CompilationError(f"Coordinate exceeds the {k}-digit range of base {n}")
    return tuple(reversed(out))


def _points(grid: Grid, n: int, cell: int, row: int) -> Row:
    if isinstance(grid, PairedGrid):
        root = math.isqrt(n - 1)
        high_cell, a = divmod(cell, root)
        high_row, b = divmod(row, root)
        return _digits(high_cell, n, grid.k) + _digits(high_row, n, grid.k) + (a + b * root,)
    return _digits(cell, n, grid.k) + _digits(row, n, grid.k)


def _row_points(grid: Grid, n: int, row: int) -> Iterator[Row]:
    if isinstance(grid, PairedGrid):
        root = math.isqrt(n - 1)
        high_row, b = divmod(row, root)
        for a in range(root):
            yield _digits(high_row, n, grid.k) + (a + b * root,)
    else:
        yield _digits(row, n, grid.k)


def _taken(tm: TMDocument, before: RunStep, after: RunStep) -> str:
    """Name of the step relation for the transition leading from ``before`` to ``after``."""
    steps = step_relations(tm)
    if before.state == tm.accept:
        return STEP_IDLE
    reads = tuple(before.tapes[i][h] for i, h in enumerate(before.heads))
    for t in tm.successors(before.state, reads):
        heads = [h + m.delta for h, m in zip(before.heads, t.moves)]
        if t.target == after.state and heads == list(after.heads):
            return steps[t]
    raise CompilationError(f"Run step {after.step} does not follow a transition of {tm.name}")


def encode_run(
    tm: TMDocument,
    verdict: RunVerdict,
    n: int,
    grid: Grid,
    vocabulary: Vocabulary,
) -> FiniteStructure:
    """The canonical structure of size ``n`` plus the grid labels of ``verdict``'s run.

    Rows after acceptance repeat the accepting configuration. Relations of
    ``vocabulary`` the encoding does not mention are left empty.
    """
    if verdict.run is None:
        raise CompilationError(f"{tm.name} did not accept; there is no run to encode")
    side = grid.side(n)
    run = list(verdict.run)
    if len(run) > side or any(h >= side for step in run for h in step.heads):
        raise CompilationError(f"Run of {len(run)} steps does not fit a {side}x{side} grid")

    relations = canonical_relations(n, isinstance(grid, PairedGrid))

    def add(name: str, row: Row) -> None:
        relations.setdefault(name, set()).add(row)

    multi = tm.tapes > 1
    for t in range(side):
        step = run[min(t, len(run) - 1)]
        if multi and t > 0:
            previous = run[min(t - 1, len(run) - 1)]
            name = STEP_IDLE if t >= len(run) else _taken(tm, previous, step)
            for row_point in _row_points(grid, n, t):
                add(name, row_point)
        for tape in range(tm.tapes):
            cells = step.tapes[tape]
            head = step.heads[tape]
            for c in range(side):
                point = _points(grid, n, c, t)
                symbol = cells[c] if c < len(cells) else tm.blank
                add(symbol_relation(tape + 1, symbol), point)
                if c == head:
                    add(state_relation(tape + 1, step.state), point)
                elif c < head:
                    add(headright_relation(tape + 1), point)

    kept = {name: rows for name, rows in relations.items() if name in vocabulary}
    return FiniteStructure(n, vocabulary, kept)


__all__ = [
    "canonical_relations",
    "canonical_structure",
    "canonical_vocabulary",
    "encode_run",
    "order_structure",
]
