"""Axiom builders for machine-to-sentence compilation.

Every builder draws its variable names from a pool (the grid's point variables
plus its scratch variable) so the compiled conjunction never uses more names
than the construction allows.
"""

from __future__ import annotations

import logging
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from spectra.logic.syntax import (
    Atom,
    Eq,
    Formula,
    Not,
    conj,
    disj,
    exists,
    forall,
    iff,
    implies,
)
from spectra.logic.transforms import swap_variables
from spectra.textio.machine import Move, TMDocument, Transition

from .errors import CompilationError, WindowCapExceeded
from .grid import Direction, FlatGrid, Grid, PairedGrid
from .names import (
    ADD,
    BIT,
    DIV,
    DOUBLE,
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
    step_relation,
    symbol_relation,
)

logger = logging.getLogger(__name__)

DEFAULT_WINDOW_CAP = 50_000


def _a(relation: str, *args: str) -> Atom:
    return Atom(relation, tuple(args))


def _names(pool: Sequence[str], count: int) -> Tuple[str, ...]:
    if len(pool) < count:
        raise CompilationError(f"Axioms need {count} variables, only {len(pool)} available")
    return tuple(pool[:count])


def _define(relation: str, args: Sequence[str], body: Formula) -> Formula:
    return forall(args, iff(_a(relation, *args), body))


# Order -------------------------------------------------------------------


def order_axioms(pool: Sequence[str]) -> List[Formula]:
    """Strict linear order ``LT`` with its successor, minimum and maximum."""
    x, y, z = _names(pool, 3)
    return [
        forall(x, Not(_a(LT, x, x))),
        forall((x, y, z), implies([_a(LT, x, y), _a(LT, y, z)], _a(LT, x, z))),
        forall((x, y), disj(_a(LT, x, y), Eq(x, y), _a(LT, y, x))),
        _define(
            SUC,
            (x, y),
            conj(_a(LT, x, y), Not(exists(z, conj(_a(LT, x, z), _a(LT, z, y))))),
        ),
        _define(MIN, (x,), Not(exists(y, _a(LT, y, x)))),
        _define(MAX, (x,), Not(exists(y, _a(LT, x, y)))),
    ]


# Arithmetic --------------------------------------------------------------


def arithmetic_axioms_flat(pool: Sequence[str]) -> List[Formula]:
    """Doubling, halving, ``(N-1) div 2^y``, the bits of ``N-1`` and of ``N``, in three variables.

    ``INPUT(y)`` is forced to bit ``y`` of ``N``: the lowest zero bit of ``N-1``
    becomes one, the ones below it become zero and higher bits are copied.
    """
    x, y, z = _names(pool, 3)
    double = _define(
        DOUBLE,
        (x, y),
        disj(
            conj(_a(MIN, x), _a(MIN, y)),
            exists(
                z,
                conj(
                    _a(SUC, z, x),
                    exists(
                        x,
                        conj(_a(SUC, x, z), exists(z, conj(_a(SUC, z, y), _a(DOUBLE, x, z)))),
                    ),
                ),
            ),
        ),
    )
    half = _define(
        HALF,
        (x, y),
        disj(_a(DOUBLE, y, x), exists(z, conj(_a(DOUBLE, z, x), _a(SUC, z, y)))),
    )
    div = _define(
        DIV,
        (x, y),
        disj(
            conj(_a(MAX, x), _a(MIN, y)),
            exists(z, conj(_a(SUC, z, y), exists(y, conj(_a(DIV, y, z), _a(HALF, x, y))))),
        ),
    )
    bit = _define(
        BIT,
        (y,),
        exists(x, conj(_a(DIV, x, y), Not(exists(z, _a(DOUBLE, x, z))))),
    )
    increment = exists(
        x,
        conj(
            Not(_a(BIT, x)),
            _a(INPUT, x),
            forall(y, implies(_a(LT, y, x), conj(_a(BIT, y), Not(_a(INPUT, y))))),
            forall(y, implies(_a(LT, x, y), iff(_a(INPUT, y), _a(BIT, y)))),
        ),
    )
    return [double, half, div, bit, increment]


def arithmetic_axioms_paired(pool: Sequence[str]) -> List[Formula]:
    """Addition, multiplication, ``R = floor(sqrt(N-1))`` and the pairing ``r = a + b*R``.

    Also defines the input predicates of the paired grid: ``INPUTAT(x, r)`` holds
    when bit ``x*R + (r mod R)`` of ``N`` is one, ``ZEROAT`` when it is a zero
    below the most significant bit.
    """
    x, y, z, u, w = _names(pool, 5)
    add = _define(
        ADD,
        (x, y, z),
        disj(
            conj(_a(MIN, y), Eq(x, z)),
            exists((u, w), conj(_a(SUC, u, y), _a(SUC, w, z), _a(ADD, x, u, w))),
        ),
    )
    mul = _define(
        MUL,
        (x, y, z),
        disj(
            conj(_a(MIN, y), _a(MIN, z)),
            exists((u, w), conj(_a(SUC, u, y), _a(MUL, x, u, w), _a(ADD, w, x, z))),
        ),
    )
    is_r = _define(
        IS_R,
        (x,),
        conj(
            exists(y, _a(MUL, x, x, y)),
            Not(exists((u, w), conj(_a(LT, x, u), _a(MUL, u, u, w)))),
        ),
    )
    less_r = _define(LESS_R, (x,), exists(y, conj(_a(LT, x, y), _a(IS_R, y))))
    less_r2 = _define(
        LESS_R2,
        (x,),
        exists((y, z), conj(_a(IS_R, y), _a(MUL, y, y, z), _a(LT, x, z))),
    )
    project = _define(
        PROJECT,
        (x, y, z),
        conj(
            _a(LESS_R2, x),
            _a(LESS_R, y),
            _a(LESS_R, z),
            exists((u, w), conj(_a(IS_R, w), _a(MUL, z, w, u), _a(ADD, y, u, x))),
        ),
    )
    mulr = _define(MULR, (x, y), exists(z, conj(_a(IS_R, z), _a(MUL, x, z, y))))
    pix = _define(PIX, (x, y), exists(z, _a(PROJECT, x, y, z)))

    def at_cell(body: Formula) -> Formula:
        # w is the cell number x*R + (r mod R) with r bound to y
        return exists(
            z,
            conj(
                _a(MULR, x, z),
                exists(u, conj(_a(PIX, y, u), exists(w, conj(_a(ADD, u, z, w), body)))),
            ),
        )

    inputat = _define(INPUTAT, (x, y), at_cell(_a(INPUT, w)))
    zeroat = _define(
        ZEROAT,
        (x, y),
        at_cell(
            conj(Not(_a(INPUT, w)), exists(z, conj(_a(LT, w, z), _a(INPUT, z)))),
        ),
    )
    return [add, mul, is_r, less_r, less_r2, project, mulr, pix, inputat, zeroat]


def pairing_axioms(pool: Sequence[str]) -> List[Formula]:
    """Cyclic successor below ``R`` and the horizontal/vertical moves on pairs."""
    x, y, z, u, w = _names(pool, 5)
    rcyc = _define(
        RCYC,
        (x, y),
        conj(
            _a(LESS_R, x),
            _a(LESS_R, y),
            disj(
                _a(SUC, x, y),
                conj(exists(z, conj(_a(IS_R, z), _a(SUC, x, z))), _a(MIN, y)),
            ),
        ),
    )
    sucx = _define(
        SUCX,
        (x, y),
        exists((z, u, w), conj(_a(PROJECT, x, z, u), _a(RCYC, z, w), _a(PROJECT, y, w, u))),
    )
    sucy = _define(
        SUCY,
        (x, y),
        exists((z, u, w), conj(_a(PROJECT, x, z, u), _a(RCYC, u, w), _a(PROJECT, y, z, w))),
    )
    minx = _define(MINX, (x,), exists((y, z), conj(_a(PROJECT, x, y, z), _a(MIN, y))))
    miny = _define(MINY, (x,), exists((y, z), conj(_a(PROJECT, x, y, z), _a(MIN, z))))
    maxx = _define(
        MAXX,
        (x,),
        exists(
            (y, z),
            conj(_a(PROJECT, x, y, z), exists(u, conj(_a(IS_R, u), _a(SUC, y, u)))),
        ),
    )
    samerow = _define(
        SAMEROW,
        (x, y),
        exists((z, u), conj(_a(PROJECT, x, z, u), exists(z, _a(PROJECT, y, z, u)))),
    )
    return [rcyc, sucx, sucy, minx, miny, maxx, samerow]


# Machine -----------------------------------------------------------------

_CLASSES = ("interior", "first", "last", "single")
_ALLOWED = {
    Move.STAY: set(_CLASSES),
    Move.LEFT: {"interior", "last"},
    Move.RIGHT: {"interior", "first"},
}


def _class_guard(grid: Grid, position: str) -> Formula:
    first, last = grid.first_cell(), grid.last_cell()
    return {
        "interior": conj(Not(first), Not(last)),
        "first": conj(first, Not(last)),
        "last": conj(last, Not(first)),
        "single": conj(first, last),
    }[position]


def _head(grid: Grid, tm: TMDocument, tape: int) -> Formula:
    return disj(*(grid.label(state_relation(tape, q)) for q in tm.states))


def _action(
    grid: Grid,
    tm: TMDocument,
    tape: int,
    target: str,
    write: str,
    move: Move,
    step: Optional[str],
) -> Formula:
    state = grid.label(state_relation(tape, target))
    parts: List[Formula] = []
    if step is not None:
        parts.append(grid.row_label(step))
    if move is Move.LEFT:
        parts.append(grid.shift(state, Direction.BACKWARD))
    parts.append(grid.label(symbol_relation(tape, write)))
    if move is Move.STAY:
        parts.append(state)
    if move is Move.RIGHT:
        parts.append(grid.shift(state, Direction.FORWARD))
    return grid.shift(conj(*parts), Direction.VERTICAL)


def step_relations(tm: TMDocument) -> Dict[Transition, str]:
    """Row relations naming the transition taken into a row; multi-tape machines only."""
    if tm.tapes < 2:
        return {}
    return {t: step_relation(i) for i, t in enumerate(tm.transitions) if t.state != tm.accept}


def transition_axioms(
    tm: TMDocument, grid: Grid, window_cap: int = DEFAULT_WINDOW_CAP
) -> List[Formula]:
    """Head-centred windows, the headless frame rule and step bookkeeping.

    For every tape, state, position class and symbol under the head the window
    lists the permitted successor labelings one row down. A window with no
    permitted successor forbids its antecedent. The accept state idles.
    """
    steps = step_relations(tm)
    multi = tm.tapes > 1
    windows = tm.tapes * (len(tm.states) * len(_CLASSES) + 1) * len(tm.symbols)
    if windows > window_cap:
        raise WindowCapExceeded(windows, window_cap)

    axioms: List[Formula] = []
    for tape in range(1, tm.tapes + 1):
        for q in tm.states:
            for position in _CLASSES:
                for a in tm.symbols:
                    antecedent = conj(
                        _class_guard(grid, position),
                        grid.label(state_relation(tape, q)),
                        grid.label(symbol_relation(tape, a)),
                    )
                    actions: List[Formula] = []
                    if q == tm.accept:
                        actions.append(
                            _action(
                                grid, tm, tape, q, a, Move.STAY, STEP_IDLE if multi else None
                            )
                        )
                    else:
                        for t in tm.transitions_from(q):
                            move = t.moves[tape - 1]
                            if t.reads[tape - 1] != a or position not in _ALLOWED[move]:
                                continue
                            actions.append(
                                _action(
                                    grid, tm, tape, t.target, t.writes[tape - 1], move, steps.get(t)
                                )
                            )
                    if actions:
                        axioms.append(grid.forall_points(implies(antecedent, disj(*actions))))
                    else:
                        axioms.append(grid.forall_points(Not(antecedent)))
        head = _head(grid, tm, tape)
        for a in tm.symbols:
            symbol = grid.label(symbol_relation(tape, a))
            axioms.append(
                grid.forall_points(
                    implies([Not(head), symbol], grid.shift(symbol, Direction.VERTICAL))
                )
            )

    if multi:
        names = sorted(set(steps.values())) + [STEP_IDLE]
        for left, right in combinations(names, 2):
            axioms.append(grid.forall_rows(Not(conj(grid.row_label(left), grid.row_label(right)))))
        if isinstance(grid, PairedGrid):
            r, z = grid.pair, grid.scratch
            for name in names:
                here = grid.row_label(name)
                there = swap_variables(here, r, z)
                constancy = forall((r, z), implies(_a(SAMEROW, r, z), iff(here, there)))
                axioms.append(forall(grid.row, constancy))
    logger.debug("Built %d transition axioms over %d windows", len(axioms), windows)
    return axioms


def frame_and_uniqueness_axioms(tm: TMDocument, grid: Grid) -> List[Formula]:
    """One symbol per cell, at most one state per cell and exactly one head per tape and row."""
    axioms: List[Formula] = []
    for tape in range(1, tm.tapes + 1):
        symbols = [grid.label(symbol_relation(tape, a)) for a in tm.symbols]
        axioms.append(grid.forall_points(disj(*symbols)))
        for left, right in combinations(symbols, 2):
            axioms.append(grid.forall_points(Not(conj(left, right))))
        states = [grid.label(state_relation(tape, q)) for q in tm.states]
        for left, right in combinations(states, 2):
            axioms.append(grid.forall_points(Not(conj(left, right))))

        head = _head(grid, tm, tape)
        if isinstance(grid, FlatGrid):
            x, y, z = grid.pool
            axioms.append(forall(y, exists(x, head)))
            other = swap_variables(head, x, z)
            axioms.append(forall((y, x), implies(head, forall(z, implies(other, Eq(z, x))))))
            continue
        right = grid.label(headright_relation(tape))
        further = grid.shift(disj(head, right), Direction.FORWARD)
        axioms.append(grid.forall_points(iff(right, conj(Not(grid.last_cell()), further))))
        axioms.append(grid.forall_points(implies(head, Not(right))))
        axioms.append(grid.forall_points(implies(grid.first_cell(), disj(head, right))))
    return axioms


def initial_axioms(tm: TMDocument, grid: Grid) -> List[Formula]:
    """Row 0 holds the bits of ``N`` (least significant first) on tape 1 and the start state."""
    one, zero = grid.input_bits()
    first_row = grid.first_row()
    axioms: List[Formula] = []
    for tape in range(1, tm.tapes + 1):
        if tape == 1:
            contents = {"1": one, "0": zero, tm.blank: conj(Not(one), Not(zero))}
        else:
            contents = {}
        cells: List[Formula] = []
        for a in tm.symbols:
            symbol = grid.label(symbol_relation(tape, a))
            if a in contents:
                cells.append(iff(symbol, contents[a]))
            elif a == tm.blank:
                cells.append(symbol)
            else:
                cells.append(Not(symbol))
        axioms.append(grid.forall_points(implies(first_row, conj(*cells))))
        states: List[Formula] = [
            iff(grid.label(state_relation(tape, tm.start)), grid.first_cell())
        ]
        states.extend(
            Not(grid.label(state_relation(tape, q))) for q in tm.states if q != tm.start
        )
        axioms.append(grid.forall_points(implies(first_row, conj(*states))))
    return axioms


def acceptance_axioms(tm: TMDocument, grid: Grid) -> List[Formula]:
    return [grid.exists_point(grid.label(state_relation(1, tm.accept)))]


def boundary_axioms(tm: TMDocument, grid: Grid) -> List[Formula]:
    """Initial row and acceptance."""
    return initial_axioms(tm, grid) + acceptance_axioms(tm, grid)


__all__ = [
    "DEFAULT_WINDOW_CAP",
    "acceptance_axioms",
    "arithmetic_axioms_flat",
    "arithmetic_axioms_paired",
    "boundary_axioms",
    "frame_and_uniqueness_axioms",
    "initial_axioms",
    "order_axioms",
    "pairing_axioms",
    "step_relations",
    "transition_axioms",
]
