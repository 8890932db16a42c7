"""Space-time grids and their shift operators.

A grid point is a tuple of variables: the cell coordinates, the row
coordinates and, for the paired grid, one extra coordinate ``r`` whose
residue and quotient modulo ``R`` refine the cell and the row. Every shift
uses exactly one scratch variable, so a grid with ``v`` point variables keeps
all compiled formulas within ``v + 1`` variables.
"""

from __future__ import annotations

import math
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from spectra.logic.syntax import Atom, Formula, Not, conj, exists, forall, implies
from spectra.logic.transforms import swap_variables
from spectra.machines.simulator import BoundKind

from .errors import CompilationError
from .names import (
    INPUT,
    INPUTAT,
    LT,
    MAX,
    MAXX,
    MIN,
    MINX,
    MINY,
    SUC,
    SUCX,
    SUCY,
    VALID_PAIR,
    ZEROAT,
)


class Direction(str, Enum):
    FORWARD = "h+"
    BACKWARD = "h-"
    VERTICAL = "v+"


class Construction(str, Enum):
    THREE_VAR = "three-var"
    TWO_K_PLUS_1 = "two-k-plus-1"
    TWO_K_PLUS_2 = "two-k-plus-2"

    @classmethod
    def parse(cls, value: "str | Construction") -> "Construction":
        if isinstance(value, Construction):
            return value
        return cls(str(value).replace("_", "-"))


def _unary(name: str, var: str) -> Atom:
    return Atom(name, (var,))


def lex_shift(phi: Formula, digits: Sequence[str], scratch: str, forward: bool = True) -> Formula:
    """Read ``phi`` at the lexicographic successor (or predecessor) of ``digits``.

    ``digits`` lists the coordinate variables most significant first. For each
    digit ``x_i`` whose lower digits are all at their edge (MAX going forward,
    MIN going back) the scratch variable steps ``x_i`` and every lower digit is
    re-quantified at the opposite edge. True when no neighbour exists.
    """
    edge, reset = (MAX, MIN) if forward else (MIN, MAX)
    conjuncts: List[Formula] = []
    for i, digit in enumerate(digits):
        lower = digits[i + 1 :]
        body = swap_variables(phi, digit, scratch)
        for low in reversed(lower):
            body = forall(low, implies(_unary(reset, low), body))
        step = Atom(SUC, (digit, scratch) if forward else (scratch, digit))
        shifted = forall(scratch, implies(step, body))
        conjuncts.append(implies([_unary(edge, low) for low in lower], shifted))
    return conj(*conjuncts)


class Grid:
    """Variables, boundary predicates and shift operators of one construction."""

    construction: Construction
    bound_kind: BoundKind

    def __init__(
        self,
        k: int,
        cell: Tuple[str, ...],
        row: Tuple[str, ...],
        extra: Tuple[str, ...],
        scratch: str,
    ):
        self.k = k
        self.cell = cell
        self.row = row
        self.extra = extra
        self.scratch = scratch

    @property
    def point(self) -> Tuple[str, ...]:
        return self.cell + self.row + self.extra

    @property
    def pool(self) -> Tuple[str, ...]:
        """Every variable name compiled formulas may use."""
        return self.point + (self.scratch,)

    @property
    def variable_bound(self) -> int:
        return len(self.pool)

    @property
    def arity_bound(self) -> int:
        return len(self.point)

    @property
    def row_point(self) -> Tuple[str, ...]:
        """Arguments of row relations."""
        return self.row

    def label(self, name: str) -> Atom:
        return Atom(name, self.point)

    def row_label(self, name: str) -> Atom:
        return Atom(name, self.row_point)

    def valid(self) -> Optional[Formula]:
        return None

    def forall_points(self, body: Formula) -> Formula:
        guard = self.valid()
        return forall(self.point, body if guard is None else implies(guard, body))

    def exists_point(self, body: Formula) -> Formula:
        guard = self.valid()
        return exists(self.point, body if guard is None else conj(guard, body))

    def forall_rows(self, body: Formula) -> Formula:
        return forall(self.row_point, body)

    def first_cell(self) -> Formula:
        return conj(*(_unary(MIN, v) for v in self.cell))

    def last_cell(self) -> Formula:
        return conj(*(_unary(MAX, v) for v in self.cell))

    def first_row(self) -> Formula:
        return conj(*(_unary(MIN, v) for v in self.row))

    def shift(self, phi: Formula, direction: Direction) -> Formula:
        direction = Direction(direction)
        if direction is Direction.VERTICAL:
            return lex_shift(phi, self.row, self.scratch, forward=True)
        return lex_shift(phi, self.cell, self.scratch, forward=direction is Direction.FORWARD)

    def input_bits(self) -> Tuple[Formula, Formula]:
        """Cell predicates (bit 1 of N here, bit 0 of N here below its MSB) on the first row."""
        high = [_unary(MIN, v) for v in self.cell[:-1]]
        low = self.cell[-1]
        one = Atom(INPUT, (low,))
        zero = conj(
            Not(one),
            exists(self.scratch, conj(Atom(LT, (low, self.scratch)), Atom(INPUT, (self.scratch,)))),
        )
        return conj(*high, one), conj(*high, zero)

    def side(self, n: int) -> int:
        """Number of cells (and rows) of the grid for a domain of size ``n``."""
        raise NotImplementedError

    def describe(self) -> str:
        return self.construction.value


class FlatGrid(Grid):
    """Cells and rows are single elements ``x`` and ``y``; shifts use ``z``."""

    construction = Construction.THREE_VAR
    bound_kind = BoundKind.LINEAR

    def __init__(self) -> None:
        super().__init__(1, ("x",), ("y",), (), "z")

    def side(self, n: int) -> int:
        return n


class LexGrid(Grid):
    """Cells and rows are ``k``-digit base-``N`` numerals ordered lexicographically."""

    construction = Construction.TWO_K_PLUS_1
    bound_kind = BoundKind.POLY

    def __init__(self, k: int):
        if k < 1:
            raise CompilationError(f"The lexicographic grid needs k >= 1, got {k}")
        cell = tuple(f"x{i}" for i in range(1, k + 1))
        row = tuple(f"y{i}" for i in range(1, k + 1))
        super().__init__(k, cell, row, (), "z")

    def side(self, n: int) -> int:
        return n**self.k

    def describe(self) -> str:
        return f"{self.construction.value} (k={self.k})"


class PairedGrid(LexGrid):
    """Lexicographic grid refined by ``r < R^2``, ``R = floor(sqrt(N-1))``.

    A point ``(x, y, r)`` is cell ``X*R + (r mod R)`` of row ``Y*R + r div R``
    where ``X`` and ``Y`` are the numerals of ``x`` and ``y``.
    """

    construction = Construction.TWO_K_PLUS_2
    bound_kind = BoundKind.POLY_HALF

    def __init__(self, k: int):
        if k < 2:
            raise CompilationError(f"The paired grid needs k >= 2, got {k}")
        super().__init__(k)
        self.extra = ("r",)

    @property
    def pair(self) -> str:
        return self.extra[0]

    @property
    def row_point(self) -> Tuple[str, ...]:
        return self.row + (self.pair,)

    def valid(self) -> Optional[Formula]:
        return Atom(VALID_PAIR, (self.pair,))

    def forall_rows(self, body: Formula) -> Formula:
        return forall(self.row_point, implies(Atom(VALID_PAIR, (self.pair,)), body))

    def first_cell(self) -> Formula:
        return conj(super().first_cell(), _unary(MINX, self.pair))

    def last_cell(self) -> Formula:
        return conj(super().last_cell(), _unary(MAXX, self.pair))

    def first_row(self) -> Formula:
        return conj(super().first_row(), _unary(MINY, self.pair))

    def shift(self, phi: Formula, direction: Direction) -> Formula:
        direction = Direction(direction)
        r, z = self.pair, self.scratch
        moved = swap_variables(phi, r, z)
        if direction is Direction.BACKWARD:
            carry = lex_shift(moved, self.cell, r, forward=False)
            step = Atom(SUCX, (z, r))
            return conj(
                implies(_unary(MINX, r), forall(z, implies(step, carry))),
                implies(Not(_unary(MINX, r)), forall(z, implies(step, moved))),
            )
        if direction is Direction.FORWARD:
            digits, successor, minimum = self.cell, SUCX, MINX
        else:
            digits, successor, minimum = self.row, SUCY, MINY
        carry = lex_shift(moved, digits, r, forward=True)
        return forall(
            z,
            implies(
                Atom(successor, (r, z)),
                conj(
                    implies(_unary(minimum, z), carry),
                    implies(Not(_unary(minimum, z)), moved),
                ),
            ),
        )

    def input_bits(self) -> Tuple[Formula, Formula]:
        high = [_unary(MIN, v) for v in self.cell[:-1]]
        args = (self.cell[-1], self.pair)
        return conj(*high, Atom(INPUTAT, args)), conj(*high, Atom(ZEROAT, args))

    def side(self, n: int) -> int:
        return n**self.k * math.isqrt(n - 1)


def grid_for(construction: "str | Construction", k: Optional[int] = None) -> Grid:
    construction = Construction.parse(construction)
    if construction is Construction.THREE_VAR:
        return FlatGrid()
    if k is None:
        raise CompilationError(f"{construction.value} needs k")
    if construction is Construction.TWO_K_PLUS_1:
        return LexGrid(k)
    return PairedGrid(k)


def shift_flat(phi: Formula, direction: Direction) -> Formula:
    """Shift a formula over ``x, y`` by one cell or one row using ``z``."""
    return FlatGrid().shift(phi, direction)


def shift_lex(phi: Formula, direction: Direction, k: int) -> Formula:
    """Shift a formula over ``x1..xk, y1..yk`` to the lexicographic neighbour using ``z``."""
    return LexGrid(k).shift(phi, direction)


def shift_paired(phi: Formula, direction: Direction, k: int) -> Formula:
    """Shift a formula over ``x1..xk, y1..yk, r`` on the paired grid using ``z``."""
    return PairedGrid(k).shift(phi, direction)


__all__ = [
    "Construction",
    "Direction",
    "FlatGrid",
    "Grid",
    "LexGrid",
    "PairedGrid",
    "grid_for",
    "lex_shift",
    "shift_flat",
    "shift_lex",
    "shift_paired",
]
