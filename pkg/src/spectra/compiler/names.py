"""Relation names shared by the compiled sentences and their canonical structures."""

from __future__ import annotations

LT = "LT"
SUC = "SUC"
MIN = "MIN"
MAX = "MAX"

DOUBLE = "DOUBLE"
HALF = "HALF"
DIV = "DIV"
BIT = "BIT"
INPUT = "INPUT"

ADD = "ADD"
MUL = "MUL"
IS_R = "IS_R"
LESS_R = "LESS_R"
LESS_R2 = "LESS_R2"
PROJECT = "PROJECT"
RCYC = "RCYC"
SUCX = "SUCX"
SUCY = "SUCY"
MINX = "MINX"
MINY = "MINY"
MAXX = "MAXX"
SAMEROW = "SAMEROW"
MULR = "MULR"
PIX = "PIX"
INPUTAT = "INPUTAT"
ZEROAT = "ZEROAT"

# Paired-grid points are only meaningful for r < R^2.
VALID_PAIR = LESS_R2

ORDER_RELATIONS = ((LT, 2), (SUC, 2), (MIN, 1), (MAX, 1))
FLAT_ARITHMETIC = ((DOUBLE, 2), (HALF, 2), (DIV, 2), (BIT, 1), (INPUT, 1))
PAIRED_ARITHMETIC = (
    (ADD, 3),
    (MUL, 3),
    (IS_R, 1),
    (LESS_R, 1),
    (LESS_R2, 1),
    (PROJECT, 3),
    (RCYC, 2),
    (SUCX, 2),
    (SUCY, 2),
    (MINX, 1),
    (MINY, 1),
    (MAXX, 1),
    (SAMEROW, 2),
    (MULR, 2),
    (PIX, 2),
    (INPUTAT, 2),
    (ZEROAT, 2),
)

STEP_IDLE = "STEP_IDLE"


def symbol_relation(tape: int, symbol: str) -> str:
    return f"SYMBOL_{tape}_{symbol}"


def state_relation(tape: int, state: str) -> str:
    return f"STATE_{tape}_{state}"


def step_relation(index: int) -> str:
    return f"STEP_{index}"


def headright_relation(tape: int) -> str:
    return f"HEADRIGHT_{tape}"
