"""Grounding to conjunction-of-DNF form and satisfiability."""

from .atoms import GroundAtom, GroundFormula, normalize_block
from .cnf import CNF, solve_cnf, to_cnf
from .direct import DEFAULT_DISTRIBUTE_CAP, ground_sentence
from .ground import ground, measure_size, size_bound
from .solver import (
    BacktrackingSolver,
    ComparisonCounter,
    SatResult,
    iter_models,
    literal_set_consistent,
    satisfiable,
    truth_table_satisfiable,
)
from .witness import decode_witness

__all__ = [
    "BacktrackingSolver",
    "CNF",
    "ComparisonCounter",
    "DEFAULT_DISTRIBUTE_CAP",
    "GroundAtom",
    "GroundFormula",
    "SatResult",
    "decode_witness",
    "ground",
    "ground_sentence",
    "iter_models",
    "literal_set_consistent",
    "measure_size",
    "normalize_block",
    "satisfiable",
    "size_bound",
    "solve_cnf",
    "to_cnf",
    "truth_table_satisfiable",
]
