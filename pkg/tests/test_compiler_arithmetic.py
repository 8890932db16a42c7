from __future__ import annotations

import math

import pytest

from spectra.compiler import (
    FlatGrid,
    PairedGrid,
    arithmetic_axioms_flat,
    arithmetic_axioms_paired,
    canonical_structure,
    order_axioms,
    order_structure,
    pairing_axioms,
)
from spectra.compiler.encoding import canonical_relations
from spectra.compiler.names import FLAT_ARITHMETIC
from spectra.grounding import decode_witness, ground_sentence, iter_models
from spectra.logic import Vocabulary, evaluate
from spectra.logic.syntax import conj

FLAT_POOL = ("x", "y", "z")
PAIRED_POOL = ("x", "y", "z", "u", "w")


def _forced_relations(axioms, n: int, names):
    """Every solution of ``axioms`` over the natural order, as relation -> rows."""
    g = ground_sentence(conj(*axioms), n, fixed=order_structure(n))
    facts = [i for i, atom in enumerate(g.atoms, start=1) if not atom.is_auxiliary]
    vocabulary = Vocabulary.of(*names)
    solutions = []
    for model in iter_models(g, project=facts):
        structure = decode_witness(g, model, vocabulary)
        solutions.append({name: set(structure.relations[name]) for name, _ in names})
    return solutions


@pytest.mark.parametrize("n", range(3, 9))
def test_canonical_structure_satisfies_order_and_flat_arithmetic(n: int) -> None:
    structure = canonical_structure(n, FlatGrid())
    for axiom in order_axioms(FLAT_POOL) + arithmetic_axioms_flat(FLAT_POOL):
        assert evaluate(axiom, structure), axiom


@pytest.mark.parametrize("n", [3, 4, 5])
def test_flat_arithmetic_has_exactly_one_solution(n: int) -> None:
    solutions = _forced_relations(arithmetic_axioms_flat(FLAT_POOL), n, FLAT_ARITHMETIC)
    canonical = canonical_relations(n)
    assert solutions == [{name: canonical[name] for name, _ in FLAT_ARITHMETIC}]


def test_bits_of_six() -> None:
    relations = canonical_relations(6)
    assert relations["BIT"] == {(0,), (2,)}
    assert relations["INPUT"] == {(1,), (2,)}
    assert relations["DIV"] == {(5, 0), (2, 1), (1, 2), (0, 3), (0, 4), (0, 5)}
    (solution,) = _forced_relations(arithmetic_axioms_flat(FLAT_POOL), 6, FLAT_ARITHMETIC)
    assert solution["BIT"] == {(0,), (2,)}
    assert solution["INPUT"] == {(1,), (2,)}


@pytest.mark.parametrize("n", [4, 8])
def test_input_of_a_power_of_two(n: int) -> None:
    (solution,) = _forced_relations(arithmetic_axioms_flat(FLAT_POOL), n, FLAT_ARITHMETIC)
    assert solution["INPUT"] == {(n.bit_length() - 1,)}


@pytest.mark.parametrize("n, root", [(5, 2), (10, 3), (17, 4), (26, 5)])
def test_pairing_root_and_projection(n: int, root: int) -> None:
    relations = canonical_relations(n, paired=True)
    assert relations["IS_R"] == {(root,)}
    assert relations["PROJECT"] == {(r, r % root, r // root) for r in range(root * root)}
    assert relations["LESS_R2"] == {(r,) for r in range(root * root)}
    if n == 10:
        assert (7, 1, 2) in relations["PROJECT"]


@pytest.mark.parametrize("n", [5, 10])
def test_canonical_structure_satisfies_paired_axioms(n: int) -> None:
    structure = canonical_structure(n, PairedGrid(2))
    for axiom in arithmetic_axioms_paired(PAIRED_POOL) + pairing_axioms(PAIRED_POOL):
        assert evaluate(axiom, structure), axiom


def test_root_is_forced_at_five() -> None:
    add, mul, is_r = arithmetic_axioms_paired(PAIRED_POOL)[:3]
    names = (("ADD", 3), ("MUL", 3), ("IS_R", 1))
    (solution,) = _forced_relations([add, mul, is_r], 5, names)
    assert solution["IS_R"] == {(math.isqrt(4),)}
    assert solution["MUL"] == {(a, b, a * b) for a in range(5) for b in range(5) if a * b < 5}


def test_paired_input_cells_follow_the_bits_of_n() -> None:
    n = 10
    root = math.isqrt(n - 1)
    relations = canonical_relations(n, paired=True)
    for x in range(n):
        for r in range(root * root):
            cell = x * root + r % root
            bit = n >> cell & 1 if cell < n else 0
            assert ((x, r) in relations["INPUTAT"]) == (cell < n and bit == 1)
            below_msb = cell < n.bit_length() - 1
            assert ((x, r) in relations["ZEROAT"]) == (below_msb and bit == 0)
