from __future__ import annotations

import math
import random
from dataclasses import replace
from typing import List

import pytest

from spectra.grounding import (
    ComparisonCounter,
    GroundAtom,
    GroundFormula,
    decode_witness,
    ground,
    ground_sentence,
    iter_models,
    literal_set_consistent,
    measure_size,
    normalize_block,
    satisfiable,
    size_bound,
    solve_cnf,
    to_cnf,
    truth_table_satisfiable,
)
from spectra.logic import FiniteStructure, Vocabulary, evaluate
from spectra.models import fact_positions, has_model_of_size
from spectra.normalizer import normalize
from spectra.reports import Method
from spectra.textio import parse_formula


TRANSITIVE = "forall x forall y forall z (E(x, y) & E(y, z) -> E(x, z))"


def _random_ground_formula(rng: random.Random) -> GroundFormula:
    count = rng.randint(1, 12)
    atoms = tuple(GroundAtom("A", (i,)) for i in range(count))
    blocks = []
    for _ in range(rng.randint(1, 8)):
        terms = [
            [rng.choice((1, -1)) * rng.randint(1, count) for _ in range(rng.randint(1, 3))]
            for _ in range(rng.randint(1, 3))
        ]
        block = normalize_block(terms)
        if block is not None:
            blocks.append(block)
    size = sum(len(term) for block in blocks for term in block)
    return GroundFormula(domain_size=1, atoms=atoms, blocks=blocks, size=size)


def _quadratic_consistent(literals: List[int]) -> bool:
    return not any(a == -b for a in literals for b in literals)


def test_ground_agrees_with_enumeration(corpus) -> None:
    checked = 0
    for f in corpus:
        ns = normalize(f)
        if len(fact_positions(ns.base, 3)) > 12:
            continue
        checked += 1
        for n in (1, 2, 3):
            expected = has_model_of_size(f, n, Method.ENUMERATION)
            assert bool(satisfiable(ground(ns, n))) == expected, (f, n)
    assert checked >= 10


def test_ground_size_grows_as_the_cube() -> None:
    ns = normalize(parse_formula(TRANSITIVE))
    for n in (8, 16, 32):
        assert measure_size(ns, 2 * n) <= 10 * measure_size(ns, n)
    for n in (2, 3, 5):
        assert measure_size(ns, n) == ground(ns, n).size
        assert measure_size(ns, n) <= size_bound(ns, n)


def test_size_bound_counts_prefix_instantiations() -> None:
    ns = normalize(parse_formula("forall x exists y E(x, y)"))
    literals = {len(clause.prefix): clause.literal_count for clause in ns.clauses}
    assert size_bound(ns, 1) == sum(clause.literal_count for clause in ns.clauses)
    assert size_bound(ns, 3) >= 9 * literals[2]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_size_bound_is_reached_when_nothing_simplifies(n: int) -> None:
    # Distinct relations in every connective and no equality: only the
    # existential clauses merge repeated terms.
    ns = normalize(parse_formula("forall x forall y (E(x, y) | P(x) & Q(y))"))
    universal = replace(ns, clauses=tuple(c for c in ns.clauses if c.existential is None))
    assert len(universal.clauses) < len(ns.clauses)
    assert measure_size(universal, n) == size_bound(universal, n)
    assert measure_size(universal, n) == ground(universal, n).size
    if n > 1:
        assert measure_size(ns, n) < size_bound(ns, n)
    else:
        assert measure_size(ns, n) == size_bound(ns, n)


def test_solver_agrees_with_truth_table_and_cnf() -> None:
    rng = random.Random(11)
    for _ in range(50):
        g = _random_ground_formula(rng)
        verdict = satisfiable(g)
        assert bool(verdict) == truth_table_satisfiable(g)
        assert (solve_cnf(to_cnf(g)) is not None) == bool(verdict)
        if verdict:
            assert g.holds_under(verdict.witness)


def test_literal_set_consistency_matches_quadratic_check() -> None:
    rng = random.Random(5)
    for _ in range(1000):
        literals = [rng.choice((1, -1)) * rng.randint(1, 20) for _ in range(rng.randint(0, 12))]
        assert literal_set_consistent(literals) == _quadratic_consistent(literals)


def test_literal_set_consistency_counts_comparisons() -> None:
    counter = ComparisonCounter()
    assert literal_set_consistent([3, -1, 2, 1], counter) is False
    assert counter.count > 0
    assert literal_set_consistent([]) is True


@pytest.mark.parametrize("q", [256, 1024, 4096, 16384])
def test_literal_set_consistency_is_quasilinear(q: int) -> None:
    rng = random.Random(q)
    literals = [rng.choice((1, -1)) * atom for atom in rng.sample(range(1, 4 * q), q)]
    counter = ComparisonCounter()
    assert literal_set_consistent(literals, counter) is True
    assert counter.count <= 2 * q * math.log2(q)


def test_normalize_block_simplifies() -> None:
    assert normalize_block([(1, -1), (2, 1), (1, 2)]) == ((1, 2),)
    assert normalize_block([(1,), ()]) is None
    assert normalize_block([(1, -1)]) == ()


def test_empty_block_is_unsatisfiable() -> None:
    g = GroundFormula(domain_size=1, atoms=(GroundAtom("A"),), blocks=[((1,),), ()], size=1)
    assert not satisfiable(g)
    assert solve_cnf(to_cnf(g)) is None


def test_cnf_keeps_atom_numbers() -> None:
    g = GroundFormula(
        domain_size=2,
        atoms=(GroundAtom("P", (0,)), GroundAtom("P", (1,))),
        blocks=[((1,),), ((-1, 2), (-2,))],
        size=4,
    )
    cnf = to_cnf(g)
    assert cnf.atom_names == {1: "P(0)", 2: "P(1)"}
    assert cnf.selector_count == 2
    assert solve_cnf(cnf) == {1: True, 2: False}


def test_iter_models_lists_every_model() -> None:
    ns = normalize(parse_formula("exists x P(x) & exists x !P(x)"))
    g = ground(ns, 3)
    facts = [i for i, atom in enumerate(g.atoms, start=1) if atom.relation == "P"]
    models = list(iter_models(g, project=facts))
    # Non-empty proper subsets of a 3-element set.
    assert len(models) == 6
    assert len({tuple(sorted(m.items())) for m in models}) == 6


def test_decoded_witness_is_a_model() -> None:
    f = parse_formula(
        "forall x exists y (E(x, y) & x != y) & forall x forall y (E(x, y) -> !E(y, x))"
    )
    ns = normalize(f)
    g = ground(ns, 3)
    result = satisfiable(g)
    assert result
    structure = decode_witness(g, result.witness, ns.vocabulary)
    assert evaluate(f, structure.restrict(ns.base.names))


def test_fixed_relations_are_evaluated_away() -> None:
    ns = normalize(parse_formula("forall x exists y E(x, y)"))
    base = Vocabulary.of(("E", 2))
    empty = FiniteStructure(2, base, {})
    cycle = FiniteStructure(2, base, {"E": {(0, 1), (1, 0)}})
    assert not satisfiable(ground(ns, 2, fixed=empty))
    g = ground(ns, 2, fixed=cycle)
    assert satisfiable(g)
    assert all(atom.relation != "E" for atom in g.atoms)
    with pytest.raises(ValueError, match="expected 3"):
        ground(ns, 3, fixed=cycle)


def test_direct_grounding_agrees_with_normal_form(corpus) -> None:
    for f in corpus:
        ns = normalize(f)
        for n in (1, 2, 3):
            direct = bool(satisfiable(ground_sentence(f, n)))
            assert direct == bool(satisfiable(ground(ns, n))), (f, n)


def test_direct_grounding_rejects_free_variables_and_bad_sizes() -> None:
    with pytest.raises(ValueError, match="free variables"):
        ground_sentence(parse_formula("E(x, y)"), 2)
    with pytest.raises(ValueError, match="positive"):
        ground(normalize(parse_formula("exists x P(x)")), 0)
