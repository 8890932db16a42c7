from __future__ import annotations

import random
from dataclasses import replace

import pytest

from spectra.grounding import decode_witness, ground, satisfiable
from spectra.logic import FiniteStructure, Vocabulary, evaluate
from spectra.logic.syntax import Or
from spectra.models import enumerate_structures, fact_positions, has_expansion
from spectra.normalizer import (
    Clause,
    ClauseShape,
    NormalizationError,
    VariableBudgetExceeded,
    free_in_order,
    normalize,
    normalized_to_sentence,
    verify_shape,
)
from spectra.reports import Method
from spectra.textio import parse_formula, parse_sentence, print_sentence


def _random_structure(rng: random.Random, vocabulary: Vocabulary, n: int) -> FiniteStructure:
    relations = {}
    for symbol in vocabulary:
        rows = set()
        for index in range(n**symbol.arity):
            if rng.random() < 0.5:
                row = []
                for _ in range(symbol.arity):
                    index, digit = divmod(index, n)
                    row.append(digit)
                rows.add(tuple(row))
        relations[symbol.name] = rows
    return FiniteStructure(n, vocabulary, relations)


def test_forall_exists_needs_two_aux_relations_and_five_clauses() -> None:
    ns = normalize(parse_formula("forall x exists y E(x, y)"))
    assert [(s.name, s.arity) for s in ns.auxiliary] == [("Aux1", 1), ("Aux2", 0)]
    assert len(ns.clauses) == 5
    assert ns.root == "Aux2"
    shapes = sorted(clause.shape for clause in ns.clauses)
    assert shapes.count(ClauseShape.UNIVERSAL_EXISTENTIAL) == 2
    assert verify_shape(ns) == []


def test_aux_names_avoid_the_base_vocabulary() -> None:
    ns = normalize(parse_formula("exists x Aux1(x)"))
    assert ns.auxiliary_names == ("Aux2",)
    assert ns.root == "Aux2"
    assert len(ns.clauses) == 3


def test_whole_sentence_atom_gets_a_root() -> None:
    ns = normalize(parse_formula("A"))
    assert ns.root is not None and ns.root != "A"
    assert verify_shape(ns) == []
    assert not satisfiable(ground(ns, 1, fixed=FiniteStructure(1, Vocabulary.of(("A", 0)), {})))


def test_shared_subformulas_are_memoised() -> None:
    ns = normalize(parse_formula("forall x P(x) & forall x P(x) | forall x P(x)"))
    definitions = [text for _, text in ns.definitions]
    assert len(definitions) == len(set(definitions))


def test_corpus_is_well_shaped(corpus) -> None:
    for f in corpus:
        ns = normalize(f)
        assert verify_shape(ns) == [], f
        assert all(len(clause.variables) <= ns.k for clause in ns.clauses)


def test_variable_budget() -> None:
    f = parse_formula("forall x forall y forall z (E(x, y) & E(y, z) -> E(x, z))")
    with pytest.raises(VariableBudgetExceeded, match="3 variables, budget is 2"):
        normalize(f, k=2)
    assert normalize(f, k=4).k == 4
    with pytest.raises(NormalizationError, match="needs a sentence"):
        normalize(parse_formula("E(x, y)"))


def test_verify_shape_reports_hand_built_violations() -> None:
    ns = normalize(parse_formula("forall x exists y E(x, y)"))
    broken = Clause(
        ClauseShape.UNIVERSAL,
        (("exists", "y"), ("forall", "x")),
        Or((parse_formula("E(x, y) & !(E(y, x) | E(x, x))"), parse_formula("E(x, z)"))),
    )
    bad = replace(ns, clauses=ns.clauses + (broken,))
    problems = verify_shape(bad, k=2)
    assert any("prefix" in p for p in problems)
    assert any("matrix not DNF" in p for p in problems)
    assert any("unbound variable(s) z" in p for p in problems)
    assert any("budget is 2" in p for p in problems)
    missing_root = replace(ns, clauses=ns.clauses[:-1])
    assert any("unit clause" in p for p in verify_shape(missing_root))


def test_free_in_order() -> None:
    f = parse_formula("E(y, x) & exists z (F(z, w) & P(x))")
    assert free_in_order(f) == ("y", "x", "w")


def test_normal_form_prints_as_a_sentence_document() -> None:
    ns = normalize(parse_formula("forall x exists y E(x, y)"))
    doc = normalized_to_sentence(ns)
    assert doc.vocabulary.names == ("E", "Aux1", "Aux2")
    text = print_sentence(doc)
    assert print_sentence(parse_sentence(text)) == text


def test_normalization_is_model_equivalent(corpus) -> None:
    """Exhaustive at sizes 1 and 2, and at size 3 for small vocabularies; sampled otherwise."""
    rng = random.Random(2024)
    exhaustive_at_three = 0
    for f in corpus:
        ns = normalize(f)
        vocabulary = ns.base
        for n in (1, 2):
            for structure in enumerate_structures(vocabulary, n):
                truth = evaluate(f, structure)
                if n == 1 and len(ns.auxiliary) <= 10:
                    assert has_expansion(ns, structure, Method.ENUMERATION, cap=16) == truth, f
                assert has_expansion(ns, structure, Method.GROUNDING) == truth, f
        if len(fact_positions(vocabulary, 3)) <= 12:
            exhaustive_at_three += 1
            structures = enumerate_structures(vocabulary, 3)
        else:
            structures = (_random_structure(rng, vocabulary, 3) for _ in range(10))
        for structure in structures:
            assert has_expansion(ns, structure, Method.GROUNDING) == evaluate(f, structure), f
    assert exhaustive_at_three >= 10


def test_clause_formulas_hold_in_a_decoded_expansion() -> None:
    f = parse_formula("forall x exists y (E(x, y) & exists x (F(y, x) & P(x)))")
    ns = normalize(f)
    structure = FiniteStructure(
        2, ns.base, {"E": {(0, 1), (1, 1)}, "F": {(1, 0)}, "P": {(0,)}}
    )
    assert evaluate(f, structure)
    base = structure.restrict(ns.base.names)
    g = ground(ns, 2, fixed=base)
    result = satisfiable(g)
    assert result
    expanded = decode_witness(g, result.witness, ns.vocabulary, base)
    for clause in ns.clauses:
        assert evaluate(clause.to_formula(), expanded)
