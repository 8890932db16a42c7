from __future__ import annotations

import itertools
import random

import pytest

from spectra.logic import (
    FiniteStructure,
    StructureError,
    UnboundVariableError,
    Vocabulary,
    VocabularyError,
    atom,
    check_vocabulary,
    conj,
    disj,
    distinct_variable_count,
    evaluate,
    exists,
    forall,
    free_variables,
    max_arity,
    neg,
    rename_variables,
    swap_variables,
    to_negation_normal_form,
)
from spectra.logic.syntax import And, Eq, Not, Or
from spectra.logic.transforms import is_negation_normal_form
from spectra.models import enumerate_structures
from spectra.textio import parse_formula


EP = Vocabulary.of(("E", 2), ("P", 1))


def _path(n: int) -> FiniteStructure:
    return FiniteStructure(n, EP, {"E": {(i, i + 1) for i in range(n - 1)}, "P": {(0,)}})


def test_builders_flatten_and_collapse() -> None:
    a, b, c = atom("P", "x"), atom("P", "y"), atom("P", "z")
    nested = conj(a, conj(b, c))
    assert isinstance(nested, And)
    assert nested.operands == (a, b, c)
    assert conj(a) is a
    assert disj(a, disj(b, c)) == Or((a, b, c))
    assert neg(neg(a)) == a
    with pytest.raises(ValueError):
        conj()


def test_variable_count_counts_reuse_once() -> None:
    f = parse_formula("forall x exists y (E(x, y) & exists x E(y, x))")
    assert distinct_variable_count(f) == 2
    assert free_variables(f) == frozenset()
    assert max_arity(f) == 2
    assert free_variables(parse_formula("E(x, y) & exists y P(y)")) == {"x", "y"}


def test_evaluate_quantifiers_and_equality() -> None:
    structure = _path(3)
    assert evaluate(parse_formula("exists x exists y E(x, y)"), structure)
    assert not evaluate(parse_formula("forall x exists y E(x, y)"), structure)
    assert evaluate(parse_formula("forall x (P(x) <-> !exists y E(y, x))"), structure)
    assert evaluate(parse_formula("forall x forall y (E(x, y) -> x != y)"), structure)
    assert evaluate(parse_formula("E(x, y)"), structure, {"x": 1, "y": 2})


def test_evaluate_restores_shadowed_assignment() -> None:
    structure = _path(3)
    f = parse_formula("P(x) & exists x E(x, x) | P(x)")
    assert evaluate(f, structure, {"x": 0})
    assert not evaluate(f, structure, {"x": 2})


def test_unbound_variable_is_an_error() -> None:
    with pytest.raises(UnboundVariableError, match="Unbound free variable"):
        evaluate(parse_formula("E(x, y)"), _path(3), {"x": 0})
    with pytest.raises(UnboundVariableError, match="outside"):
        evaluate(parse_formula("P(x)"), _path(3), {"x": 3})


def test_vocabulary_mismatches_are_reported() -> None:
    with pytest.raises(VocabularyError, match="not declared"):
        check_vocabulary(parse_formula("forall x Q(x)"), EP)
    with pytest.raises(VocabularyError, match="arity 1, declared 2"):
        check_vocabulary(parse_formula("forall x E(x)"), EP)
    with pytest.raises(VocabularyError, match="declared twice"):
        Vocabulary.of(("E", 2), ("E", 2))


def test_structure_invariants() -> None:
    with pytest.raises(StructureError, match="outside"):
        FiniteStructure(2, EP, {"E": {(0, 2)}})
    with pytest.raises(StructureError, match="arity"):
        FiniteStructure(2, EP, {"E": {(0,)}})
    with pytest.raises(VocabularyError):
        FiniteStructure(2, EP, {"Q": {(0,)}})
    with pytest.raises(StructureError):
        FiniteStructure(0, EP)


def test_expand_keeps_base_relations() -> None:
    base = _path(3)
    expanded = base.expand(Vocabulary.of(("R", 1)), {"R": {(2,)}})
    assert expanded.holds("R", (2,))
    assert expanded.relations["E"] == base.relations["E"]
    assert expanded.restrict(["E", "P"]) == base
    with pytest.raises(StructureError, match="reinterpret"):
        base.expand(Vocabulary.of(("R", 1)), {"E": set()})


def test_nullary_relation_truth() -> None:
    vocabulary = Vocabulary.of(("A", 0))
    assert evaluate(atom("A"), FiniteStructure(1, vocabulary, {"A": {()}}))
    assert not evaluate(atom("A"), FiniteStructure(1, vocabulary))


def test_negation_normal_form_preserves_truth(corpus) -> None:
    vocabulary = Vocabulary.of(("E", 2), ("F", 2), ("P", 1))
    rng = random.Random(7)
    for f in corpus:
        g = to_negation_normal_form(f)
        assert is_negation_normal_form(g)
        assert distinct_variable_count(g) <= distinct_variable_count(f)
        for n in (1, 2, 3):
            for _ in range(10):
                relations = {
                    "E": {p for p in itertools.product(range(n), repeat=2) if rng.random() < 0.4},
                    "F": {p for p in itertools.product(range(n), repeat=2) if rng.random() < 0.4},
                    "P": {(i,) for i in range(n) if rng.random() < 0.5},
                }
                structure = FiniteStructure(n, vocabulary, relations)
                assert evaluate(f, structure) == evaluate(g, structure)


def test_nnf_of_iff_under_negation() -> None:
    f = parse_formula("!(P(x) <-> P(y))")
    g = to_negation_normal_form(f)
    assert is_negation_normal_form(g)
    for structure in enumerate_structures(Vocabulary.of(("P", 1)), 2):
        for x, y in itertools.product(range(2), repeat=2):
            env = {"x": x, "y": y}
            assert evaluate(f, structure, env) == evaluate(g, structure, env)


def test_rename_variables_is_capture_free() -> None:
    f = parse_formula("forall x (E(x, y) -> exists y E(y, x))")
    renamed = rename_variables(f, {"x": "u", "y": "v"})
    assert renamed.variables == {"u", "v"}
    assert renamed.free_variables == {"v"}
    for structure in enumerate_structures(Vocabulary.of(("E", 2)), 2):
        for value in range(2):
            assert evaluate(f, structure, {"y": value}) == evaluate(
                renamed, structure, {"v": value}
            )
    with pytest.raises(ValueError, match="injective"):
        rename_variables(f, {"x": "y"})


def test_swap_variables_exchanges_every_occurrence() -> None:
    f = conj(atom("E", "x", "z"), exists("z", atom("P", "z")), Not(Eq("x", "y")))
    swapped = swap_variables(f, "x", "z")
    assert swapped == conj(atom("E", "z", "x"), exists("x", atom("P", "x")), Not(Eq("z", "y")))
    assert swap_variables(f, "x", "x") is f
    assert forall(("x", "y"), atom("E", "x", "y")).variables == {"x", "y"}
