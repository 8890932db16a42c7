from __future__ import annotations

import pytest

from spectra.compiler import (
    GROUPS,
    CompilationError,
    Construction,
    FlatGrid,
    LexGrid,
    PairedGrid,
    WindowCapExceeded,
    compile_machine,
    compiled_vocabulary,
    encode_run,
    grid_for,
    verify_compilation,
)
from spectra.config import WorkbenchLimits
from spectra.logic import evaluate
from spectra.logic.transforms import distinct_variable_count, max_arity
from spectra.machines import run_binary
from spectra.reports import Agreement

# Every fixture except msb_first, which the compiler rejects.
FIXTURE_MACHINES = [
    "accept_now",
    "never_accept",
    "parity",
    "second_bit",
    "bounce",
    "guess",
    "walker",
    "two_tape",
]


@pytest.mark.parametrize("name", FIXTURE_MACHINES)
def test_three_variable_budget(machine, name: str) -> None:
    report = compile_machine(machine(name), "three-var")
    assert report.variable_bound == 3
    assert distinct_variable_count(report.sentence) <= 3
    assert max_arity(report.sentence) <= 2
    assert report.k is None


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("name", FIXTURE_MACHINES)
def test_lexicographic_budget(machine, name: str, k: int) -> None:
    report = compile_machine(machine(name), Construction.TWO_K_PLUS_1, k)
    assert report.variable_count <= 2 * k + 1
    assert report.max_arity <= 2 * k
    assert report.k == k


@pytest.mark.parametrize("name", FIXTURE_MACHINES)
def test_paired_budget(machine, name: str) -> None:
    report = compile_machine(machine(name), "two_k_plus_2", 2)
    assert report.variable_count <= 6
    assert report.max_arity <= 5
    assert report.inventory["shift"] > 0


def test_inventory_covers_every_conjunct(machine) -> None:
    report = compile_machine(machine("bounce"), "three-var")
    assert tuple(report.inventory) == GROUPS
    assert sum(report.inventory.values()) == report.conjunct_count
    assert report.inventory["shift"] == 0
    assert report.inventory["acceptance"] == 1
    assert report.relation_count == len(compiled_vocabulary(report.sentence))


def test_compiled_vocabulary_is_sorted(machine) -> None:
    report = compile_machine(machine("parity"), "three-var")
    names = compiled_vocabulary(report.sentence).names
    assert list(names) == sorted(names)
    assert "STATE_1_accept" in names
    assert "SYMBOL_1_B" in names


def test_multi_tape_machines_get_step_relations(machine) -> None:
    names = compiled_vocabulary(compile_machine(machine("two_tape")).sentence).names
    assert {"STEP_0", "STEP_1", "STEP_2", "STEP_IDLE"} <= set(names)
    single = compiled_vocabulary(compile_machine(machine("parity")).sentence).names
    assert not any(name.startswith("STEP_") for name in single)


def test_window_cap(machine) -> None:
    with pytest.raises(WindowCapExceeded, match="cap is 1"):
        compile_machine(machine("parity"), "three-var", window_cap=1)


def test_msb_first_machines_do_not_compile(machine) -> None:
    with pytest.raises(CompilationError, match="most significant bit first"):
        compile_machine(machine("msb_first"))


def test_grid_requirements() -> None:
    with pytest.raises(CompilationError, match="k >= 2"):
        PairedGrid(1)
    with pytest.raises(CompilationError, match="k >= 1"):
        LexGrid(0)
    with pytest.raises(CompilationError, match="needs k"):
        grid_for("two-k-plus-1")
    assert isinstance(grid_for("three_var"), FlatGrid)
    assert PairedGrid(2).side(10) == 100 * 3


@pytest.mark.parametrize(
    "name, grid, n",
    [
        ("parity", FlatGrid(), 6),
        ("bounce", FlatGrid(), 5),
        ("accept_now", FlatGrid(), 4),
        ("parity", LexGrid(1), 4),
        ("two_tape", FlatGrid(), 5),
    ],
)
def test_accepting_run_encodes_a_model(machine, name: str, grid, n: int) -> None:
    tm = machine(name)
    report = compile_machine(tm, grid.construction, None if isinstance(grid, FlatGrid) else grid.k)
    verdict = run_binary(tm, n, grid.bound_kind, grid.k)
    assert verdict.accepts
    structure = encode_run(tm, verdict, n, grid, compiled_vocabulary(report.sentence))
    assert evaluate(report.sentence, structure)


def test_rejected_input_has_no_run(machine) -> None:
    tm = machine("parity")
    verdict = run_binary(tm, 5)
    with pytest.raises(CompilationError, match="did not accept"):
        encode_run(tm, verdict, 5, FlatGrid(), compiled_vocabulary(compile_machine(tm).sentence))


@pytest.mark.parametrize("name", ["accept_now", "never_accept", "parity"])
def test_three_variable_spectrum_matches_the_simulator(machine, name: str) -> None:
    report = verify_compilation(machine(name), "three-var", range(4, 13))
    assert report.ok
    assert report.agreements == 9
    assert report.disagreements == 0


def test_small_sizes_are_skipped(machine) -> None:
    report = verify_compilation(
        machine("two_tape"), "three-var", [2, 3, 4, 5, 7], limits=WorkbenchLimits(n_min=4)
    )
    outcomes = {entry.n: entry.outcome for entry in report.entries}
    assert outcomes[2] is Agreement.SKIPPED
    assert outcomes[3] is Agreement.SKIPPED
    assert outcomes[4] is Agreement.AGREE
    assert outcomes[5] is Agreement.AGREE
    assert outcomes[7] is Agreement.AGREE
    assert [entry.oracle for entry in report.entries if entry.n >= 4] == [True, True, False]
