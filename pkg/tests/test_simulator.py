from __future__ import annotations

import logging
from pathlib import Path

import pytest

from spectra.machines import (
    BoundKind,
    Configuration,
    ConfigurationCapExceeded,
    Strategy,
    accepts_binary,
    binary_of,
    bounds_for,
    render_run,
    replay,
    run_binary,
    simulate,
    spectrum_oracle,
)
from spectra.reports import Outcome
from spectra.textio import parse_tm, print_tm

FIXTURE_MACHINES = sorted(
    path.stem for path in (Path(__file__).parent / "fixtures" / "machines").glob("*.yml")
)


def test_binary_of_is_lsb_first() -> None:
    assert binary_of(6) == [0, 1, 1]
    assert binary_of(1) == [1]
    with pytest.raises(ValueError):
        binary_of(0)


def test_bounds() -> None:
    assert bounds_for(10) == 10
    assert bounds_for(10, BoundKind.POLY, 2) == 100
    assert bounds_for(10, BoundKind.POLY_HALF, 2) == 300
    assert bounds_for(26, "poly_half", 1) == 130


def test_parity_accepts_even_sizes(machine) -> None:
    tm = machine("parity")
    members = [n for n in range(2, 13) if accepts_binary(tm, n)]
    assert members == [2, 4, 6, 8, 10, 12]


@pytest.mark.parametrize(
    "name, expected",
    [
        ("accept_now", list(range(4, 13))),
        ("never_accept", []),
        ("second_bit", [6, 7, 10, 11]),
        ("bounce", list(range(4, 13))),
        ("guess", [5, 6, 7, 9, 10, 11, 12]),
        ("two_tape", [4, 5, 6, 8, 9, 10, 12]),
    ],
)
def test_fixture_targets(machine, name: str, expected) -> None:
    report = spectrum_oracle(machine(name), range(4, 13))
    assert report.members == expected
    assert not any(entry.bound_exceeded for entry in report.entries)


@pytest.mark.parametrize("name", FIXTURE_MACHINES)
def test_bfs_and_dfs_agree(machine, name: str) -> None:
    tm = machine(name)
    for n in range(2, 33):
        bfs = run_binary(tm, n, strategy=Strategy.BFS)
        dfs = run_binary(tm, n, strategy=Strategy.DFS)
        assert bfs.accepts == dfs.accepts, n


def test_accepting_run_replays(machine) -> None:
    for name in ("bounce", "guess", "two_tape"):
        tm = machine(name)
        verdict = run_binary(tm, 10)
        assert verdict.accepts
        assert replay(tm, verdict)
        assert verdict.run[0].state == tm.start
        assert verdict.run[-1].state == tm.accept
        assert verdict.steps == len(verdict.run) - 1


def test_replay_rejects_tampered_run(machine) -> None:
    tm = machine("bounce")
    verdict = run_binary(tm, 6)
    tampered = verdict.model_copy(deep=True)
    tampered.run[1].tapes[0][0] = "1" if tampered.run[1].tapes[0][0] == "0" else "0"
    assert not replay(tm, tampered)
    assert not replay(tm, run_binary(machine("never_accept"), 6))


def test_acceptance_is_monotone_in_bounds(machine) -> None:
    for name in ("bounce", "guess", "second_bit", "two_tape"):
        tm = machine(name)
        for n in (5, 6, 7, 10):
            bits = binary_of(n)
            for t in range(1, 7):
                for s in range(1, 7):
                    if simulate(tm, bits, t, s).accepts:
                        assert simulate(tm, bits, t + 1, s).accepts
                        assert simulate(tm, bits, t, s + 1).accepts


def test_time_bound_counts_rows(machine) -> None:
    tm = machine("bounce")
    bits = binary_of(6)
    assert simulate(tm, bits, 4, 4).accepts
    short = simulate(tm, bits, 3, 4)
    assert short.outcome is Outcome.BOUND_EXCEEDED
    assert not short.accepts


def test_space_bound_cut_is_reported(machine, caplog) -> None:
    tm = machine("walker")
    verdict = run_binary(tm, 6)
    assert verdict.outcome is Outcome.BOUND_EXCEEDED
    with caplog.at_level(logging.WARNING):
        assert not accepts_binary(tm, 6)
    assert "exceeded its linear bound" in caplog.text


def test_moving_left_of_cell_zero_blocks(machine) -> None:
    text = print_tm(machine("parity")).replace("scan 0 -> accept 0 S", "scan 0 -> accept 0 L")
    tm = parse_tm(text)
    verdict = run_binary(tm, 6)
    assert verdict.outcome is Outcome.REJECTS


def test_msb_first_input_is_reversed(machine) -> None:
    tm = machine("msb_first")
    assert Configuration.initial(tm, binary_of(6)).tapes[0] == ("1", "1", "0")
    assert all(accepts_binary(tm, n) for n in range(2, 9))


def test_configuration_cap(machine) -> None:
    with pytest.raises(ConfigurationCapExceeded, match="more than 2 configurations"):
        run_binary(machine("guess"), 12, configuration_cap=2)


def test_render_run_lists_steps(machine) -> None:
    verdict = run_binary(machine("bounce"), 6)
    text = render_run(verdict)
    assert text.splitlines()[0] == "bounce on 011 (time 6, space 6): accepts"
    assert "mark" in text
    steps = [line for line in text.splitlines() if line.strip()[:1].isdigit()]
    assert [int(line.split()[0]) for line in steps] == [0, 1, 2, 3]
