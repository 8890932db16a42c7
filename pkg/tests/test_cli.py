from __future__ import annotations

import json
from pathlib import Path

import pytest

from spectra.cli.main import build_parser, parse_range, run
from spectra.textio import parse_dimacs_header, parse_sentence

FIXTURES = Path(__file__).parent / "fixtures"
MACHINES = FIXTURES / "machines"
SENTENCES = FIXTURES / "sentences"
PATH3 = str(FIXTURES / "structures" / "path3.txt")


def _sentence(name: str) -> str:
    return str(SENTENCES / name)


def _machine(name: str) -> str:
    return str(MACHINES / f"{name}.yml")


def test_check_prints_the_truth_value(capsys) -> None:
    code = run(["check", _sentence("allx.fo"), PATH3])
    assert code == 0
    assert capsys.readouterr().out == "false\n"


def test_spectrum_table(capsys) -> None:
    code = run(["spectrum", _sentence("twovar.fo"), "--max-n", "6", "--method", "enum"])
    assert code == 0
    out = capsys.readouterr().out
    assert out.startswith("spectrum of twovar (enumeration)")
    assert "members: 2,3,4,5,6" in out


def test_spectrum_by_grounding_matches_enumeration(capsys) -> None:
    run(["spectrum", _sentence("even.fo"), "--max-n", "4", "--method", "grounding"])
    assert "members: 2,4" in capsys.readouterr().out


def test_spectrum_structured_output(capsys) -> None:
    code = run(
        ["spectrum", _sentence("twovar.fo"), "--max-n", "3", "--format", "structured"]
    )
    assert code == 0
    header, body = capsys.readouterr().out.split("\n", 1)
    assert header == "format 1"
    assert [entry["member"] for entry in json.loads(body)["entries"]] == [False, True, True]


def test_enumeration_cap_exit_code(capsys) -> None:
    code = run(["spectrum", _sentence("even.fo"), "--min-n", "5", "--max-n", "5"])
    assert code == 4
    assert "exceed" in capsys.readouterr().err


def test_verdict_log(tmp_path: Path) -> None:
    log = tmp_path / "verdicts.jsonl"
    run(["spectrum", _sentence("twovar.fo"), "--max-n", "3", "--verdict-log", str(log)])
    records = [json.loads(line) for line in log.read_text().splitlines()]
    assert [(r["n"], r["verdict"]) for r in records] == [
        (1, "non-member"),
        (2, "member"),
        (3, "member"),
    ]
    assert {r["command"] for r in records} == {"spectrum"}


def test_normalize_writes_a_sentence_document(tmp_path: Path) -> None:
    output = tmp_path / "normal.fo"
    code = run(["normalize", _sentence("allx.fo"), "--output", str(output)])
    assert code == 0
    doc = parse_sentence(output.read_text())
    assert doc.vocabulary.names == ("E", "Aux1", "Aux2")


def test_normalize_budget_exit_code(capsys) -> None:
    assert run(["normalize", _sentence("even.fo"), "--k", "2"]) == 5
    assert "budget is 2" in capsys.readouterr().err


def test_ground_with_dimacs(tmp_path: Path, capsys) -> None:
    dimacs = tmp_path / "out" / "allx.cnf"
    code = run(["ground", _sentence("allx.fo"), "--n", "4", "--dimacs", str(dimacs)])
    assert code == 0
    out = capsys.readouterr().out
    assert "satisfiable: yes" in out
    variables, clauses = parse_dimacs_header(dimacs.read_text())
    assert f"({variables} variables, {clauses} clauses)" in out


def test_compile_tm_table_and_output(tmp_path: Path, capsys) -> None:
    output = tmp_path / "parity.fo"
    code = run(["compile-tm", _machine("parity"), "--output", str(output)])
    assert code == 0
    out = capsys.readouterr().out
    assert out.startswith("compiled parity (three-var)")
    assert "variables: 3 / 3" in out
    assert parse_sentence(output.read_text()).formula.free_variables == frozenset()


def test_compile_tm_with_k(capsys) -> None:
    code = run(
        ["compile-tm", _machine("bounce"), "--construction", "two-k-plus-1", "--k", "2"]
    )
    assert code == 0
    assert "compiled bounce (two-k-plus-1, k=2)" in capsys.readouterr().out


def test_simulate_tm(capsys) -> None:
    code = run(["simulate-tm", _machine("parity"), "--n", "6"])
    assert code == 0
    out = capsys.readouterr().out
    assert out.startswith("parity on 011 (time 6, space 6): accepts")


def test_verify_tm_agrees(tmp_path: Path, capsys) -> None:
    log = tmp_path / "verify.jsonl"
    code = run(
        ["verify-tm", _machine("parity"), "--range", "4..6", "--verdict-log", str(log)]
    )
    assert code == 0
    assert "3/3 agree, 0 disagree, 0 bound-exceeded" in capsys.readouterr().out
    assert len(log.read_text().splitlines()) == 3


@pytest.mark.parametrize(
    "argv, code",
    [
        (["check", str(SENTENCES / "broken.fo"), PATH3], 3),
        (["spectrum", str(SENTENCES / "missing.fo"), "--max-n", "2"], 3),
        (["compile-tm", str(MACHINES / "msb_first.yml")], 5),
        (["compile-tm", str(MACHINES / "parity.yml"), "--window-cap", "1"], 4),
        (["compile-tm", str(MACHINES / "parity.yml"), "--construction", "two-k-plus-1"], 5),
    ],
)
def test_failure_exit_codes(argv, code: int, capsys) -> None:
    assert run(argv) == code
    assert capsys.readouterr().err.startswith("error: ")


def test_broken_sentence_reports_its_position(capsys) -> None:
    run(["check", _sentence("broken.fo"), PATH3])
    assert "line 2, column 19" in capsys.readouterr().err


def test_bad_limits_file(tmp_path: Path) -> None:
    limits = tmp_path / "limits.yml"
    limits.write_text("limits:\n  bogus: 1\n", encoding="utf-8")
    argv = ["spectrum", _sentence("twovar.fo"), "--max-n", "2", "--limits", str(limits)]
    assert run(argv) == 7


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["spectrum", _sentence("twovar.fo")],
        ["spectrum", _sentence("twovar.fo"), "--max-n", "0"],
        ["spectrum", _sentence("twovar.fo"), "--max-n", "2", "--min-n", "3"],
        ["verify-tm", _machine("parity"), "--range", "5..4"],
        ["simulate-tm", _machine("parity"), "--n", "3", "--strategy", "random"],
    ],
)
def test_usage_errors_exit_with_two(argv) -> None:
    with pytest.raises(SystemExit) as excinfo:
        run(argv)
    assert excinfo.value.code == 2


def test_parse_range() -> None:
    assert parse_range("4..12") == (4, 12)
    assert parse_range("7") == (7, 7)


def test_parser_lists_every_subcommand() -> None:
    help_text = build_parser().format_help()
    for command in ("check", "spectrum", "normalize", "ground"):
        assert command in help_text
    for command in ("compile-tm", "simulate-tm", "verify-tm"):
        assert command in help_text
