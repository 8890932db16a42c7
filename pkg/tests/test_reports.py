from __future__ import annotations

import json

import pytest
from pydantic import ValidationError

from spectra.reports import (
    Agreement,
    CompilationReport,
    DifferentialEntry,
    DifferentialReport,
    Method,
    SpectrumEntry,
    SpectrumReport,
    render_structured,
    render_table,
    strip_timing,
)


def _spectrum() -> SpectrumReport:
    return SpectrumReport(
        sentence="even.fo",
        method=Method.GROUNDING,
        entries=[
            SpectrumEntry(n=1, member=False, seconds=0.5),
            SpectrumEntry(n=2, member=True, seconds=0.25),
            SpectrumEntry(n=3, member=False, bound_exceeded=True),
        ],
    )


def test_spectrum_table() -> None:
    text = render_table(_spectrum())
    lines = text.splitlines()
    assert lines[0] == "spectrum of even.fo (grounding)"
    assert lines[2] == "     1  no"
    assert lines[3] == "     2  yes"
    assert lines[4] == "     3  no      bound-exceeded"
    assert "members: 2" in lines
    assert "timing: n=1 0.500s" in lines


def test_strip_timing_gives_stable_tables() -> None:
    report = _spectrum()
    faster = report.model_copy(
        update={"entries": [entry.model_copy(update={"seconds": 0.0}) for entry in report.entries]}
    )
    assert strip_timing(render_table(report)) == strip_timing(render_table(faster))
    assert strip_timing(render_table(report)) == render_table(report, timing=False)


def test_structured_output_is_versioned_and_excludes_timing() -> None:
    text = render_structured(_spectrum())
    header, body = text.split("\n", 1)
    assert header == "format 1"
    payload = json.loads(body)
    assert payload["method"] == "grounding"
    assert [entry["n"] for entry in payload["entries"]] == [1, 2, 3]
    assert "seconds" not in payload["entries"][0]


def test_spectrum_range_must_be_contiguous() -> None:
    with pytest.raises(ValidationError, match="contiguous"):
        SpectrumReport(
            sentence="s",
            method=Method.ENUMERATION,
            entries=[SpectrumEntry(n=1, member=True), SpectrumEntry(n=3, member=True)],
        )
    assert _spectrum().members == [2]
    assert _spectrum().verdict(3).bound_exceeded
    assert _spectrum().verdict(9) is None


def _compilation(**overrides) -> CompilationReport:
    values = dict(
        machine="parity",
        construction="three-var",
        variable_bound=3,
        variable_count=3,
        max_arity=2,
        arity_bound=2,
        relation_count=14,
        conjunct_count=5,
        inventory={"order": 3, "transition": 2},
    )
    values.update(overrides)
    return CompilationReport(**values)


def test_compilation_report_checks_budget_and_inventory() -> None:
    text = render_table(_compilation(), timing=False)
    assert text.splitlines()[0] == "compiled parity (three-var)"
    assert "variables: 3 / 3" in text
    with pytest.raises(ValidationError, match="inventory"):
        _compilation(conjunct_count=6)
    with pytest.raises(ValidationError, match="exceeds the bound 3"):
        _compilation(variable_count=4)


def test_differential_counts() -> None:
    report = DifferentialReport(
        machine="walker",
        construction="two-k-plus-1",
        k=2,
        entries=[
            DifferentialEntry(n=3, outcome=Agreement.SKIPPED),
            DifferentialEntry(n=4, outcome=Agreement.AGREE, satisfiable=False, oracle=False),
            DifferentialEntry(n=5, outcome=Agreement.BOUND_EXCEEDED, satisfiable=False),
        ],
    )
    assert report.ok
    assert (report.agreements, report.disagreements, report.bound_exceeded) == (1, 0, 1)
    text = render_table(report, timing=False)
    assert text.splitlines()[0] == "verify walker (two-k-plus-1, k=2)"
    assert "1/3 agree, 0 disagree, 1 bound-exceeded" in text
    assert "     4  agree            no     no     0" in text
