from __future__ import annotations

import os
from typing import Optional, Union

from jinja2 import Environment, FileSystemLoader

from spectra.textio.sentence import FORMAT_VERSION

from .schemas import CompilationReport, DifferentialReport, RunVerdict, SpectrumReport

Report = Union[SpectrumReport, CompilationReport, DifferentialReport, RunVerdict]

template_path = os.path.join(os.path.dirname(__file__), "templates")
jinja_env = Environment(
    loader=FileSystemLoader(template_path),
    autoescape=False,
    keep_trailing_newline=True,
)


def _yesno(value: Optional[bool]) -> str:
    if value is None:
        return "-"
    return "yes" if value else "no"


jinja_env.filters["yesno"] = _yesno

_TEMPLATES = {
    SpectrumReport: "spectrum.txt.j2",
    CompilationReport: "compilation.txt.j2",
    DifferentialReport: "differential.txt.j2",
    RunVerdict: "run.txt.j2",
}


def render_table(report: Report, timing: bool = True) -> str:
    """Human-readable table. Timing lines start with ``timing:`` so they can be filtered."""
    name = _TEMPLATES.get(type(report))
    if name is None:
        raise TypeError(f"No table template for {type(report).__name__}")
    return jinja_env.get_template(name).render(report=report, timing=timing)


def render_structured(report: Report) -> str:
    """Versioned structured text: a ``format`` line followed by the report as JSON.

    Timing fields are excluded so equal inputs give byte-identical output.
    """
    return f"format {FORMAT_VERSION}\n{report.model_dump_json(indent=2)}\n"


def strip_timing(text: str) -> str:
    return "".join(line for line in text.splitlines(keepends=True) if not line.startswith("timing:"))


__all__ = ["Report", "render_structured", "render_table", "strip_timing"]
