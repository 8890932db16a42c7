"""Report schemas and their table / structured renderings."""

from .render import Report, render_structured, render_table, strip_timing
from .schemas import (
    Agreement,
    CompilationReport,
    DifferentialEntry,
    DifferentialReport,
    Method,
    Outcome,
    RunStep,
    RunVerdict,
    SpectrumEntry,
    SpectrumReport,
)

__all__ = [
    "Agreement",
    "CompilationReport",
    "DifferentialEntry",
    "DifferentialReport",
    "Method",
    "Outcome",
    "Report",
    "RunStep",
    "RunVerdict",
    "SpectrumEntry",
    "SpectrumReport",
    "render_structured",
    "render_table",
    "strip_timing",
]
