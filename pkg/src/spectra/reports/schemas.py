from __future__ import annotations

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Method(str, Enum):
    ENUMERATION = "enumeration"
    GROUNDING = "grounding"
    SIMULATION = "simulation"


class Outcome(str, Enum):
    ACCEPTS = "accepts"
    REJECTS = "rejects"
    BOUND_EXCEEDED = "bound-exceeded"


class Agreement(str, Enum):
    AGREE = "agree"
    DISAGREE = "disagree"
    BOUND_EXCEEDED = "bound-exceeded"
    SKIPPED = "skipped"


class SpectrumEntry(BaseModel):
    """Verdict for one domain size."""

    n: int = Field(ge=1)
    member: bool
    bound_exceeded: bool = False
    seconds: float = Field(default=0.0, exclude=True)


class SpectrumReport(BaseModel):
    """Spectrum membership over a contiguous range of domain sizes."""

    sentence: str
    method: Method
    entries: List[SpectrumEntry] = Field(default_factory=list)

    @model_validator(mode="after")
    def _contiguous(self) -> "SpectrumReport":
        sizes = [entry.n for entry in self.entries]
        if sizes and sizes != list(range(sizes[0], sizes[0] + len(sizes))):
            raise ValueError(f"Spectrum range must be contiguous and ascending, got {sizes}")
        return self

    @property
    def members(self) -> List[int]:
        return [entry.n for entry in self.entries if entry.member]

    def verdict(self, n: int) -> Optional[SpectrumEntry]:
        for entry in self.entries:
            if entry.n == n:
                return entry
        return None


class CompilationReport(BaseModel):
    """Budget measurements and axiom-group inventory of a compiled machine."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    machine: str
    construction: str
    k: Optional[int] = None
    variable_bound: int
    variable_count: int
    max_arity: int
    arity_bound: int
    relation_count: int
    conjunct_count: int
    inventory: Dict[str, int]
    sentence: Any = Field(default=None, exclude=True)
    seconds: float = Field(default=0.0, exclude=True)

    @model_validator(mode="after")
    def _within_budget(self) -> "CompilationReport":
        if self.variable_count > self.variable_bound:
            raise ValueError(
                f"Measured {self.variable_count} variables exceeds the bound {self.variable_bound}"
            )
        if sum(self.inventory.values()) != self.conjunct_count:
            raise ValueError("Axiom-group inventory does not add up to the conjunct count")
        return self


class DifferentialEntry(BaseModel):
    n: int
    outcome: Agreement
    satisfiable: Optional[bool] = None
    oracle: Optional[bool] = None
    oracle_bound_exceeded: bool = False
    atoms: int = 0
    seconds: float = Field(default=0.0, exclude=True)


class DifferentialReport(BaseModel):
    """Ground-SAT membership of a compiled sentence against the simulator."""

    machine: str
    construction: str
    k: Optional[int] = None
    entries: List[DifferentialEntry] = Field(default_factory=list)

    def _count(self, outcome: Agreement) -> int:
        return sum(1 for entry in self.entries if entry.outcome is outcome)

    @property
    def agreements(self) -> int:
        return self._count(Agreement.AGREE)

    @property
    def disagreements(self) -> int:
        return self._count(Agreement.DISAGREE)

    @property
    def bound_exceeded(self) -> int:
        return self._count(Agreement.BOUND_EXCEEDED)

    @property
    def ok(self) -> bool:
        return self.disagreements == 0


class RunStep(BaseModel):
    step: int
    state: str
    heads: List[int]
    tapes: List[List[str]]


class RunVerdict(BaseModel):
    """Outcome of a bounded simulation, with one accepting run when it accepts."""

    machine: str
    input: List[int]
    time_bound: int
    space_bound: int
    outcome: Outcome
    steps: int
    cells: int
    configurations: int = 0
    run: Optional[List[RunStep]] = None
    seconds: float = Field(default=0.0, exclude=True)

    @property
    def accepts(self) -> bool:
        return self.outcome is Outcome.ACCEPTS


__all__ = [
    "Agreement",
    "CompilationReport",
    "DifferentialEntry",
    "DifferentialReport",
    "Method",
    "Outcome",
    "RunStep",
    "RunVerdict",
    "SpectrumEntry",
    "SpectrumReport",
]
