from __future__ import annotations

from pathlib import Path
from typing import Callable, List

import pytest

from spectra.logic import Formula
from spectra.textio import TMDocument, load_tm, parse_formula


FIXTURES = Path(__file__).parent / "fixtures"
MACHINES = FIXTURES / "machines"

# k <= 3 variables, at most two binary relations (E, F) and one unary relation (P).
CORPUS: List[str] = [
    "forall x exists y E(x, y)",
    "exists x forall y E(x, y)",
    "forall x !E(x, x)",
    "forall x forall y (E(x, y) -> E(y, x))",
    "forall x forall y forall z (E(x, y) & E(y, z) -> E(x, z))",
    "exists x P(x) & exists x !P(x)",
    "forall x (P(x) <-> !exists y E(y, x))",
    "forall x forall y (x = y | E(x, y) | E(y, x))",
    "exists x exists y (x != y & E(x, y))",
    "forall x exists y (E(x, y) & exists x (F(y, x) & P(x)))",
    "!exists x E(x, x)",
    "forall x forall y (F(x, y) -> !F(y, x))",
    "exists x (P(x) & forall y (E(x, y) | x = y))",
    "forall x (P(x) | exists y (F(x, y) & !P(y)))",
    "forall x forall y (E(x, y) <-> F(y, x))",
    "exists x forall y (E(y, x) -> P(y))",
    "forall x exists y exists z (E(x, y) & E(y, z) & z != x)",
    "forall x forall y exists z (E(x, z) & F(z, y))",
    "exists x (P(x) | !P(x))",
    "exists x (E(x, x) & !F(x, x)) | forall x P(x)",
    "forall x (exists y E(x, y) -> exists y F(y, x))",
    "!forall x forall y (E(x, y) -> F(x, y))",
]


@pytest.fixture()
def machine() -> Callable[[str], TMDocument]:
    """Load a fixture machine by file stem."""

    def load(name: str) -> TMDocument:
        return load_tm(MACHINES / f"{name}.yml")

    return load


@pytest.fixture()
def corpus() -> List[Formula]:
    """The normalization corpus, parsed."""
    return [parse_formula(text) for text in CORPUS]
