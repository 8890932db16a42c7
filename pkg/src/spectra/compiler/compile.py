from __future__ import annotations

import logging
import time
from typing import Dict, List, Optional

from spectra.logic.syntax import Formula, Vocabulary, conj
from spectra.logic.transforms import distinct_variable_count, max_arity
from spectra.reports.schemas import CompilationReport
from spectra.textio.machine import InputOrder, TMDocument

from .axioms import (
    DEFAULT_WINDOW_CAP,
    acceptance_axioms,
    arithmetic_axioms_flat,
    arithmetic_axioms_paired,
    frame_and_uniqueness_axioms,
    initial_axioms,
    order_axioms,
    pairing_axioms,
    transition_axioms,
)
from .errors import CompilationError
from .grid import Construction, Grid, PairedGrid, grid_for

logger = logging.getLogger(__name__)

GROUPS = (
    "order",
    "shift",
    "arithmetic",
    "transition",
    "head-uniqueness",
    "initial",
    "acceptance",
)


def axiom_groups(
    tm: TMDocument, grid: Grid, window_cap: int = DEFAULT_WINDOW_CAP
) -> Dict[str, List[Formula]]:
    """The compiled conjuncts of ``tm`` on ``grid``, grouped by purpose in a fixed order."""
    pool = grid.pool
    paired = isinstance(grid, PairedGrid)
    groups: Dict[str, List[Formula]] = {
        "order": order_axioms(pool),
        "shift": pairing_axioms(pool) if paired else [],
        "arithmetic": arithmetic_axioms_flat(pool)
        + (arithmetic_axioms_paired(pool) if paired else []),
        "transition": transition_axioms(tm, grid, window_cap),
        "head-uniqueness": frame_and_uniqueness_axioms(tm, grid),
        "initial": initial_axioms(tm, grid),
        "acceptance": acceptance_axioms(tm, grid),
    }
    return {name: groups[name] for name in GROUPS}


def compile_machine(
    tm: TMDocument,
    construction: "str | Construction" = Construction.THREE_VAR,
    k: Optional[int] = None,
    window_cap: int = DEFAULT_WINDOW_CAP,
) -> CompilationReport:
    """Compile ``tm`` into a sentence whose spectrum is the set of ``N`` it accepts in bound.

    ``three-var`` targets linear time and space with at most three variables and
    binary relations; ``two-k-plus-1`` targets ``N^k`` with ``2k+1`` variables;
    ``two-k-plus-2`` targets ``N^k * floor(sqrt(N-1))`` with ``2k+2`` variables.
    """
    started = time.perf_counter()
    construction = Construction.parse(construction)
    if tm.input_order is not InputOrder.LSB_FIRST:
        raise CompilationError(
            f"Machine {tm.name} reads its input most significant bit first; "
            "compilation needs lsb-first"
        )
    grid = grid_for(construction, k)
    groups = axiom_groups(tm, grid, window_cap)
    conjuncts = [formula for group in groups.values() for formula in group]
    sentence = conj(*conjuncts)

    variables = distinct_variable_count(sentence)
    arity = max_arity(sentence)
    if variables > grid.variable_bound or arity > grid.arity_bound:
        raise CompilationError(
            f"Compiled sentence uses {variables} variables and arity {arity}; "
            f"{grid.describe()} allows {grid.variable_bound} and {grid.arity_bound}"
        )
    report = CompilationReport(
        machine=tm.name,
        construction=construction.value,
        k=None if construction is Construction.THREE_VAR else grid.k,
        variable_bound=grid.variable_bound,
        variable_count=variables,
        max_arity=arity,
        arity_bound=grid.arity_bound,
        relation_count=len(sentence.relation_symbols),
        conjunct_count=len(conjuncts),
        inventory={name: len(group) for name, group in groups.items()},
        sentence=sentence,
        seconds=time.perf_counter() - started,
    )
    logger.info(
        "Compiled %s with %s: %d conjuncts, %d variables, %d relations",
        tm.name,
        grid.describe(),
        report.conjunct_count,
        variables,
        report.relation_count,
    )
    return report


def compiled_vocabulary(sentence: Formula) -> Vocabulary:
    """Vocabulary of a compiled sentence, relations sorted by name."""
    return Vocabulary(tuple(sorted(sentence.relation_symbols, key=lambda s: s.name)))


__all__ = ["GROUPS", "axiom_groups", "compile_machine", "compiled_vocabulary"]
