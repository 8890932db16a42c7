from __future__ import annotations

import logging
import time
from functools import partial
from typing import Iterable, Optional

from spectra.config.limits import WorkbenchLimits
from spectra.grounding.direct import ground_sentence
from spectra.grounding.solver import satisfiable
from spectra.logic.syntax import Formula
from spectra.machines.simulator import run_binary
from spectra.reports.schemas import Agreement, DifferentialEntry, DifferentialReport, Outcome
from spectra.textio.machine import TMDocument
from spectra.utils.parallel import map_in_order

from .compile import compile_machine
from .encoding import order_structure
from .grid import Construction, Grid, grid_for

logger = logging.getLogger(__name__)


def _differential_entry(
    n: int,
    tm: TMDocument,
    sentence: Formula,
    grid: Grid,
    limits: WorkbenchLimits,
) -> DifferentialEntry:
    if n < limits.n_min:
        return DifferentialEntry(n=n, outcome=Agreement.SKIPPED)
    started = time.perf_counter()
    verdict = run_binary(
        tm, n, grid.bound_kind, grid.k, configuration_cap=limits.configuration_cap
    )
    oracle_cut = verdict.outcome is Outcome.BOUND_EXCEEDED
    g = ground_sentence(
        sentence, n, fixed=order_structure(n), distribute_cap=limits.distribute_cap
    )
    sat = bool(satisfiable(g))
    if oracle_cut and not sat:
        outcome = Agreement.BOUND_EXCEEDED
    elif sat == verdict.accepts and not oracle_cut:
        outcome = Agreement.AGREE
    else:
        outcome = Agreement.DISAGREE
        logger.error(
            "%s at N=%d: ground SAT says %s, simulator says %s",
            tm.name,
            n,
            "yes" if sat else "no",
            verdict.outcome.value,
        )
    return DifferentialEntry(
        n=n,
        outcome=outcome,
        satisfiable=sat,
        oracle=verdict.accepts,
        oracle_bound_exceeded=oracle_cut,
        atoms=len(g.atoms),
        seconds=time.perf_counter() - started,
    )


def verify_compilation(
    tm: TMDocument,
    construction: "str | Construction",
    sizes: Iterable[int],
    k: Optional[int] = None,
    limits: Optional[WorkbenchLimits] = None,
) -> DifferentialReport:
    """Compare ground-SAT membership of the compiled sentence with the simulator, size by size.

    The order relations are fixed to the natural order on ``[N]``; every other
    relation is left to the solver. Sizes below ``limits.n_min`` are skipped.
    """
    limits = limits or WorkbenchLimits()
    construction = Construction.parse(construction)
    grid = grid_for(construction, k)
    report = compile_machine(tm, construction, k, limits.window_cap)
    worker = partial(
        _differential_entry, tm=tm, sentence=report.sentence, grid=grid, limits=limits
    )
    entries = map_in_order(worker, sorted(set(sizes)), limits.workers)
    differential = DifferentialReport(
        machine=tm.name, construction=construction.value, k=report.k, entries=entries
    )
    logger.info(
        "Verified %s (%s): %d agree, %d disagree, %d bound-exceeded",
        tm.name,
        grid.describe(),
        differential.agreements,
        differential.disagreements,
        differential.bound_exceeded,
    )
    return differential


__all__ = ["verify_compilation"]
