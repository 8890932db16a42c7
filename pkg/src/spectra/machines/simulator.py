from __future__ import annotations

import logging
import math
import time
from collections import deque
from enum import Enum
from functools import partial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from spectra.errors import CapExceededError
from spectra.reports.render import render_table
from spectra.reports.schemas import (
    Method,
    Outcome,
    RunStep,
    RunVerdict,
    SpectrumEntry,
    SpectrumReport,
)
from spectra.textio.machine import TMDocument
from spectra.utils.parallel import map_in_order

from .configuration import Configuration, binary_of, successors

logger = logging.getLogger(__name__)

DEFAULT_CONFIGURATION_CAP = 1_000_000


class ConfigurationCapExceeded(CapExceededError):
    """Raised when a simulation visits more configurations than the safety cap allows."""


class Strategy(str, Enum):
    BFS = "bfs"
    DFS = "dfs"


class BoundKind(str, Enum):
    LINEAR = "linear"
    POLY = "poly"
    POLY_HALF = "poly_half"


def bounds_for(n: int, kind: BoundKind = BoundKind.LINEAR, k: int = 1) -> int:
    """Time and space bound: ``N``, ``N^k`` or ``N^k * floor(sqrt(N-1))``."""
    kind = BoundKind(kind)
    if kind is BoundKind.LINEAR:
        return n
    if kind is BoundKind.POLY:
        return n**k
    return n**k * math.isqrt(n - 1)


class _Search:
    def __init__(self, tm: TMDocument, time_bound: int, space_bound: int, cap: int):
        self.tm = tm
        self.time_bound = time_bound
        self.space_bound = space_bound
        self.cap = cap
        self.cut = False
        self.deepest = 0
        self.widest = 0
        self.visited = 0

    def _count(self, config: Configuration) -> None:
        self.visited += 1
        if self.visited > self.cap:
            raise ConfigurationCapExceeded(
                f"Simulation of {self.tm.name} visited more than {self.cap} configurations"
            )
        self.widest = max(self.widest, max(config.heads) + 1)

    def _expand(self, config: Configuration, depth: int) -> List[Configuration]:
        """Successors of a non-accepting configuration at ``depth``; records any bound cut."""
        found: List[Configuration] = []
        for successor, cut in successors(self.tm, config, self.space_bound):
            if cut:
                self.cut = True
            elif depth + 1 >= self.time_bound:
                self.cut = True
            elif successor is not None:
                found.append(successor)
        return found

    def bfs(self, start: Configuration) -> Optional[List[Configuration]]:
        parents: Dict[Configuration, Optional[Configuration]] = {start: None}
        self._count(start)
        frontier = deque([(start, 0)])
        while frontier:
            config, depth = frontier.popleft()
            self.deepest = max(self.deepest, depth)
            if config.state == self.tm.accept:
                return _path(parents, config)
            for successor in self._expand(config, depth):
                if successor in parents:
                    continue
                parents[successor] = config
                self._count(successor)
                frontier.append((successor, depth + 1))
        return None

    def dfs(self, start: Configuration) -> Optional[List[Configuration]]:
        # Largest remaining budget with which a configuration was searched without success.
        exhausted: Dict[Configuration, int] = {}
        path: List[Configuration] = [start]
        self._count(start)
        stack: List[Tuple[Configuration, Iterable[Configuration]]] = []
        if start.state == self.tm.accept:
            return path
        stack.append((start, iter(self._expand(start, 0))))
        while stack:
            config, pending = stack[-1]
            depth = len(stack) - 1
            self.deepest = max(self.deepest, depth)
            successor = next(iter(pending), None)
            if successor is None:
                stack.pop()
                path.pop()
                remaining = self.time_bound - depth
                exhausted[config] = max(exhausted.get(config, 0), remaining)
                continue
            remaining = self.time_bound - depth - 1
            if exhausted.get(successor, 0) >= remaining:
                continue
            self._count(successor)
            path.append(successor)
            self.deepest = max(self.deepest, depth + 1)
            if successor.state == self.tm.accept:
                return path
            stack.append((successor, iter(self._expand(successor, depth + 1))))
        return None


def _path(
    parents: Dict[Configuration, Optional[Configuration]], end: Configuration
) -> List[Configuration]:
    path: List[Configuration] = []
    current: Optional[Configuration] = end
    while current is not None:
        path.append(current)
        current = parents[current]
    return path[::-1]


def simulate(
    tm: TMDocument,
    bits: Sequence[int],
    time_bound: int,
    space_bound: int,
    strategy: Strategy = Strategy.BFS,
    configuration_cap: int = DEFAULT_CONFIGURATION_CAP,
) -> RunVerdict:
    """Explore the bounded configuration graph of ``tm`` on ``bits``.

    A run accepts when it reaches the accept state within ``time_bound - 1``
    steps while every head stays below ``space_bound``. The verdict is
    ``bound-exceeded`` when no run accepts but some branch was cut by a bound.
    """
    if time_bound < 1 or space_bound < 1:
        raise ValueError("Time and space bounds must be at least 1")
    started = time.perf_counter()
    search = _Search(tm, time_bound, space_bound, configuration_cap)
    start = Configuration.initial(tm, bits)
    if Strategy(strategy) is Strategy.BFS:
        run = search.bfs(start)
    else:
        run = search.dfs(start)

    if run is not None:
        outcome = Outcome.ACCEPTS
        steps = len(run) - 1
        cells = max(max(c.heads) for c in run) + 1
        width = max([cells] + [len(t) for c in run for t in c.tapes])
        trace: Optional[List[RunStep]] = [
            RunStep(
                step=i, state=c.state, heads=list(c.heads), tapes=c.cells(tm.blank, width)
            )
            for i, c in enumerate(run)
        ]
    else:
        outcome = Outcome.BOUND_EXCEEDED if search.cut else Outcome.REJECTS
        steps, cells, trace = search.deepest, search.widest, None
    verdict = RunVerdict(
        machine=tm.name,
        input=list(bits),
        time_bound=time_bound,
        space_bound=space_bound,
        outcome=outcome,
        steps=steps,
        cells=cells,
        configurations=search.visited,
        run=trace,
        seconds=time.perf_counter() - started,
    )
    logger.debug(
        "Simulated %s for T=%d S=%d: %s after %d configuration(s)",
        tm.name,
        time_bound,
        space_bound,
        outcome.value,
        search.visited,
    )
    return verdict


def run_binary(
    tm: TMDocument,
    n: int,
    bound_kind: BoundKind = BoundKind.LINEAR,
    k: int = 1,
    strategy: Strategy = Strategy.BFS,
    configuration_cap: int = DEFAULT_CONFIGURATION_CAP,
) -> RunVerdict:
    bound = bounds_for(n, bound_kind, k)
    if bound < 1:
        raise ValueError(f"{BoundKind(bound_kind).value} bound is empty at N={n}")
    return simulate(tm, binary_of(n), bound, bound, strategy, configuration_cap)


def accepts_binary(
    tm: TMDocument,
    n: int,
    bound_kind: BoundKind = BoundKind.LINEAR,
    k: int = 1,
    strategy: Strategy = Strategy.BFS,
    configuration_cap: int = DEFAULT_CONFIGURATION_CAP,
) -> bool:
    """Does ``tm`` accept the binary input ``N`` within the chosen bound? Cut-off runs count as no."""
    verdict = run_binary(tm, n, bound_kind, k, strategy, configuration_cap)
    if verdict.outcome is Outcome.BOUND_EXCEEDED:
        logger.warning(
            "%s on N=%d exceeded its %s bound (T=S=%d); counted as not accepted",
            tm.name,
            n,
            BoundKind(bound_kind).value,
            verdict.time_bound,
        )
    return verdict.accepts


def _oracle_entry(
    n: int, tm: TMDocument, bound_kind: BoundKind, k: int, strategy: Strategy, cap: int
) -> SpectrumEntry:
    verdict = run_binary(tm, n, bound_kind, k, strategy, cap)
    if verdict.outcome is Outcome.BOUND_EXCEEDED:
        logger.warning("%s on N=%d exceeded its bound; counted as not accepted", tm.name, n)
    return SpectrumEntry(
        n=n,
        member=verdict.accepts,
        bound_exceeded=verdict.outcome is Outcome.BOUND_EXCEEDED,
        seconds=verdict.seconds,
    )


def spectrum_oracle(
    tm: TMDocument,
    sizes: Iterable[int],
    bound_kind: BoundKind = BoundKind.LINEAR,
    k: int = 1,
    strategy: Strategy = Strategy.BFS,
    configuration_cap: int = DEFAULT_CONFIGURATION_CAP,
    workers: int = 1,
) -> SpectrumReport:
    """Target set of ``tm``: the sizes whose binary representation it accepts in bound."""
    worker = partial(
        _oracle_entry,
        tm=tm,
        bound_kind=BoundKind(bound_kind),
        k=k,
        strategy=Strategy(strategy),
        cap=configuration_cap,
    )
    entries = map_in_order(worker, sorted(sizes), workers)
    return SpectrumReport(sentence=tm.name, method=Method.SIMULATION, entries=entries)


def replay(tm: TMDocument, verdict: RunVerdict) -> bool:
    """Check that the accepting run of ``verdict`` follows the transition relation step by step."""
    if verdict.run is None:
        return False
    steps = verdict.run
    if steps[0].state != tm.start or any(h != 0 for h in steps[0].heads):
        return False
    for before, after in zip(steps, steps[1:]):
        reads = tuple(before.tapes[i][h] for i, h in enumerate(before.heads))
        matched = False
        for t in tm.successors(before.state, reads):
            tapes = [list(cells) for cells in before.tapes]
            for i, h in enumerate(before.heads):
                tapes[i][h] = t.writes[i]
            heads = [h + m.delta for h, m in zip(before.heads, t.moves)]
            if t.target == after.state and heads == after.heads and tapes == after.tapes:
                matched = True
                break
        if not matched:
            return False
    return steps[-1].state == tm.accept


def render_run(verdict: RunVerdict) -> str:
    return render_table(verdict)


__all__ = [
    "BoundKind",
    "ConfigurationCapExceeded",
    "DEFAULT_CONFIGURATION_CAP",
    "Strategy",
    "accepts_binary",
    "bounds_for",
    "render_run",
    "replay",
    "run_binary",
    "simulate",
    "spectrum_oracle",
]
