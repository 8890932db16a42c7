from __future__ import annotations

import logging
import time
from functools import partial
from typing import Optional, Union

from spectra.grounding.ground import ground
from spectra.grounding.solver import satisfiable
from spectra.logic.semantics import evaluate
from spectra.logic.structures import FiniteStructure
from spectra.logic.syntax import Formula, Vocabulary
from spectra.normalizer.model import NormalizedSentence
from spectra.normalizer.normalize import normalize
from spectra.reports.schemas import Method, SpectrumEntry, SpectrumReport
from spectra.utils.parallel import map_in_order

from .enumeration import DEFAULT_ENUMERATION_CAP, expansions, find_model

logger = logging.getLogger(__name__)

METHOD_ALIASES = {"enum": Method.ENUMERATION, "ground": Method.GROUNDING}


def resolve_method(method: Union[Method, str]) -> Method:
    if isinstance(method, Method):
        return method
    resolved = METHOD_ALIASES.get(method) or Method(method)
    if resolved is Method.SIMULATION:
        raise ValueError("Simulation is not a model-finding method")
    return resolved


def has_model_of_size(
    f: Formula,
    n: int,
    method: Union[Method, str] = Method.ENUMERATION,
    vocabulary: Optional[Vocabulary] = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> bool:
    """Does ``f`` have a model with exactly ``n`` elements?

    Enumeration walks every structure under the cap; grounding normalizes
    the sentence and decides the ground conjunction-of-DNF formula.
    """
    if f.free_variables:
        raise ValueError(f"Expected a sentence, free variable(s) {sorted(f.free_variables)}")
    if n < 1:
        raise ValueError("Domain size must be positive")
    if resolve_method(method) is Method.ENUMERATION:
        return find_model(f, n, vocabulary, cap) is not None
    return bool(satisfiable(ground(normalize(f), n)))


def _spectrum_entry(
    n: int, f: Formula, method: Method, vocabulary: Optional[Vocabulary], cap: int
) -> SpectrumEntry:
    started = time.perf_counter()
    member = has_model_of_size(f, n, method, vocabulary, cap)
    return SpectrumEntry(n=n, member=member, seconds=time.perf_counter() - started)


def spectrum_up_to(
    f: Formula,
    n_max: int,
    method: Union[Method, str] = Method.ENUMERATION,
    name: str = "sentence",
    vocabulary: Optional[Vocabulary] = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
    workers: int = 1,
    n_min: int = 1,
) -> SpectrumReport:
    """Membership of every ``N`` in ``[n_min, n_max]``, one verdict each, ordered by ``N``."""
    if n_max < n_min or n_min < 1:
        raise ValueError(f"Empty spectrum range {n_min}..{n_max}")
    resolved = resolve_method(method)
    worker = partial(_spectrum_entry, f=f, method=resolved, vocabulary=vocabulary, cap=cap)
    entries = map_in_order(worker, range(n_min, n_max + 1), workers)
    report = SpectrumReport(sentence=name, method=resolved, entries=entries)
    logger.info("Spectrum of %s up to %d: %s", name, n_max, report.members or "empty")
    return report


def has_expansion(
    ns: NormalizedSentence,
    structure: FiniteStructure,
    method: Union[Method, str] = Method.ENUMERATION,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> bool:
    """Can ``structure`` be expanded by aux relations so that every clause of ``ns`` holds?"""
    if resolve_method(method) is Method.ENUMERATION:
        clauses = ns.to_formula()
        return any(
            evaluate(clauses, expanded)
            for expanded in expansions(structure, ns.vocabulary, cap)
        )
    base = structure.restrict(ns.base.names)
    return bool(satisfiable(ground(ns, structure.size, fixed=base)))


__all__ = [
    "METHOD_ALIASES",
    "has_expansion",
    "has_model_of_size",
    "resolve_method",
    "spectrum_up_to",
]
