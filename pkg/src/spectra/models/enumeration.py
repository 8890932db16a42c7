from __future__ import annotations

import itertools
import logging
from typing import Dict, Iterator, List, Optional, Set, Tuple

from spectra.errors import CapExceededError
from spectra.logic.semantics import evaluate
from spectra.logic.structures import FiniteStructure, Row
from spectra.logic.syntax import Formula, Vocabulary

logger = logging.getLogger(__name__)

DEFAULT_ENUMERATION_CAP = 24


class EnumerationCapExceeded(CapExceededError):
    """Raised when a structure enumeration would exceed the fact-position cap."""


def fact_positions(vocabulary: Vocabulary, n: int) -> List[Tuple[str, Row]]:
    """Every ``(relation, tuple)`` slot over ``[n]``, vocabulary order then lexicographic."""
    return [
        (symbol.name, entry)
        for symbol in vocabulary
        for entry in itertools.product(range(n), repeat=symbol.arity)
    ]


def _check_cap(count: int, n: int, cap: int) -> None:
    if count > cap:
        raise EnumerationCapExceeded(
            f"{count} fact positions at N={n} exceed the enumeration cap of {cap}"
        )


def enumerate_structures(
    vocabulary: Vocabulary, n: int, cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[FiniteStructure]:
    """Yield all ``2^positions`` structures of size ``n``, ordered by fact bitmask.

    Bit ``i`` of the mask is fact position ``i`` of :func:`fact_positions`.
    """
    if n < 1:
        raise ValueError("Domain size must be positive")
    positions = fact_positions(vocabulary, n)
    _check_cap(len(positions), n, cap)
    for mask in range(1 << len(positions)):
        relations: Dict[str, Set[Row]] = {}
        for index, (name, entry) in enumerate(positions):
            if mask >> index & 1:
                relations.setdefault(name, set()).add(entry)
        yield FiniteStructure(n, vocabulary, relations)


def expansions(
    structure: FiniteStructure, vocabulary: Vocabulary, cap: int = DEFAULT_ENUMERATION_CAP
) -> Iterator[FiniteStructure]:
    """Every expansion of ``structure`` by interpretations of the extra ``vocabulary``."""
    extra = Vocabulary(tuple(s for s in vocabulary if s.name not in structure.vocabulary))
    positions = fact_positions(extra, structure.size)
    _check_cap(len(positions), structure.size, cap)
    for mask in range(1 << len(positions)):
        relations: Dict[str, Set[Row]] = {s.name: set() for s in extra}
        for index, (name, entry) in enumerate(positions):
            if mask >> index & 1:
                relations[name].add(entry)
        yield structure.expand(extra, relations)


def sentence_vocabulary(f: Formula, vocabulary: Optional[Vocabulary] = None) -> Vocabulary:
    used = sorted(f.relation_symbols, key=lambda s: s.name)
    return (vocabulary or Vocabulary()).extend(used)


def count_models(
    f: Formula,
    n: int,
    vocabulary: Optional[Vocabulary] = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> int:
    """Number of size-``n`` structures (not up to isomorphism) satisfying ``f``."""
    vocab = sentence_vocabulary(f, vocabulary)
    return sum(1 for s in enumerate_structures(vocab, n, cap) if evaluate(f, s))


def find_model(
    f: Formula,
    n: int,
    vocabulary: Optional[Vocabulary] = None,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> Optional[FiniteStructure]:
    vocab = sentence_vocabulary(f, vocabulary)
    for structure in enumerate_structures(vocab, n, cap):
        if evaluate(f, structure):
            return structure
    return None


__all__ = [
    "DEFAULT_ENUMERATION_CAP",
    "EnumerationCapExceeded",
    "count_models",
    "enumerate_structures",
    "expansions",
    "fact_positions",
    "find_model",
    "sentence_vocabulary",
]
