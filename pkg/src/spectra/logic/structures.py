from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, Mapping, Optional, Tuple

from spectra.errors import SpectraError

from .syntax import RelationSymbol, Vocabulary, VocabularyError

Row = Tuple[int, ...]
Assignment = Dict[str, int]


class StructureError(SpectraError):
    """Raised when a finite structure violates its arity or domain invariants."""


@dataclass(frozen=True)
class FiniteStructure:
    """Domain ``[N] = {0..N-1}`` plus one tuple set per vocabulary relation.

    Relations of the vocabulary that are absent from ``relations`` are empty.
    An arity-0 relation is true iff it contains the empty tuple.
    """

    size: int
    vocabulary: Vocabulary
    relations: Mapping[str, FrozenSet[Row]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.size < 1:
            raise StructureError(f"Structure size must be positive, got {self.size}")
        normalized: Dict[str, FrozenSet[Row]] = {}
        for name, tuples in self.relations.items():
            arity = self.vocabulary.arity(name)
            if arity is None:
                raise VocabularyError(f"Relation '{name}' is not in the structure vocabulary")
            frozen = frozenset(tuple(t) for t in tuples)
            for entry in frozen:
                if len(entry) != arity:
                    raise StructureError(
                        f"Tuple {entry} has length {len(entry)} but '{name}' has arity {arity}"
                    )
                for element in entry:
                    if not 0 <= element < self.size:
                        raise StructureError(
                            f"Element {element} of {name}{entry} is outside [0, {self.size})"
                        )
            normalized[name] = frozen
        for symbol in self.vocabulary:
            normalized.setdefault(symbol.name, frozenset())
        object.__setattr__(self, "relations", normalized)

    def __hash__(self) -> int:
        return hash((self.size, self.vocabulary, tuple(sorted(
            (name, tuple(sorted(ts))) for name, ts in self.relations.items()
        ))))

    def holds(self, relation: str, args: Row) -> bool:
        return args in self.relations[relation]

    def facts(self) -> Iterator[Tuple[str, Row]]:
        """Yield ``(relation, tuple)`` in vocabulary order, tuples sorted."""
        for symbol in self.vocabulary:
            for entry in sorted(self.relations[symbol.name]):
                yield symbol.name, entry

    def fact_count(self) -> int:
        return sum(len(ts) for ts in self.relations.values())

    def expand(
        self,
        symbols: Iterable[RelationSymbol],
        relations: Optional[Mapping[str, Iterable[Row]]] = None,
    ) -> "FiniteStructure":
        """Return a structure over a larger vocabulary that agrees with this one on the old part."""
        vocabulary = self.vocabulary.extend(symbols)
        merged: Dict[str, Iterable[Row]] = dict(self.relations)
        for name, tuples in (relations or {}).items():
            if name in self.vocabulary:
                raise StructureError(f"Expansion cannot reinterpret base relation '{name}'")
            merged[name] = tuples
        return FiniteStructure(self.size, vocabulary, merged)

    def restrict(self, names: Iterable[str]) -> "FiniteStructure":
        vocabulary = self.vocabulary.restrict(names)
        return FiniteStructure(
            self.size, vocabulary, {s.name: self.relations[s.name] for s in vocabulary}
        )


__all__ = ["Assignment", "FiniteStructure", "StructureError"]
