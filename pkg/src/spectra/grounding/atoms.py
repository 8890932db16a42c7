from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

# A literal is a non-zero int: +i / -i refer to atom i (1-based) of the atom table.
Literal = int
Term = Tuple[Literal, ...]
Block = Tuple[Term, ...]

AUX_PREFIX = "@"


@dataclass(frozen=True, order=True)
class GroundAtom:
    relation: str
    args: Tuple[int, ...] = ()

    def __str__(self) -> str:
        if not self.args:
            return self.relation
        return f"{self.relation}({','.join(str(a) for a in self.args)})"

    @property
    def is_auxiliary(self) -> bool:
        """Definitional atoms introduced by grounding, not relation facts."""
        return self.relation.startswith(AUX_PREFIX)


@dataclass
class GroundFormula:
    """Conjunction of DNF blocks over an indexed, canonically ordered atom table."""

    domain_size: int
    atoms: Tuple[GroundAtom, ...]
    blocks: List[Block] = field(default_factory=list)
    size: int = 0

    @property
    def literal_count(self) -> int:
        return sum(len(term) for block in self.blocks for term in block)

    def atom(self, literal: Literal) -> GroundAtom:
        return self.atoms[abs(literal) - 1]

    def index_of(self, atom: GroundAtom) -> Optional[int]:
        lookup = {a: i + 1 for i, a in enumerate(self.atoms)}
        return lookup.get(atom)

    def format_literal(self, literal: Literal) -> str:
        text = str(self.atom(literal))
        return text if literal > 0 else f"!{text}"

    def holds_under(self, assignment: Mapping[int, bool]) -> bool:
        """Direct re-evaluation; unassigned atoms count as false."""
        return all(
            any(all(assignment.get(abs(l), False) == (l > 0) for l in term) for term in block)
            for block in self.blocks
        )


class AtomTable:
    """Interns ground atoms while blocks are built, then renumbers canonically."""

    def __init__(self) -> None:
        self._index: Dict[GroundAtom, int] = {}
        self._atoms: List[GroundAtom] = []
        self._aux = 0

    def __len__(self) -> int:
        return len(self._atoms)

    def intern(self, atom: GroundAtom) -> int:
        index = self._index.get(atom)
        if index is None:
            self._atoms.append(atom)
            index = len(self._atoms)
            self._index[atom] = index
        return index

    def fresh(self, kind: str = "def") -> int:
        self._aux += 1
        return self.intern(GroundAtom(f"{AUX_PREFIX}{kind}{self._aux}"))

    def finish(self, domain_size: int, blocks: Iterable[Block]) -> GroundFormula:
        order = sorted(range(len(self._atoms)), key=lambda i: self._atoms[i])
        renumber = {old + 1: new + 1 for new, old in enumerate(order)}
        atoms = tuple(self._atoms[i] for i in order)
        remapped: List[Block] = []
        size = 0
        for block in blocks:
            new_block = tuple(
                sorted(
                    tuple(sorted((renumber[abs(l)] if l > 0 else -renumber[abs(l)]) for l in term))
                    for term in block
                )
            )
            size += sum(len(term) for term in new_block)
            remapped.append(new_block)
        return GroundFormula(domain_size=domain_size, atoms=atoms, blocks=remapped, size=size)


def normalize_block(terms: Iterable[Sequence[Literal]]) -> Optional[Block]:
    """Simplify one DNF block.

    Inconsistent terms are dropped and duplicates merged. Returns ``None`` when a
    term is empty (the block is trivially true); an empty tuple means false.
    """
    seen = set()
    kept: List[Term] = []
    for term in terms:
        literals = frozenset(term)
        if not literals:
            return None
        if any(-l in literals for l in literals):
            continue
        if literals in seen:
            continue
        seen.add(literals)
        kept.append(tuple(sorted(literals)))
    return tuple(kept)


__all__ = [
    "AUX_PREFIX",
    "AtomTable",
    "Block",
    "GroundAtom",
    "GroundFormula",
    "Literal",
    "Term",
    "normalize_block",
]
