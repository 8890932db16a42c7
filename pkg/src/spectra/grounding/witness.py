from __future__ import annotations

from typing import Dict, Mapping, Optional, Set, Tuple

from spectra.logic.structures import FiniteStructure
from spectra.logic.syntax import Vocabulary

from .atoms import GroundFormula


def decode_witness(
    g: GroundFormula,
    witness: Mapping[int, bool],
    vocabulary: Vocabulary,
    fixed: Optional[FiniteStructure] = None,
) -> FiniteStructure:
    """Turn a satisfying assignment into a structure; definitional atoms are dropped."""
    if fixed is not None:
        vocabulary = vocabulary.extend(fixed.vocabulary)
    relations: Dict[str, Set[Tuple[int, ...]]] = {}
    if fixed is not None:
        for name, tuples in fixed.relations.items():
            relations[name] = set(tuples)
    for index, atom in enumerate(g.atoms, start=1):
        if atom.is_auxiliary or not witness.get(index, False):
            continue
        relations.setdefault(atom.relation, set()).add(atom.args)
    return FiniteStructure(g.domain_size, vocabulary, relations)


__all__ = ["decode_witness"]
