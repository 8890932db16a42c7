from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import pycosat

from .atoms import GroundFormula

Clause = Tuple[int, ...]


@dataclass
class CNF:
    num_vars: int
    clauses: List[Clause] = field(default_factory=list)
    atom_names: Dict[int, str] = field(default_factory=dict)

    @property
    def selector_count(self) -> int:
        return self.num_vars - len(self.atom_names)


def to_cnf(g: GroundFormula) -> CNF:
    """Equisatisfiable CNF with one selector variable per disjunct of a multi-disjunct block.

    Atom ``i`` of ``g`` keeps variable ``i``; selectors follow the atoms.
    """
    next_var = len(g.atoms)
    clauses: List[Clause] = []
    for block in g.blocks:
        if len(block) == 1:
            clauses.extend((literal,) for literal in block[0])
            continue
        selectors = list(range(next_var + 1, next_var + 1 + len(block)))
        next_var += len(block)
        clauses.append(tuple(selectors))
        for selector, term in zip(selectors, block):
            clauses.extend((-selector, literal) for literal in term)
    names = {i + 1: str(atom) for i, atom in enumerate(g.atoms)}
    return CNF(num_vars=next_var, clauses=clauses, atom_names=names)


def solve_cnf(cnf: CNF) -> Optional[Dict[int, bool]]:
    """Replay ``cnf`` through pycosat; returns the atom part of a model or None."""
    if any(len(clause) == 0 for clause in cnf.clauses):
        return None
    if not cnf.clauses:
        return {var: False for var in cnf.atom_names}
    solution = pycosat.solve([list(clause) for clause in cnf.clauses], vars=cnf.num_vars)
    if solution == "UNSAT":
        return None
    values = {abs(lit): lit > 0 for lit in solution}
    return {var: values.get(var, False) for var in cnf.atom_names}


__all__ = ["CNF", "solve_cnf", "to_cnf"]
