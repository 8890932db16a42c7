from __future__ import annotations

from typing import TYPE_CHECKING, List, Tuple

if TYPE_CHECKING:
    from spectra.grounding.cnf import CNF


def print_dimacs(cnf: "CNF") -> str:
    """DIMACS text: header, ``c <var> = <atom>`` comments, then clauses."""
    lines: List[str] = [f"p cnf {cnf.num_vars} {len(cnf.clauses)}"]
    lines.extend(f"c {var} = {name}" for var, name in sorted(cnf.atom_names.items()))
    lines.extend(" ".join(str(lit) for lit in clause + (0,)) for clause in cnf.clauses)
    return "\n".join(lines) + "\n"


def parse_dimacs_header(text: str) -> Tuple[int, int]:
    for line in text.splitlines():
        if line.startswith("p cnf"):
            _, _, num_vars, num_clauses = line.split()
            return int(num_vars), int(num_clauses)
    raise ValueError("No 'p cnf' header found")


__all__ = ["parse_dimacs_header", "print_dimacs"]
