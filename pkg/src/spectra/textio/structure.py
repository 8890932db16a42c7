"""Structure files.

::

    format 1
    size 3
    rel E 2
    E: 0 1
    E: 1 2
    A:
"""

from __future__ import annotations

import re
from typing import Dict, List, Optional, Set, Tuple

from spectra.logic.structures import FiniteStructure
from spectra.logic.syntax import IDENTIFIER, RelationSymbol, Vocabulary

from .errors import DocumentValidationError
from .sentence import FORMAT_VERSION

_FACT = re.compile(r"^(?P<name>[A-Za-z_][A-Za-z0-9_]*)\s*:(?P<rest>.*)$")


def parse_structure(
    text: str, vocabulary: Optional[Vocabulary] = None, source: str = "<structure>"
) -> FiniteStructure:
    """Parse a structure file, optionally checking relations against ``vocabulary``."""
    size: Optional[int] = None
    arities: Dict[str, int] = {}
    order: List[str] = []
    facts: Dict[str, Set[Tuple[int, ...]]] = {}
    if vocabulary is not None:
        for symbol in vocabulary:
            arities[symbol.name] = symbol.arity
            order.append(symbol.name)

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        if words[0] == "format":
            if len(words) != 2 or words[1] != str(FORMAT_VERSION):
                raise DocumentValidationError(f"Unsupported format line '{line}'", source, number)
            continue
        if words[0] == "size":
            if size is not None:
                raise DocumentValidationError("size declared twice", source, number)
            if len(words) != 2 or not words[1].isdigit() or int(words[1]) < 1:
                raise DocumentValidationError("size must be a positive integer", source, number)
            size = int(words[1])
            continue
        if words[0] == "rel":
            if len(words) != 3 or not IDENTIFIER.match(words[1]) or not words[2].isdigit():
                raise DocumentValidationError("Expected 'rel NAME ARITY'", source, number)
            _declare(words[1], int(words[2]), arities, order, vocabulary, source, number)
            continue
        match = _FACT.match(line)
        if match is None:
            raise DocumentValidationError(f"Unrecognised line '{line}'", source, number)
        if size is None:
            raise DocumentValidationError("Facts must follow the size line", source, number)
        name = match.group("name")
        elements = match.group("rest").split()
        if not all(e.isdigit() for e in elements):
            raise DocumentValidationError(f"Non-numeric element in '{line}'", source, number)
        entry = tuple(int(e) for e in elements)
        _declare(name, len(entry), arities, order, vocabulary, source, number, implicit=True)
        for element in entry:
            if element >= size:
                raise DocumentValidationError(
                    f"Element {element} is out of range for size {size}", source, number
                )
        facts.setdefault(name, set()).add(entry)

    if size is None:
        raise DocumentValidationError("Missing size line", source)
    declared = vocabulary or Vocabulary(tuple(RelationSymbol(n, arities[n]) for n in order))
    return FiniteStructure(size, declared, facts)


def _declare(
    name: str,
    arity: int,
    arities: Dict[str, int],
    order: List[str],
    vocabulary: Optional[Vocabulary],
    source: str,
    line: int,
    implicit: bool = False,
) -> None:
    known = arities.get(name)
    if known is None:
        if vocabulary is not None:
            raise DocumentValidationError(f"Relation '{name}' is not in the vocabulary", source, line)
        arities[name] = arity
        order.append(name)
    elif known != arity:
        what = "Fact" if implicit else "Declaration"
        raise DocumentValidationError(
            f"{what} for '{name}' has arity {arity}, expected {known}", source, line
        )


def print_structure(structure: FiniteStructure) -> str:
    lines = [f"format {FORMAT_VERSION}", f"size {structure.size}"]
    lines.extend(f"rel {s.name} {s.arity}" for s in structure.vocabulary)
    for name, entry in structure.facts():
        lines.append(f"{name}: {' '.join(str(e) for e in entry)}".rstrip())
    return "\n".join(lines) + "\n"


__all__ = ["parse_structure", "print_structure"]
