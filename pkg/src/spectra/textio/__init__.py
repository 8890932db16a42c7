"""Readers and writers for sentence, structure, machine and DIMACS files."""

from .dimacs import parse_dimacs_header, print_dimacs
from .errors import DocumentValidationError, SentenceSyntaxError, TextFormatError
from .machine import (
    InputOrder,
    MachineValidationError,
    Move,
    TMDocument,
    Transition,
    load_tm,
    parse_tm,
    print_tm,
)
from .sentence import (
    FORMAT_VERSION,
    SentenceDocument,
    document_for,
    format_formula,
    parse_formula,
    parse_sentence,
    print_sentence,
)
from .structure import parse_structure, print_structure

__all__ = [
    "DocumentValidationError",
    "FORMAT_VERSION",
    "InputOrder",
    "MachineValidationError",
    "Move",
    "SentenceDocument",
    "SentenceSyntaxError",
    "TMDocument",
    "TextFormatError",
    "Transition",
    "document_for",
    "format_formula",
    "load_tm",
    "parse_dimacs_header",
    "parse_formula",
    "parse_sentence",
    "parse_structure",
    "parse_tm",
    "print_dimacs",
    "print_sentence",
    "print_structure",
    "print_tm",
]
