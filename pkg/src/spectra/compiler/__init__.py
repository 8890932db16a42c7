"""Compile nondeterministic Turing machines into first-order sentences with bounded variables."""

from .axioms import (
    DEFAULT_WINDOW_CAP,
    arithmetic_axioms_flat,
    arithmetic_axioms_paired,
    boundary_axioms,
    frame_and_uniqueness_axioms,
    order_axioms,
    pairing_axioms,
    transition_axioms,
)
from .compile import GROUPS, axiom_groups, compile_machine, compiled_vocabulary
from .encoding import canonical_structure, encode_run, order_structure
from .errors import CompilationError, WindowCapExceeded
from .grid import (
    Construction,
    Direction,
    FlatGrid,
    Grid,
    LexGrid,
    PairedGrid,
    grid_for,
    shift_flat,
    shift_lex,
    shift_paired,
)
from .verify import verify_compilation

__all__ = [
    "CompilationError",
    "Construction",
    "DEFAULT_WINDOW_CAP",
    "Direction",
    "FlatGrid",
    "GROUPS",
    "Grid",
    "LexGrid",
    "PairedGrid",
    "WindowCapExceeded",
    "arithmetic_axioms_flat",
    "arithmetic_axioms_paired",
    "axiom_groups",
    "boundary_axioms",
    "canonical_structure",
    "compile_machine",
    "compiled_vocabulary",
    "encode_run",
    "frame_and_uniqueness_axioms",
    "grid_for",
    "order_axioms",
    "order_structure",
    "pairing_axioms",
    "shift_flat",
    "shift_lex",
    "shift_paired",
    "transition_axioms",
    "verify_compilation",
]
