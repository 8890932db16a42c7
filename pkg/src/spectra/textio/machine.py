"""Turing-machine documents (YAML).

Example::

    format: 1
    name: parity
    tapes: 1
    states: [scan, accept, reject]
    start: scan
    accept: accept
    blank: B
    symbols: ["0", "1", B]
    transitions:
      - "scan 0 -> accept 0 S"
      - "scan 1 -> reject 1 S"

A transition reads ``STATE READ -> STATE' WRITE MOVE``; on multi-tape machines
``READ``, ``WRITE`` and ``MOVE`` are comma-separated per tape, tape 1 first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from pathlib import Path
from types import SimpleNamespace
from typing import Dict, List, Optional, Sequence, Tuple, Union

import yaml

from spectra.config.yaml_lines import LineLoader, get_line, yaml_error_line

from .errors import DocumentValidationError

FORMAT_VERSION = 1
NAME_PATTERN = re.compile(r"^[A-Za-z0-9_]+$")
_TRANSITION = re.compile(r"^\s*(\S+)\s+(\S+)\s*->\s*(\S+)\s+(\S+)\s+(\S+)\s*$")


class MachineValidationError(DocumentValidationError):
    """Raised when a machine document is malformed or violates a machine invariant."""


class Move(str, Enum):
    LEFT = "L"
    RIGHT = "R"
    STAY = "S"

    @property
    def delta(self) -> int:
        return {Move.LEFT: -1, Move.RIGHT: 1, Move.STAY: 0}[self]


class InputOrder(str, Enum):
    LSB_FIRST = "lsb-first"
    MSB_FIRST = "msb-first"


@dataclass(frozen=True)
class Transition:
    state: str
    reads: Tuple[str, ...]
    target: str
    writes: Tuple[str, ...]
    moves: Tuple[Move, ...]

    def __str__(self) -> str:
        return (
            f"{self.state} {','.join(self.reads)} -> {self.target} "
            f"{','.join(self.writes)} {','.join(m.value for m in self.moves)}"
        )

    @property
    def is_idle(self) -> bool:
        return (
            self.state == self.target
            and self.reads == self.writes
            and all(m is Move.STAY for m in self.moves)
        )


@dataclass(frozen=True)
class TMDocument:
    name: str
    tapes: int
    states: Tuple[str, ...]
    start: str
    accept: str
    blank: str
    symbols: Tuple[str, ...]
    transitions: Tuple[Transition, ...]
    input_order: InputOrder = InputOrder.LSB_FIRST

    def __post_init__(self) -> None:
        validate_machine(self)

    @cached_property
    def table(self) -> Dict[Tuple[str, Tuple[str, ...]], Tuple[Transition, ...]]:
        grouped: Dict[Tuple[str, Tuple[str, ...]], List[Transition]] = {}
        for transition in self.transitions:
            grouped.setdefault((transition.state, transition.reads), []).append(transition)
        return {key: tuple(value) for key, value in grouped.items()}

    def successors(self, state: str, reads: Tuple[str, ...]) -> Tuple[Transition, ...]:
        return self.table.get((state, reads), ())

    def transitions_from(self, state: str) -> Tuple[Transition, ...]:
        return tuple(t for t in self.transitions if t.state == state)


def validate_machine(
    tm: TMDocument,
    source: Union[Path, str] = "<machine>",
    lines: Optional[Sequence[Optional[int]]] = None,
) -> None:
    def fail(message: str, line: Optional[int] = None) -> MachineValidationError:
        return MachineValidationError(message, source, line)

    if tm.tapes < 1:
        raise fail("tapes must be at least 1")
    for kind, names in (("state", tm.states), ("symbol", tm.symbols)):
        seen = set()
        for name in names:
            if not NAME_PATTERN.match(name):
                raise fail(f"Invalid {kind} name '{name}' (letters, digits and '_' only)")
            if name in seen:
                raise fail(f"Duplicate {kind} '{name}'")
            seen.add(name)
    for role, state in (("start", tm.start), ("accept", tm.accept)):
        if state not in tm.states:
            raise fail(f"{role} state '{state}' is not declared")
    for required in ("0", "1", tm.blank):
        if required not in tm.symbols:
            raise fail(f"Symbol '{required}' must be declared")
    if tm.blank in ("0", "1"):
        raise fail("blank must differ from the bits 0 and 1")

    states, symbols = set(tm.states), set(tm.symbols)
    for index, transition in enumerate(tm.transitions):
        line = lines[index] if lines is not None and index < len(lines) else None
        for field_name, values in (
            ("reads", transition.reads),
            ("writes", transition.writes),
            ("moves", transition.moves),
        ):
            if len(values) != tm.tapes:
                raise fail(
                    f"Transition '{transition}' has {len(values)} {field_name}, expected {tm.tapes}",
                    line,
                )
        for state in (transition.state, transition.target):
            if state not in states:
                raise fail(f"Transition '{transition}' uses undeclared state '{state}'", line)
        for symbol in transition.reads + transition.writes:
            if symbol not in symbols:
                raise fail(f"Transition '{transition}' uses undeclared symbol '{symbol}'", line)
        if transition.state == tm.accept and not transition.is_idle:
            raise fail(
                f"Accept state '{tm.accept}' must be absorbing; '{transition}' leaves or moves",
                line,
            )


def parse_tm(text: str, source: Union[Path, str] = "<machine>") -> TMDocument:
    try:
        raw = yaml.load(text, Loader=LineLoader) or {}
    except yaml.YAMLError as exc:
        raise MachineValidationError(f"Invalid YAML: {exc}", source, yaml_error_line(exc))
    if not isinstance(raw, dict):
        raise MachineValidationError("Machine document must define a mapping", source)

    def required(key: str) -> object:
        if key not in raw:
            raise MachineValidationError(f"Missing required key '{key}'", source, get_line(raw))
        return raw[key]

    version = raw.get("format", FORMAT_VERSION)
    if str(version) != str(FORMAT_VERSION):
        raise MachineValidationError(f"Unsupported format {version}", source, get_line(raw))
    known = {
        "format", "name", "tapes", "states", "start", "accept", "blank", "symbols",
        "input_order", "transitions",
    }
    unknown = sorted(str(k) for k in raw if k not in known)
    if unknown:
        raise MachineValidationError(
            f"Unknown key(s): {', '.join(unknown)}", source, get_line(raw)
        )

    tapes = required("tapes")
    if not isinstance(tapes, int) or isinstance(tapes, bool):
        raise MachineValidationError("tapes must be an integer", source, get_line(raw))
    states = _name_list(required("states"), "states", source)
    symbols = _name_list(required("symbols"), "symbols", source)
    try:
        input_order = InputOrder(str(raw.get("input_order", InputOrder.LSB_FIRST.value)))
    except ValueError:
        raise MachineValidationError(
            f"input_order must be one of {[o.value for o in InputOrder]}",
            source,
            get_line(raw.get("input_order")),
        )

    entries = required("transitions") or []
    if not isinstance(entries, list):
        raise MachineValidationError("transitions must be a list", source, get_line(raw))
    transitions: List[Transition] = []
    lines: List[Optional[int]] = []
    for entry in entries:
        line = get_line(entry) or get_line(entries)
        transitions.append(_parse_transition(entry, source, line))
        lines.append(line)

    kwargs = dict(
        name=str(raw.get("name") or Path(str(source)).stem),
        tapes=tapes,
        states=states,
        start=str(required("start")),
        accept=str(required("accept")),
        blank=str(required("blank")),
        symbols=symbols,
        transitions=tuple(transitions),
        input_order=input_order,
    )
    # Validated here with line numbers; the constructor re-checks without them.
    validate_machine(SimpleNamespace(**kwargs), source, lines)  # type: ignore[arg-type]
    return TMDocument(**kwargs)  # type: ignore[arg-type]


def _name_list(value: object, key: str, source: Union[Path, str]) -> Tuple[str, ...]:
    if not isinstance(value, list) or not value:
        raise MachineValidationError(f"{key} must be a non-empty list", source, get_line(value))
    return tuple(str(item) for item in value)


def _parse_transition(entry: object, source: Union[Path, str], line: Optional[int]) -> Transition:
    match = _TRANSITION.match(str(entry)) if isinstance(entry, str) else None
    if match is None:
        raise MachineValidationError(
            f"Transition must read 'STATE READ -> STATE WRITE MOVE', got {entry!r}", source, line
        )
    state, reads, target, writes, moves = match.groups()
    try:
        parsed_moves = tuple(Move(m) for m in moves.split(","))
    except ValueError:
        raise MachineValidationError(f"Moves must be L, R or S, got '{moves}'", source, line)
    return Transition(
        state=state,
        reads=tuple(reads.split(",")),
        target=target,
        writes=tuple(writes.split(",")),
        moves=parsed_moves,
    )


def load_tm(path: Union[Path, str]) -> TMDocument:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise MachineValidationError(f"Cannot read machine file: {exc.strerror}", path)
    return parse_tm(text, source=path)


def print_tm(tm: TMDocument) -> str:
    document = {
        "format": FORMAT_VERSION,
        "name": tm.name,
        "tapes": tm.tapes,
        "states": list(tm.states),
        "start": tm.start,
        "accept": tm.accept,
        "blank": tm.blank,
        "symbols": list(tm.symbols),
        "input_order": tm.input_order.value,
        "transitions": [str(t) for t in tm.transitions],
    }
    return yaml.safe_dump(document, sort_keys=False, default_flow_style=None)


__all__ = [
    "InputOrder",
    "MachineValidationError",
    "Move",
    "TMDocument",
    "Transition",
    "load_tm",
    "parse_tm",
    "print_tm",
    "validate_machine",
]
