from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from spectra.textio.machine import InputOrder, TMDocument, Transition


def binary_of(n: int) -> List[int]:
    """Bits of ``n``, least significant first: ``6 -> [0, 1, 1]``."""
    if n < 1:
        raise ValueError(f"binary_of needs a positive integer, got {n}")
    return [int(bit) for bit in reversed(format(n, "b"))]


def _trim(cells: Sequence[str], blank: str) -> Tuple[str, ...]:
    end = len(cells)
    while end and cells[end - 1] == blank:
        end -= 1
    return tuple(cells[:end])


@dataclass(frozen=True)
class Configuration:
    """State, head positions and tape contents; cells past a tape's end hold blank."""

    state: str
    heads: Tuple[int, ...]
    tapes: Tuple[Tuple[str, ...], ...]

    @classmethod
    def initial(cls, tm: TMDocument, bits: Sequence[int]) -> "Configuration":
        word = [str(b) for b in bits]
        if tm.input_order is InputOrder.MSB_FIRST:
            word.reverse()
        tapes = (_trim(word, tm.blank),) + ((),) * (tm.tapes - 1)
        return cls(tm.start, (0,) * tm.tapes, tapes)

    def symbol(self, tape: int, cell: int, blank: str) -> str:
        content = self.tapes[tape]
        return content[cell] if cell < len(content) else blank

    def reads(self, blank: str) -> Tuple[str, ...]:
        return tuple(self.symbol(i, h, blank) for i, h in enumerate(self.heads))

    def apply(self, transition: Transition, blank: str) -> "Configuration":
        tapes = []
        for i, (head, written) in enumerate(zip(self.heads, transition.writes)):
            cells = list(self.tapes[i])
            if head >= len(cells):
                cells.extend([blank] * (head + 1 - len(cells)))
            cells[head] = written
            tapes.append(_trim(cells, blank))
        heads = tuple(h + m.delta for h, m in zip(self.heads, transition.moves))
        return Configuration(transition.target, heads, tuple(tapes))

    def cells(self, blank: str, width: Optional[int] = None) -> List[List[str]]:
        size = width if width is not None else max([len(t) for t in self.tapes] + [1])
        return [[self.symbol(i, c, blank) for c in range(size)] for i in range(len(self.tapes))]


def successors(
    tm: TMDocument, config: Configuration, space_bound: int
) -> Iterator[Tuple[Optional[Configuration], bool]]:
    """Yield ``(successor, cut)``; ``cut`` marks a move past the last allowed cell.

    A move left of cell 0 blocks that branch and yields nothing.
    """
    for transition in tm.successors(config.state, config.reads(tm.blank)):
        heads = [h + m.delta for h, m in zip(config.heads, transition.moves)]
        if any(h < 0 for h in heads):
            continue
        if any(h >= space_bound for h in heads):
            yield None, True
            continue
        yield config.apply(transition, tm.blank), False


__all__ = ["Configuration", "binary_of", "successors"]
