from __future__ import annotations

from typing import Dict, FrozenSet, Mapping, Optional

from spectra.errors import SpectraError

from .structures import FiniteStructure, Row
from .syntax import (
    And,
    Atom,
    Eq,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Vocabulary,
    VocabularyError,
)


class UnboundVariableError(SpectraError):
    """Raised when a free variable of the evaluated formula has no value."""


def check_vocabulary(f: Formula, vocabulary: Vocabulary) -> None:
    for symbol in sorted(f.relation_symbols, key=lambda s: (s.name, s.arity)):
        declared = vocabulary.arity(symbol.name)
        if declared is None:
            raise VocabularyError(f"Relation '{symbol.name}' is not declared")
        if declared != symbol.arity:
            raise VocabularyError(
                f"Relation '{symbol.name}' used with arity {symbol.arity}, declared {declared}"
            )


def evaluate(
    f: Formula, structure: FiniteStructure, assignment: Optional[Mapping[str, int]] = None
) -> bool:
    """Tarskian truth of ``f`` in ``structure`` under ``assignment``."""
    env: Dict[str, int] = dict(assignment or {})
    missing = sorted(f.free_variables - env.keys())
    if missing:
        raise UnboundVariableError(f"Unbound free variable(s): {', '.join(missing)}")
    for name, value in env.items():
        if not 0 <= value < structure.size:
            raise UnboundVariableError(
                f"Variable '{name}' assigned {value}, outside [0, {structure.size})"
            )
    check_vocabulary(f, structure.vocabulary)
    return _eval(f, structure.relations, structure.size, env)


def _eval(f: Formula, rel: Mapping[str, FrozenSet[Row]], n: int, env: Dict[str, int]) -> bool:
    if isinstance(f, Atom):
        return tuple(env[v] for v in f.args) in rel[f.relation]
    if isinstance(f, Eq):
        return env[f.left] == env[f.right]
    if isinstance(f, Not):
        return not _eval(f.body, rel, n, env)
    if isinstance(f, And):
        return all(_eval(op, rel, n, env) for op in f.operands)
    if isinstance(f, Or):
        return any(_eval(op, rel, n, env) for op in f.operands)
    if isinstance(f, Implies):
        return (not _eval(f.left, rel, n, env)) or _eval(f.right, rel, n, env)
    if isinstance(f, Iff):
        return _eval(f.left, rel, n, env) == _eval(f.right, rel, n, env)
    if isinstance(f, (Forall, Exists)):
        want = isinstance(f, Exists)
        saved = env.get(f.var)
        try:
            for value in range(n):
                env[f.var] = value
                if _eval(f.body, rel, n, env) == want:
                    return want
            return not want
        finally:
            if saved is None:
                env.pop(f.var, None)
            else:
                env[f.var] = saved
    raise TypeError(f"Unknown formula node {type(f).__name__}")


__all__ = ["UnboundVariableError", "check_vocabulary", "evaluate"]
