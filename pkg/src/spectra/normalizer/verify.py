from __future__ import annotations

from typing import List, Optional

from spectra.logic.syntax import Atom
from spectra.textio.sentence import SentenceDocument

from .model import EXISTS, FORALL, Clause, ClauseShape, NormalizedSentence, dnf_terms


def _prefix_ok(clause: Clause) -> bool:
    kinds = [kind for kind, _ in clause.quantifiers]
    if EXISTS in kinds[:-1] or any(kind not in (FORALL, EXISTS) for kind in kinds):
        return False
    has_witness = bool(kinds) and kinds[-1] == EXISTS
    return has_witness == (clause.shape is ClauseShape.UNIVERSAL_EXISTENTIAL)


def verify_shape(ns: NormalizedSentence, k: Optional[int] = None) -> List[str]:
    """List every way ``ns`` breaks the normal-form invariants; empty means well-formed."""
    budget = k if k is not None else (ns.k or None)
    diagnostics: List[str] = []
    for index, clause in enumerate(ns.clauses):
        label = f"clause {index}" + (f" ({clause.origin})" if clause.origin else "")
        if not _prefix_ok(clause):
            diagnostics.append(f"{label}: prefix not ∀*∃?")
        if dnf_terms(clause.matrix) is None:
            diagnostics.append(f"{label}: matrix not DNF")
        unbound = clause.matrix.free_variables - set(clause.prefix)
        if unbound:
            diagnostics.append(f"{label}: unbound variable(s) {', '.join(sorted(unbound))}")
        if budget is not None and len(clause.variables) > budget:
            diagnostics.append(
                f"{label}: uses {len(clause.variables)} variables, budget is {budget}"
            )

    units = [
        clause.matrix.relation
        for clause in ns.clauses
        if not clause.quantifiers
        and isinstance(clause.matrix, Atom)
        and not clause.matrix.args
        and clause.matrix.relation in ns.auxiliary_names
    ]
    if len(units) != 1:
        diagnostics.append(f"expected exactly one positive arity-0 unit clause, found {len(units)}")
    elif ns.root is not None and units[0] != ns.root:
        diagnostics.append(f"unit clause names {units[0]}, root is {ns.root}")
    return diagnostics


def normalized_to_sentence(ns: NormalizedSentence) -> SentenceDocument:
    """Sentence document declaring the aux relations, clauses as one conjunction."""
    return SentenceDocument(ns.vocabulary, ns.to_formula())


__all__ = ["normalized_to_sentence", "verify_shape"]
