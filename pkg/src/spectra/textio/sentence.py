"""Sentence documents: a ``rel`` declaration block followed by one formula.

Grammar (whitespace-insensitive, ``#`` starts a line comment)::

    document := ["format" INT] {"rel" NAME INT ";"} formula
    formula  := implies ["<->" formula]
    implies  := disj ["->" implies]
    disj     := conj {"|" conj}
    conj     := unary {"&" unary}
    unary    := "!" unary | ("forall" | "exists") VAR unary | primary
    primary  := "(" formula ")" | NAME "(" [VAR {"," VAR}] ")" | VAR ("=" | "!=") VAR | NAME
"""

from __future__ import annotations

import bisect
import re
from dataclasses import dataclass
from typing import List, Optional, Tuple

from spectra.logic.syntax import (
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
    RelationSymbol,
    Vocabulary,
)

from .errors import SentenceSyntaxError

FORMAT_VERSION = 1
KEYWORDS = {"forall", "exists", "rel", "format"}

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<comment>\#[^\n]*)
  | (?P<op><->|->|!=|[!&|(),;=])
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


@dataclass(frozen=True)
class SentenceDocument:
    vocabulary: Vocabulary
    formula: Formula


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self._line_starts = [0] + [m.end() for m in re.finditer(r"\n", text)]

    def position(self, offset: int) -> Tuple[int, int]:
        index = bisect.bisect_right(self._line_starts, offset) - 1
        return index + 1, offset - self._line_starts[index] + 1

    def error(self, message: str, offset: int) -> SentenceSyntaxError:
        line, column = self.position(offset)
        return SentenceSyntaxError(message, line, column, offset)

    def tokens(self) -> List[Token]:
        result: List[Token] = []
        pos = 0
        while pos < len(self.text):
            match = _TOKEN.match(self.text, pos)
            if match is None:
                raise self.error(f"Unexpected character {self.text[pos]!r}", pos)
            kind = match.lastgroup or ""
            if kind not in ("ws", "comment"):
                value = match.group()
                if kind == "name" and value in KEYWORDS:
                    kind = "keyword"
                result.append(Token(kind, value, pos))
            pos = match.end()
        result.append(Token("eof", "", len(self.text)))
        return result


class _Parser:
    def __init__(self, text: str, vocabulary: Optional[Vocabulary] = None):
        self.lexer = _Lexer(text)
        self.tokens = self.lexer.tokens()
        self.index = 0
        self.vocabulary = vocabulary
        self._open_parens: List[Token] = []

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _error(self, message: str, token: Optional[Token] = None) -> SentenceSyntaxError:
        token = token or self.current
        if token.kind == "eof" and self._open_parens:
            return self.lexer.error("Unclosed '('", self._open_parens[-1].offset)
        if token.kind == "eof":
            return self.lexer.error(f"{message}, found end of input", token.offset)
        return self.lexer.error(f"{message}, found {token.text!r}", token.offset)

    def _accept(self, text: str) -> Optional[Token]:
        if self.current.text == text and self.current.kind in ("op", "keyword"):
            return self._advance()
        return None

    def _expect(self, text: str) -> Token:
        token = self._accept(text)
        if token is None:
            raise self._error(f"Expected {text!r}")
        return token

    def _expect_kind(self, kind: str, what: str) -> Token:
        if self.current.kind != kind:
            raise self._error(f"Expected {what}")
        return self._advance()

    def document(self) -> SentenceDocument:
        if self._accept("format"):
            version = self._expect_kind("int", "format version")
            if int(version.text) != FORMAT_VERSION:
                raise self.lexer.error(f"Unsupported format version {version.text}", version.offset)
        symbols: List[RelationSymbol] = []
        while self.current.kind == "keyword" and self.current.text == "rel":
            self._advance()
            name = self._expect_kind("name", "relation name")
            arity = self._expect_kind("int", "relation arity")
            self._expect(";")
            if any(s.name == name.text for s in symbols):
                raise self.lexer.error(f"Relation '{name.text}' declared twice", name.offset)
            symbols.append(RelationSymbol(name.text, int(arity.text)))
        self.vocabulary = Vocabulary(tuple(symbols))
        formula = self.formula()
        if self.current.kind != "eof":
            raise self._error("Expected end of input")
        return SentenceDocument(self.vocabulary, formula)

    def formula(self) -> Formula:
        left = self._implies()
        if self._accept("<->"):
            return Iff(left, self.formula())
        return left

    def _implies(self) -> Formula:
        left = self._disj()
        if self._accept("->"):
            return Implies(left, self._implies())
        return left

    def _disj(self) -> Formula:
        parts = [self._conj()]
        while self._accept("|"):
            parts.append(self._conj())
        return parts[0] if len(parts) == 1 else Or(tuple(parts))

    def _conj(self) -> Formula:
        parts = [self._unary()]
        while self._accept("&"):
            parts.append(self._unary())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def _unary(self) -> Formula:
        if self._accept("!"):
            return Not(self._unary())
        if self.current.kind == "keyword" and self.current.text in ("forall", "exists"):
            quantifier = self._advance().text
            var = self._expect_kind("name", "quantified variable")
            body = self._unary()
            return Forall(var.text, body) if quantifier == "forall" else Exists(var.text, body)
        return self._primary()

    def _primary(self) -> Formula:
        token = self.current
        if token.kind == "op" and token.text == "(":
            self._advance()
            self._open_parens.append(token)
            inner = self.formula()
            self._expect(")")
            self._open_parens.pop()
            return inner
        if token.kind != "name":
            raise self._error("Expected a formula")
        self._advance()
        if self._accept("("):
            args: List[str] = []
            if not self._accept(")"):
                args.append(self._expect_kind("name", "variable").text)
                while self._accept(","):
                    args.append(self._expect_kind("name", "variable").text)
                self._expect(")")
            return self._relation_atom(token, tuple(args))
        if self._accept("="):
            return Eq(token.text, self._expect_kind("name", "variable").text)
        if self._accept("!="):
            return Not(Eq(token.text, self._expect_kind("name", "variable").text))
        return self._relation_atom(token, ())

    def _relation_atom(self, token: Token, args: Tuple[str, ...]) -> Atom:
        if self.vocabulary is not None:
            declared = self.vocabulary.arity(token.text)
            if declared is None:
                raise self.lexer.error(f"Undeclared relation '{token.text}'", token.offset)
            if declared != len(args):
                raise self.lexer.error(
                    f"Relation '{token.text}' expects {declared} argument(s), got {len(args)}",
                    token.offset,
                )
        return Atom(token.text, args)


def parse_sentence(text: str, allow_free: bool = False) -> SentenceDocument:
    """Parse a sentence document; free variables are rejected unless ``allow_free``."""
    parser = _Parser(text)
    doc = parser.document()
    free = sorted(doc.formula.free_variables)
    if free and not allow_free:
        raise SentenceSyntaxError(f"Free variable(s) in sentence: {', '.join(free)}", 1, 1, 0)
    return doc


def parse_formula(text: str, vocabulary: Optional[Vocabulary] = None) -> Formula:
    """Parse a bare formula; relations are checked against ``vocabulary`` when given."""
    parser = _Parser(text, vocabulary)
    formula = parser.formula()
    if parser.current.kind != "eof":
        raise parser._error("Expected end of input")
    return formula


# Printing. Precedence levels grow with binding strength.
_IFF, _IMP, _OR, _AND, _UNARY = 1, 2, 3, 4, 5


def _precedence(f: Formula) -> int:
    if isinstance(f, Iff):
        return _IFF
    if isinstance(f, Implies):
        return _IMP
    if isinstance(f, Or):
        return _OR
    if isinstance(f, And):
        return _AND
    return _UNARY


def format_formula(f: Formula) -> str:
    return _fmt(f, 0)


def _fmt(f: Formula, minimum: int) -> str:
    text = _fmt_node(f)
    return f"({text})" if _precedence(f) < minimum else text


def _fmt_node(f: Formula) -> str:
    if isinstance(f, Atom):
        return f"{f.relation}({','.join(f.args)})" if f.args else f.relation
    if isinstance(f, Eq):
        return f"{f.left} = {f.right}"
    if isinstance(f, Not):
        if isinstance(f.body, Eq):
            return f"{f.body.left} != {f.body.right}"
        return "!" + _fmt(f.body, _UNARY)
    if isinstance(f, (Forall, Exists)):
        keyword = "forall" if isinstance(f, Forall) else "exists"
        return f"{keyword} {f.var} {_fmt(f.body, _UNARY)}"
    if isinstance(f, And):
        return " & ".join(_fmt(op, _AND + 1) for op in f.operands)
    if isinstance(f, Or):
        return " | ".join(_fmt(op, _OR + 1) for op in f.operands)
    if isinstance(f, Implies):
        return f"{_fmt(f.left, _IMP + 1)} -> {_fmt(f.right, _IMP + 1)}"
    if isinstance(f, Iff):
        return f"{_fmt(f.left, _IFF + 1)} <-> {_fmt(f.right, _IFF + 1)}"
    raise TypeError(f"Unknown formula node {type(f).__name__}")


def print_sentence(doc: SentenceDocument) -> str:
    lines = [f"format {FORMAT_VERSION}"]
    lines.extend(f"rel {s.name} {s.arity};" for s in doc.vocabulary)
    if isinstance(doc.formula, And):
        lines.append(" &\n".join(_fmt(op, _AND + 1) for op in doc.formula.operands))
    else:
        lines.append(format_formula(doc.formula))
    return "\n".join(lines) + "\n"


def document_for(formula: Formula, vocabulary: Optional[Vocabulary] = None) -> SentenceDocument:
    """Wrap ``formula`` in a document whose vocabulary covers every relation it uses."""
    used = sorted(formula.relation_symbols, key=lambda s: s.name)
    base = vocabulary or Vocabulary()
    return SentenceDocument(base.extend(used), formula)


__all__ = [
    "FORMAT_VERSION",
    "SentenceDocument",
    "document_for",
    "format_formula",
    "parse_formula",
    "parse_sentence",
    "print_sentence",
]
