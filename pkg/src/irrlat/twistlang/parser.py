"""Recursive-descent parser for twist conditions.

Grammar (EBNF, whitespace insignificant):

    condition  = [ clause { ";" clause } ] ;
    clause     = "if" disj "then" disj | disj ;
    disj       = [ "either" ] conj { "or" conj } ;
    conj       = atom { "and" atom } ;
    atom       = "(" disj ")"
               | ( "distinct" | "nodoublepair" ) set
               | operand ( "in" | "notin" ) set
               | operand relop operand { relop operand } ;
    operand    = set | sum ;
    sum        = primary { "+" primary } ;
    primary    = INT | VARS | ( "min" | "max" ) set | "sort" set "[" INT "]" ;
    set        = "{" sum { "," sum } "}" ;
    relop      = "<" | "<=" | "=" | "!=" | ">" | ">=" ;
    VARS       = one or more lowercase letters, each a variable (product) ;
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import TwistSyntaxError
from .syntax import (
    And,
    Builtin,
    Clauses,
    Compare,
    Extremum,
    If,
    Lit,
    Member,
    Or,
    Paren,
    Product,
    SetLit,
    SortAt,
    Sum,
)

KEYWORDS = frozenset(
    {"if", "then", "or", "and", "either", "min", "max", "sort", "distinct", "nodoublepair", "in", "notin"}
)
RELOPS = ("<=", ">=", "!=", "<", ">", "=")

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<word>[a-z]+)|(?P<op><=|>=|!=|[<>=])|(?P<punct>[{}\[\](),;+]))")


@dataclass(frozen=True)
class Token:
    kind: str  # num, word, kw, op, punct, end
    text: str
    offset: int


def tokenize(text: str, base: int = 0, full: str | None = None) -> list[Token]:
    full = text if full is None else full
    out = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            out.append(Token("end", "", base + pos))
            return out
        m = _TOKEN.match(text, pos)
        if not m:
            raise TwistSyntaxError(f"unexpected character {text[pos]!r}", full, base + pos)
        kind = m.lastgroup
        tok = m.group(kind)
        start = m.start(kind)
        if kind == "word" and tok in KEYWORDS:
            kind = "kw"
        out.append(Token(kind, tok, base + start))
        pos = m.end()


class _Parser:
    def __init__(self, text: str, base: int = 0, full: str | None = None):
        self.full = text if full is None else full
        self.toks = tokenize(text, base, self.full)
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def fail(self, expected) -> None:
        t = self.tok
        what = repr(t.text) if t.kind != "end" else "end of input"
        raise TwistSyntaxError(f"unexpected {what}", self.full, t.offset, frozenset(expected))

    def at(self, *texts: str) -> bool:
        return self.tok.kind in ("kw", "op", "punct") and self.tok.text in texts

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail({text})
        t = self.tok
        self.i += 1
        return t

    # formulas

    def condition(self) -> Clauses:
        parts = []
        if self.tok.kind != "end":
            parts.append(self.clause())
            while self.at(";"):
                self.i += 1
                parts.append(self.clause())
        if self.tok.kind != "end":
            self.fail({";", "and", "or", "end of input"})
        return Clauses(tuple(parts))

    def clause(self):
        if self.at("if"):
            self.i += 1
            cond = self.disj()
            self.expect("then")
            return If(cond, self.disj())
        return self.disj()

    def disj(self):
        either = False
        if self.at("either"):
            self.i += 1
            either = True
        parts = [self.conj()]
        while self.at("or"):
            self.i += 1
            parts.append(self.conj())
        if len(parts) == 1 and not either:
            return parts[0]
        if len(parts) == 1:
            self.fail({"or"})
        return Or(tuple(parts), either)

    def conj(self):
        parts = [self.atom()]
        while self.at("and"):
            self.i += 1
            parts.append(self.atom())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def atom(self):
        if self.at("("):
            self.i += 1
            body = self.disj()
            self.expect(")")
            return Paren(body)
        if self.at("distinct", "nodoublepair"):
            name = self.tok.text
            self.i += 1
            return Builtin(name, self.set_lit())
        first = self.operand()
        if self.at("in", "notin"):
            neg = self.tok.text == "notin"
            self.i += 1
            return Member(first, neg, self.set_lit())
        if self.tok.kind != "op":
            self.fail(set(RELOPS) | {"in", "notin"})
        operands, ops = [first], []
        while self.tok.kind == "op":
            ops.append(self.tok.text)
            self.i += 1
            operands.append(self.operand())
        is_set = [isinstance(o, SetLit) for o in operands]
        if any(is_set):
            if not all(is_set) or any(op not in ("=", "!=") for op in ops):
                raise TwistSyntaxError("sets compare only with = or != against sets", self.full, self.tok.offset)
        return Compare(tuple(operands), tuple(ops))

    # terms

    def operand(self):
        if self.at("{"):
            return self.set_lit()
        return self.sum()

    def sum(self):
        terms = [self.primary()]
        while self.at("+"):
            self.i += 1
            terms.append(self.primary())
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def primary(self):
        t = self.tok
        if t.kind == "num":
            self.i += 1
            return Lit(int(t.text))
        if t.kind == "word":
            self.i += 1
            return Product(tuple(t.text))
        if self.at("min", "max"):
            self.i += 1
            return Extremum(t.text, self.set_lit())
        if self.at("sort"):
            self.i += 1
            arg = self.set_lit()
            self.expect("[")
            if self.tok.kind != "num":
                self.fail({"INT"})
            k = int(self.tok.text)
            self.i += 1
            self.expect("]")
            if k >= len(arg.items):
                raise TwistSyntaxError("sort index out of range", self.full, t.offset)
            return SortAt(arg, k)
        self.fail({"INT", "VARS", "min", "max", "sort", "{"})

    def set_lit(self) -> SetLit:
        self.expect("{")
        items = [self.sum()]
        while self.at(","):
            self.i += 1
            items.append(self.sum())
        self.expect("}")
        return SetLit(tuple(items))


def parse_condition(text: str, base: int = 0, full: str | None = None) -> Clauses:
    """Parse a condition; ``base``/``full`` locate errors inside a larger string."""
    return _Parser(text, base, full).condition()
