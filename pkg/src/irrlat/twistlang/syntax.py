"""AST for twist conditions, with a renderer that reproduces the surface text.

Nodes keep just enough surface detail (``either``, parentheses, chained
comparisons) that ``render(parse(t))`` equals ``t`` once whitespace is
stripped.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


# terms


@dataclass(frozen=True)
class Lit:
    value: int

    def render(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Product:
    """A run of one-letter variables, e.g. ``rs``; a single letter is a plain variable."""

    names: tuple[str, ...]

    def render(self) -> str:
        return "".join(self.names)


@dataclass(frozen=True)
class Sum:
    terms: tuple["Term", ...]

    def render(self) -> str:
        return "+".join(t.render() for t in self.terms)


@dataclass(frozen=True)
class SetLit:
    items: tuple["Term", ...]

    def render(self) -> str:
        return "{" + ",".join(t.render() for t in self.items) + "}"


@dataclass(frozen=True)
class Extremum:
    kind: str  # "min" or "max"
    arg: SetLit

    def render(self) -> str:
        return self.kind + self.arg.render()


@dataclass(frozen=True)
class SortAt:
    """``sort{w,x,y}[k]``: the k-th smallest (from 0) of the listed values."""

    arg: SetLit
    index: int

    def render(self) -> str:
        return f"sort{self.arg.render()}[{self.index}]"


Term = Union[Lit, Product, Sum, SetLit, Extremum, SortAt]


# formulas


@dataclass(frozen=True)
class Compare:
    """Chained comparison ``a < b <= c``; sets compare only with = and !=."""

    operands: tuple[Term, ...]
    ops: tuple[str, ...]

    def render(self) -> str:
        out = [self.operands[0].render()]
        for op, t in zip(self.ops, self.operands[1:]):
            out.append(op)
            out.append(t.render())
        return "".join(out)


@dataclass(frozen=True)
class Member:
    item: Term
    negated: bool
    pool: SetLit

    def render(self) -> str:
        return f"{self.item.render()} {'notin' if self.negated else 'in'} {self.pool.render()}"


@dataclass(frozen=True)
class Builtin:
    """Predicates over a set of terms: ``distinct{..}`` and ``nodoublepair{..}``.

    ``nodoublepair{a,b,c,d}`` holds unless the four values split into two
    pairs that are each equal (if two are equal the other two are not).
    """

    name: str
    arg: SetLit

    def render(self) -> str:
        return self.name + self.arg.render()


@dataclass(frozen=True)
class Paren:
    body: "Formula"

    def render(self) -> str:
        return "(" + self.body.render() + ")"


@dataclass(frozen=True)
class And:
    parts: tuple["Formula", ...]

    def render(self) -> str:
        return " and ".join(p.render() for p in self.parts)


@dataclass(frozen=True)
class Or:
    parts: tuple["Formula", ...]
    either: bool = False

    def render(self) -> str:
        body = " or ".join(p.render() for p in self.parts)
        return ("either " + body) if self.either else body


@dataclass(frozen=True)
class If:
    cond: "Formula"
    then: "Formula"

    def render(self) -> str:
        return f"if {self.cond.render()} then {self.then.render()}"


@dataclass(frozen=True)
class Clauses:
    """Top-level ``;``-separated conjunction; the empty tuple is ``true``."""

    parts: tuple["Formula", ...] = ()

    def render(self) -> str:
        return "; ".join(p.render() for p in self.parts)


Formula = Union[Compare, Member, Builtin, Paren, And, Or, If, Clauses]

TRUE = Clauses(())


def render(node) -> str:
    return node.render()


def variables(node) -> frozenset[str]:
    """All variable names mentioned (the characteristic ``p`` included)."""
    out: set[str] = set()

    def walk(n):
        if isinstance(n, Product):
            out.update(n.names)
        elif isinstance(n, (Lit,)):
            return
        elif isinstance(n, Sum):
            for t in n.terms:
                walk(t)
        elif isinstance(n, SetLit):
            for t in n.items:
                walk(t)
        elif isinstance(n, (Extremum, SortAt, Builtin)):
            walk(n.arg)
        elif isinstance(n, Compare):
            for t in n.operands:
                walk(t)
        elif isinstance(n, Member):
            walk(n.item)
            walk(n.pool)
        elif isinstance(n, Paren):
            walk(n.body)
        elif isinstance(n, (And, Or, Clauses)):
            for t in n.parts:
                walk(t)
        elif isinstance(n, If):
            walk(n.cond)
            walk(n.then)
        else:  # pragma: no cover
            raise TypeError(f"not a condition node: {n!r}")

    walk(node)
    return frozenset(out)


def conjoin(*conds: Formula) -> Clauses:
    """Flatten several conditions into one top-level clause list."""
    parts: list[Formula] = []
    for c in conds:
        if isinstance(c, Clauses):
            parts.extend(c.parts)
        else:
            parts.append(c)
    return Clauses(tuple(parts))
