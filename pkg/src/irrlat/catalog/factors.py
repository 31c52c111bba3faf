"""Composition-factor lists such as ``(1,1)/(0,W(2))`` or ``W(l1)/l4/0^2``.

Each ``/``-separated entry gives one high weight per simple factor of the
acting group, optionally flagged ``W(..)`` (the Weyl module, whose
composition factors are left implicit) or ``T(..)`` (an A1 tilting module),
with a multiplicity suffix ``^k``. Weight tokens depend on the factor type:
an integer for A1, ``k`` digits for rank ``k`` (``10``, ``010``), ``0`` for
the zero weight of any rank, or fundamental-weight sums ``2l1+l3``.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Union

from ..charalg import Character, outer, twist, weyl_char
from ..charalg.a1 import irr_dim_a1, tilting_char_a1
from ..charalg.characteristic import Characteristic, char
from ..charalg.modular import irr_char, irr_dim, weyl_dim
from ..errors import ParseError
from .types import SimpleFactor

Weight = tuple[int, ...]
_LAMBDA = re.compile(r"(\d*)l(\d+)$")


@dataclass(frozen=True, order=True)
class Component:
    weight: Weight
    kind: str = "L"  # L irreducible, W Weyl module, T tilting module
    twist: int = 0

    def render(self, factor: SimpleFactor) -> str:
        w = render_weight(self.weight, factor)
        if self.twist:
            w += "^{[" + str(self.twist) + "]}"
        return w if self.kind == "L" else f"{self.kind}({w})"


FactorEntry = tuple[Component, ...]


def parse_weight(tok: str, factor: SimpleFactor) -> Weight:
    tok = tok.strip()
    k = factor.rank
    if tok == "0":
        return (0,) * k
    if "l" in tok:
        w = [0] * k
        for term in tok.split("+"):
            m = _LAMBDA.match(term.strip())
            if not m or not 1 <= int(m.group(2)) <= k:
                raise ParseError(f"bad fundamental-weight term {term!r} for {factor.kind}")
            w[int(m.group(2)) - 1] += int(m.group(1) or 1)
        return tuple(w)
    if not tok.isdigit():
        raise ParseError(f"bad weight {tok!r} for {factor.kind}")
    if k == 1:
        return (int(tok),)
    if len(tok) != k:
        raise ParseError(f"weight {tok!r} needs {k} digits for {factor.kind}")
    return tuple(int(c) for c in tok)


def render_weight(w: Weight, factor: SimpleFactor) -> str:
    if len(w) == 1:
        return str(w[0])
    if all(x < 10 for x in w):
        return "".join(str(x) for x in w)
    return "+".join((f"{x}l{i + 1}" if x > 1 else f"l{i + 1}") for i, x in enumerate(w) if x)


def _split_top(text: str, sep: str) -> list[str]:
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return out


def _component(tok: str, factor: SimpleFactor) -> Component:
    tok = tok.strip()
    m = re.fullmatch(r"([WT])\((.*)\)", tok)
    if m:
        kind = m.group(1)
        if kind == "T" and factor.kind != "A1":
            raise ParseError(f"T(..) is only used for A1 factors, not {factor.kind}")
        return Component(parse_weight(m.group(2), factor), kind)
    return Component(parse_weight(tok, factor))


@dataclass(frozen=True)
class FactorList:
    """Multiset of composition factors for a group with the given simple factors."""

    factors: tuple[SimpleFactor, ...]
    entries: tuple[tuple[FactorEntry, int], ...]

    @classmethod
    def parse(cls, text: str, factors: tuple[SimpleFactor, ...]) -> "FactorList":
        acc: Counter = Counter()
        order: list[FactorEntry] = []
        for raw in _split_top(text, "/"):
            raw = raw.strip()
            if not raw:
                raise ParseError(f"empty entry in factor list {text!r}")
            mult = 1
            m = re.search(r"\^(\d+)$", raw)
            if m:
                mult = int(m.group(1))
                raw = raw[: m.start()].strip()
            if raw.startswith("(") and raw.endswith(")") and len(_split_top(raw[1:-1], ",")) > 1:
                toks = _split_top(raw[1:-1], ",")
            else:
                toks = [raw]
            if len(toks) != len(factors):
                raise ParseError(f"entry {raw!r} has {len(toks)} components, expected {len(factors)}")
            entry = tuple(_component(t, f) for t, f in zip(toks, factors))
            if entry not in acc:
                order.append(entry)
            acc[entry] += mult
        return cls(tuple(factors), tuple((e, acc[e]) for e in order))

    @classmethod
    def from_counter(cls, factors: tuple[SimpleFactor, ...], counts: Counter) -> "FactorList":
        items = sorted(counts.items(), key=lambda kv: _sort_key(kv[0]), reverse=True)
        return cls(tuple(factors), tuple((e, m) for e, m in items if m))

    def counter(self) -> Counter:
        out: Counter = Counter()
        for e, m in self.entries:
            out[e] += m
        return out

    def dim(self, p: Union[Characteristic, int, str]) -> int:
        p = char(p)
        return sum(m * entry_dim(e, self.factors, p) for e, m in self.entries)

    def character(self, p) -> Character:
        """Total character as a sum of outer products of the entries."""
        p = char(p)
        out = None
        for e, m in self.entries:
            c = entry_char(e, self.factors, p).scale(m)
            out = c if out is None else out + c
        return out if out is not None else Character.zero(sum(f.rank for f in self.factors))

    def has_flags(self) -> bool:
        return any(c.kind != "L" for e, _ in self.entries for c in e)

    def render(self) -> str:
        parts = []
        for e, m in self.entries:
            body = ",".join(c.render(f) for c, f in zip(e, self.factors))
            if len(e) > 1:
                body = f"({body})"
            parts.append(body + (f"^{m}" if m > 1 else ""))
        return "/".join(parts)

    def render_spaced(self) -> str:
        return self.render().replace("/", " / ")

    def __len__(self) -> int:
        return sum(m for _, m in self.entries)


def _sort_key(e: FactorEntry) -> tuple:
    return tuple((c.weight, c.twist, c.kind) for c in e)


def component_dim(c: Component, f: SimpleFactor, p: Characteristic) -> int:
    if c.kind == "W":
        return weyl_dim(f.kind, c.weight)
    if c.kind == "T":
        return tilting_char_a1(c.weight[0], p).dim()
    if f.kind == "A1":
        return irr_dim_a1(c.weight[0], p)
    return irr_dim(f.kind, c.weight, p)


def entry_dim(e: FactorEntry, factors, p: Characteristic) -> int:
    out = 1
    for c, f in zip(e, factors):
        out *= component_dim(c, f, p)
    return out


def component_char(c: Component, f: SimpleFactor, p: Characteristic) -> Character:
    if c.kind == "W":
        ch = weyl_char(f.kind, c.weight)
    elif c.kind == "T":
        ch = tilting_char_a1(c.weight[0], p)
    else:
        ch = irr_char(f.kind, c.weight, p)
    return twist(ch, c.twist, p) if c.twist else ch


def entry_char(e: FactorEntry, factors, p: Characteristic) -> Character:
    out = None
    for c, f in zip(e, factors):
        ch = component_char(c, f, p)
        out = ch if out is None else outer(out, ch)
    return out
