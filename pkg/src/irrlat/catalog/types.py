"""Isomorphism-type labels such as ``A1bar A1tilde`` or ``A1^2 A2bar``.

A bar marks a factor generated by long root subgroups, a tilde one generated
by short root subgroups. The abstract type forgets the marks.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass

from ..errors import ParseError

_TOKEN = re.compile(r"([A-G])(\d+)(bar|tilde)?(?:\^(\d+))?$")


@dataclass(frozen=True)
class SimpleFactor:
    kind: str  # "A1", "G2", "D4", ...
    mark: str = ""  # "", "bar" or "tilde"

    @property
    def rank(self) -> int:
        return int(self.kind[1:])

    def render(self) -> str:
        return self.kind + self.mark


def parse_type(label: str) -> tuple[SimpleFactor, ...]:
    """``"A1bar^2 B2"`` -> (A1bar, A1bar, B2)."""
    out: list[SimpleFactor] = []
    for tok in label.split():
        m = _TOKEN.match(tok)
        if not m:
            raise ParseError(f"bad type token {tok!r} in {label!r}")
        f = SimpleFactor(m.group(1) + m.group(2), m.group(3) or "")
        out.extend([f] * int(m.group(4) or 1))
    if not out:
        raise ParseError("empty type label")
    return tuple(out)


def render_type(factors: tuple[SimpleFactor, ...]) -> str:
    """Inverse of :func:`parse_type`, collapsing runs into powers."""
    parts: list[str] = []
    i = 0
    while i < len(factors):
        j = i
        while j < len(factors) and factors[j] == factors[i]:
            j += 1
        n = j - i
        parts.append(factors[i].render() + (f"^{n}" if n > 1 else ""))
        i = j
    return " ".join(parts)


def abstract_key(factors: tuple[SimpleFactor, ...]) -> tuple[tuple[str, int], ...]:
    """Multiset of simple types, marks dropped; equal keys mean isomorphic types."""
    return tuple(sorted(Counter(f.kind for f in factors).items()))


def parse_pattern(text: str) -> tuple[tuple[str, int], ...]:
    """A type pattern like ``A1^3`` or ``A1 A2``; marks are ignored."""
    return abstract_key(parse_type(text.replace("×", " ").replace("*", " ")))
