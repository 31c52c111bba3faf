"""Diagonal embedding descriptors such as ``(1_a^{[r]},1_a^{[s]},10_b) | rs=0``.

Each position names the module by which a factor of the subgroup maps onto
one simple factor of the parent: a weight label (``1``, ``10``, ``01``,
``l1``) with an optional letter and Frobenius twist. The shorthand form
writes just the letter (``a^{[r]}`` for ``1_a^{[r]}``).

Positions sharing a letter are one diagonal factor. Without any letters,
positions of the same factor type form one diagonal factor, so ``(1,1)``
is a diagonal A1 in A1A1 and ``(1,1,10)`` is A1A2 in A1A1A2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping, Optional, Union

from ..errors import TwistSyntaxError, UnboundVariable
from .parser import parse_condition
from .syntax import TRUE, Clauses, variables

Twist = Union[str, int, None]

_POSITION = re.compile(
    r"\s*(?:(?P<label>l\d+|\d+)(?:_(?P<letter>[a-z]))?|(?P<short>[a-z]))"
    r"(?:\^\{\[(?P<twist>[a-z]|\d+)\]\})?\s*"
)


@dataclass(frozen=True)
class PositionSpec:
    label: Optional[str]  # None in shorthand form, meaning the natural A1 module
    letter: Optional[str] = None
    twist: Twist = None  # None = omitted, i.e. literal 0

    @property
    def weight_label(self) -> str:
        return self.label if self.label is not None else "1"

    @property
    def factor_type(self) -> str:
        """Simple-factor type implied by the label: ``1`` A1, ``10`` A2, ``100`` A3."""
        lab = self.weight_label
        if lab.isdigit():
            return f"A{len(lab)}"
        return "?"

    def twist_value(self, env: Mapping[str, int]) -> int:
        if self.twist is None:
            return 0
        if isinstance(self.twist, int):
            return self.twist
        if self.twist not in env:
            raise UnboundVariable(f"twist variable {self.twist!r} has no value")
        return int(env[self.twist])

    def render(self) -> str:
        if self.label is None:
            out = self.letter or ""
        else:
            out = self.label + (f"_{self.letter}" if self.letter else "")
        if self.twist is not None:
            out += "^{[" + str(self.twist) + "]}"
        return out


@dataclass(frozen=True)
class EmbeddingDescriptor:
    positions: tuple[PositionSpec, ...]
    condition: Clauses = field(default=TRUE)

    def render(self) -> str:
        body = "(" + ",".join(p.render() for p in self.positions) + ")"
        cond = self.condition.render()
        return f"{body} | {cond}" if cond else body

    def __str__(self) -> str:
        return self.render()

    @property
    def twist_variables(self) -> tuple[str, ...]:
        seen: list[str] = []
        for pos in self.positions:
            if isinstance(pos.twist, str) and pos.twist not in seen:
                seen.append(pos.twist)
        return tuple(seen)

    def groups(self) -> list[tuple[str, tuple[int, ...]]]:
        """Diagonal factors as (key, position indices), in order of first appearance."""
        lettered = any(p.letter for p in self.positions)
        order: list[str] = []
        members: dict[str, list[int]] = {}
        for i, pos in enumerate(self.positions):
            if pos.letter:
                key = pos.letter
            elif lettered:
                key = f"#{i}"
            else:
                key = pos.factor_type
            if key not in members:
                order.append(key)
                members[key] = []
            members[key].append(i)
        return [(k, tuple(members[k])) for k in order]

    def twists(self, env: Mapping[str, int]) -> tuple[int, ...]:
        return tuple(p.twist_value(env) for p in self.positions)


def parse_embedding(text: str) -> EmbeddingDescriptor:
    """Parse ``(pos,pos,...)`` optionally followed by ``| condition``."""
    pos = 0
    while pos < len(text) and text[pos].isspace():
        pos += 1
    if not text.startswith("(", pos):
        raise TwistSyntaxError("embedding must start with '('", text, pos, frozenset({"("}))
    pos += 1
    specs = []
    while True:
        m = _POSITION.match(text, pos)
        if not m or m.end() == pos:
            raise TwistSyntaxError("bad position", text, pos, frozenset({"LABEL", "LETTER"}))
        tw = m.group("twist")
        twist: Twist = None if tw is None else (int(tw) if tw.isdigit() else tw)
        if m.group("short"):
            specs.append(PositionSpec(None, m.group("short"), twist))
        else:
            specs.append(PositionSpec(m.group("label"), m.group("letter"), twist))
        pos = m.end()
        if pos < len(text) and text[pos] == ",":
            pos += 1
            continue
        if pos < len(text) and text[pos] == ")":
            pos += 1
            break
        raise TwistSyntaxError("expected ',' or ')'", text, pos, frozenset({",", ")"}))
    rest = text[pos:]
    stripped = rest.lstrip()
    if not stripped:
        return EmbeddingDescriptor(tuple(specs))
    if not stripped.startswith("|"):
        raise TwistSyntaxError("trailing text after embedding", text, pos + len(rest) - len(stripped), frozenset({"|"}))
    start = pos + len(rest) - len(stripped) + 1
    cond = parse_condition(text[start:], base=start, full=text)
    desc = EmbeddingDescriptor(tuple(specs), cond)
    known = set(desc.twist_variables) | {"p"}
    stray = variables(cond) - known
    if stray:
        raise TwistSyntaxError(f"condition mentions {sorted(stray)} which are not twists", text, start)
    return desc
