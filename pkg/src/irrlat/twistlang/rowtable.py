"""Row-format condition tables.

A table governs one or more groups of symbols (the literal ``0`` may be one
of them). Each row states the exact set of equalities allowed within each
group and further requirements on all twists. An assignment selects the
row whose equalities are precisely those holding among the governed
symbols; it is accepted iff such a row exists and its requirements hold.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ..errors import AmbiguousRows, TwistSyntaxError, UnboundVariable
from .evaluate import eval_condition
from .parser import parse_condition
from .syntax import Clauses

Block = tuple[str, ...]


def parse_pattern(text: str) -> tuple[Block, ...]:
    """``"r=0; s=t=u"`` -> (("r","0"), ("s","t","u")); ``"none"`` -> ()."""
    body = text.strip()
    if body == "none":
        return ()
    blocks = []
    for part in body.split(";"):
        names = tuple(x.strip() for x in part.split("="))
        if len(names) < 2 or not all(n == "0" or (n.isalpha() and len(n) == 1) for n in names):
            raise TwistSyntaxError(f"bad equality block {part.strip()!r}", text, max(text.find(part), 0))
        blocks.append(names)
    return tuple(blocks)


def render_pattern(blocks: tuple[Block, ...]) -> str:
    return "; ".join("=".join(b) for b in blocks) if blocks else "none"


@dataclass(frozen=True)
class Row:
    blocks: tuple[Block, ...]
    extra: Clauses

    @property
    def key(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset(b) for b in self.blocks)

    def render(self) -> tuple[str, str]:
        return render_pattern(self.blocks), (self.extra.render() or "none")


@dataclass(frozen=True)
class RowTable:
    name: str
    groups: tuple[tuple[str, ...], ...]
    rows: tuple[Row, ...]

    @property
    def governed(self) -> tuple[str, ...]:
        return tuple(s for g in self.groups for s in g)

    def render_groups(self) -> str:
        return " | ".join(",".join(g) for g in self.groups)

    def validate(self) -> None:
        """Every block lies inside one group, and no two rows share a pattern."""
        seen = {}
        for i, row in enumerate(self.rows):
            for b in row.blocks:
                if not any(set(b) <= set(g) for g in self.groups):
                    raise TwistSyntaxError(
                        f"{self.name}: block {'='.join(b)} is not inside one governed group", "=".join(b), 0
                    )
            if row.key in seen:
                raise AmbiguousRows(f"{self.name}: rows {seen[row.key]} and {i} have the same equalities")
            seen[row.key] = i


def parse_groups(text: str) -> tuple[tuple[str, ...], ...]:
    return tuple(tuple(x.strip() for x in g.split(",") if x.strip()) for g in text.split("|"))


def make_row(eq: str, extra: str) -> Row:
    extra = extra.strip()
    cond = Clauses(()) if extra == "none" else parse_condition(extra)
    return Row(parse_pattern(eq), cond)


def _value(sym: str, env: Mapping[str, int]) -> int:
    if sym == "0":
        return 0
    if sym not in env:
        raise UnboundVariable(f"governed symbol {sym!r} has no value")
    return int(env[sym])


def induced_pattern(table: RowTable, env: Mapping[str, int]) -> frozenset[frozenset[str]]:
    """Non-singleton classes of equal value, computed within each governed group."""
    out = set()
    for group in table.groups:
        classes: dict[int, list[str]] = {}
        for sym in group:
            classes.setdefault(_value(sym, env), []).append(sym)
        out.update(frozenset(c) for c in classes.values() if len(c) > 1)
    return frozenset(out)


def matching_rows(table: RowTable, env: Mapping[str, int]) -> list[int]:
    pat = induced_pattern(table, env)
    return [i for i, row in enumerate(table.rows) if row.key == pat]


def eval_row_table(table: RowTable, env: Mapping[str, int]) -> bool:
    hits = matching_rows(table, env)
    if len(hits) > 1:
        raise AmbiguousRows(f"{table.name}: rows {hits} all match")
    if not hits:
        return False
    return eval_condition(table.rows[hits[0]].extra, env)
