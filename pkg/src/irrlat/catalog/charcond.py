"""Characteristic conditions: conjunctions of ``=c``, ``!=c`` and ``>=c``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from ..charalg.characteristic import PROBES, Characteristic, char
from ..errors import ParseError

_OPS = ("!=", ">=", "=")


@dataclass(frozen=True)
class Atom:
    op: str  # "=", "!=", ">="
    value: int

    def admits(self, p: Characteristic) -> bool:
        if self.op == ">=":
            return p.at_least(self.value)
        if self.op == "=":
            return p.value == self.value
        return p.value != self.value

    def render(self) -> str:
        return f"p{self.op}{self.value}"


@dataclass(frozen=True)
class CharCondition:
    """Membership test over primes and infinity; the empty conjunction is ALL."""

    atoms: tuple[Atom, ...] = ()

    @classmethod
    def parse(cls, text: str) -> "CharCondition":
        body = text.strip()
        if body in ("", "all"):
            return ALL
        atoms = []
        for part in body.split(","):
            part = part.strip()
            for op in _OPS:
                if part.startswith(op):
                    num = part[len(op):].strip()
                    if not num.isdigit():
                        raise ParseError(f"bad characteristic condition {text!r}")
                    atoms.append(Atom(op, int(num)))
                    break
            else:
                raise ParseError(f"bad characteristic condition {text!r}")
        return cls(tuple(atoms))

    def admits(self, p: Union[Characteristic, int, str, None]) -> bool:
        p = char(p)
        return all(a.admits(p) for a in self.atoms)

    def conj(self, other: "CharCondition") -> "CharCondition":
        merged = list(self.atoms)
        merged += [a for a in other.atoms if a not in merged]
        return CharCondition(tuple(merged))

    def probes(self) -> list[Characteristic]:
        return [p for p in PROBES if self.admits(p)]

    @property
    def is_all(self) -> bool:
        return not self.atoms

    def render(self) -> str:
        """File syntax: ``all``, ``=3``, ``!=2,>=5``."""
        if not self.atoms:
            return "all"
        return ",".join(f"{a.op}{a.value}" for a in self.atoms)

    def label(self) -> str:
        """Human form used in graph labels: ``p!=2``, ``p>=7``."""
        return ", ".join(a.render() for a in self.atoms)

    def __str__(self) -> str:
        return self.render()


ALL = CharCondition(())


def union_probes(conds: Iterable[CharCondition]) -> set[Characteristic]:
    out: set[Characteristic] = set()
    for c in conds:
        out.update(c.probes())
    return out
