"""Enumeration of diagonal classes and audits of the twist conditions."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Optional, Union

from ..catalog.model import ClassRecord, DiagonalFamily, GroupCatalog
from ..charalg import char
from .canon import Canonicalizer, TwistTuple, from_descriptor, is_normalized, render_tuple


def _family(x: Union[ClassRecord, DiagonalFamily]) -> Optional[DiagonalFamily]:
    return x.family if isinstance(x, ClassRecord) else x


def enumerate_classes(x: Union[ClassRecord, DiagonalFamily], bound: int, p) -> list[tuple[int, ...]]:
    """Twist tuples (in the family's variable order) with all twists <= ``bound`` that the
    family's conditions accept at ``p``, ascending.

    A class with a fixed descriptor yields ``[()]`` when it exists at ``p``.
    """
    p = char(p)
    fam = _family(x)
    if fam is None:
        return [()] if isinstance(x, ClassRecord) and x.admits(p) else []
    if isinstance(x, ClassRecord) and not x.admits(p):
        return []
    out = []
    for tw in product(range(bound + 1), repeat=fam.arity):
        if not is_normalized(from_descriptor(fam.descriptor, tw)):
            continue
        if fam.admits(tw, p):
            out.append(tw)
    return out


@dataclass
class AuditReport:
    group: str
    family: int
    bound: int
    p: str
    accepted: int = 0
    orbits: int = 0
    collisions: list[tuple[tuple[int, ...], tuple[int, ...]]] = field(default_factory=list)
    excluded: list[TwistTuple] = field(default_factory=list)
    action_order: int = 1

    @property
    def injective(self) -> bool:
        return not self.collisions

    def render(self) -> str:
        lines = [
            f"family: {self.group} #{self.family}",
            f"bound: {self.bound}",
            f"p: {self.p}",
            f"action order: {self.action_order}",
            f"accepted tuples: {self.accepted}",
            f"injective: {'yes' if self.injective else 'NO'}",
            f"collisions: {len(self.collisions)}",
        ]
        for a, b in self.collisions:
            lines.append(f"  {a} ~ {b}")
        lines.append(f"excluded orbits: {len(self.excluded)}")
        for t in self.excluded:
            lines.append(f"  {render_tuple(t)}")
        return "\n".join(lines) + "\n"


def audit_family(x: Union[ClassRecord, DiagonalFamily], bound: int, p) -> AuditReport:
    """Check that no two accepted tuples are conjugate, and list the normalised
    tuples whose whole orbit is rejected."""
    p = char(p)
    fam = _family(x)
    if fam is None:
        raise ValueError("audit_family needs a diagonal family")
    action = fam.out_action
    report = AuditReport(fam.group, fam.family_id, bound, str(p), action_order=action.order if action else 1)
    exists = not isinstance(x, ClassRecord) or x.admits(p)
    canonicalize = Canonicalizer(action)
    seen: dict[TwistTuple, tuple[int, ...]] = {}
    rejected: dict[TwistTuple, None] = {}
    for tw in product(range(bound + 1), repeat=fam.arity):
        t = from_descriptor(fam.descriptor, tw)
        if not is_normalized(t):
            continue
        canon = canonicalize(t)
        if exists and fam.admits(tw, p):
            report.accepted += 1
            if canon in seen:
                report.collisions.append((seen[canon], tw))
            else:
                seen[canon] = tw
        else:
            rejected.setdefault(canon)
    report.orbits = len(seen)
    report.excluded = sorted((c for c in rejected if c not in seen), key=lambda t: tuple(s.twist for s in t))
    return report


@dataclass
class ParentAudit:
    group: str
    parent: int
    bound: int
    p: str
    accepted: int = 0
    collisions: list[tuple[str, str]] = field(default_factory=list)

    @property
    def injective(self) -> bool:
        return not self.collisions

    def render(self) -> str:
        lines = [
            f"parent: {self.group} #{self.parent}",
            f"bound: {self.bound}",
            f"p: {self.p}",
            f"accepted tuples: {self.accepted}",
            f"injective: {'yes' if self.injective else 'NO'}",
            f"collisions: {len(self.collisions)}",
        ]
        lines += [f"  {a} ~ {b}" for a, b in self.collisions]
        return "\n".join(lines) + "\n"


def audit_parent(g: GroupCatalog, parent: int, bound: int, p) -> ParentAudit:
    """Injectivity across every diagonal class and family inside one parent."""
    p = char(p)
    report = ParentAudit(g.name, parent, bound, str(p))
    prec = g.classes[parent]
    action = g.actions.get(prec.action) if prec.action else None
    canonicalize = Canonicalizer(action)
    seen: dict[TwistTuple, str] = {}
    for cid, rec in sorted(g.classes.items()):
        if rec.embed is None or rec.parent_at(p) != parent:
            continue
        for tw in enumerate_classes(rec, bound, p):
            name = f"#{cid}" + (f"^{{{','.join(map(str, tw))}}}" if tw else "")
            canon = canonicalize(from_descriptor(rec.embed, tw))
            report.accepted += 1
            if canon in seen:
                report.collisions.append((seen[canon], name))
            else:
                seen[canon] = name
    return report


def diagonal_parents(g: GroupCatalog) -> list[int]:
    return sorted({rec.parent for rec in g.classes.values() if rec.embed is not None and rec.parent is not None})
