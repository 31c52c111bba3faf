"""Overgroups of a diagonal instance inside its parent, by descriptor unification.

A diagonal subgroup X of a parent P is placed as: one weight label and one
twist per simple factor of P, with the factors grouped into blocks (one
block per simple factor of X). Another diagonal subgroup Z of P contains X
exactly when Z's blocks split X's blocks, and on every Z block X's labels
agree with Z's up to one graph automorphism and X's twists are Z's shifted
by a constant. Z is tried under every element of P's outer action.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..catalog.model import ClassRecord, ClassRef, Generator, GroupCatalog, OutAction
from ..twistlang import EmbeddingDescriptor


def dual_label(label: str) -> str:
    """Graph automorphism of A_n on a digit label: ``10`` <-> ``01``; A1 labels are fixed."""
    return label[::-1] if label.isdigit() else label


@dataclass(frozen=True)
class Placement:
    """A concrete diagonal subgroup of a parent, as seen position by position."""

    ref: ClassRef
    labels: tuple[str, ...]
    blocks: tuple[frozenset[int], ...]
    twists: tuple[int, ...]

    def block_of(self, i: int) -> frozenset[int]:
        for b in self.blocks:
            if i in b:
                return b
        raise KeyError(i)


def contains(outer: Placement, inner: Placement) -> bool:
    """Whether ``inner`` lies in ``outer`` (both in one parent), strictly."""
    if len(outer.blocks) <= len(inner.blocks):
        return False
    for b in outer.blocks:
        host = inner.block_of(next(iter(b)))
        if not b <= host:
            return False
        idx = sorted(b)
        same = all(inner.labels[i] == outer.labels[i] for i in idx)
        flipped = all(inner.labels[i] == dual_label(outer.labels[i]) for i in idx)
        if not (same or flipped):
            return False
        base = min(inner.twists[i] for i in idx)
        if any(inner.twists[i] - base != outer.twists[i] for i in idx):
            return False
    return True


def place(ref: ClassRef, desc: EmbeddingDescriptor, twists: tuple[int, ...] = ()) -> Placement:
    env = dict(zip(desc.twist_variables, twists))
    blocks = tuple(frozenset(ix) for _, ix in desc.groups())
    return Placement(ref, tuple(p.weight_label for p in desc.positions), blocks, desc.twists(env))


def _moved(desc: EmbeddingDescriptor, g: Generator):
    """Positions of ``desc`` after ``g``: (label, twist spec, source index) per target slot."""
    n = len(desc.positions)
    out: list = [None] * n
    for i, pos in enumerate(desc.positions):
        lab = pos.weight_label
        out[g.perm[i]] = (dual_label(lab) if i in g.dual else lab, pos.twist, i)
    return out


def _solve(x: Placement, desc: EmbeddingDescriptor, g: Generator) -> Optional[tuple[dict, Placement]]:
    """Twist values making ``desc`` (moved by ``g``) contain ``x``, or None."""
    moved = _moved(desc, g)
    blocks = tuple(frozenset(g.perm[i] for i in ix) for _, ix in desc.groups())
    if len(blocks) <= len(x.blocks):
        return None
    env: dict[str, int] = {}
    twists = [0] * len(moved)
    for b in blocks:
        if not b <= x.block_of(next(iter(b))):
            return None
        base = min(x.twists[i] for i in b)
        for i in b:
            want = x.twists[i] - base
            spec = moved[i][1]
            if spec is None or isinstance(spec, int):
                if want != (spec or 0):
                    return None
            elif env.setdefault(spec, want) != want:
                return None
            twists[i] = want
    z = Placement(x.ref, tuple(m[0] for m in moved), blocks, tuple(twists))
    if not contains(z, x):
        return None
    return env, z


@dataclass(frozen=True)
class Candidate:
    """A possible overgroup inside the parent: a class, a family, or a listed instance."""

    record: ClassRecord
    desc: EmbeddingDescriptor
    fixed: Optional[ClassRef] = None  # set for a route: the instance it names
    cond_ok: bool = True


def candidates(g: GroupCatalog, parent: int, p) -> list[Candidate]:
    out = []
    for rec in g.classes.values():
        if rec.embed is None or rec.parent_at(p) != parent or not rec.admits(p):
            continue
        out.append(Candidate(rec, rec.embed))
    for route in g.routes:
        if route.parent != parent or route.embed is None or not route.char_cond.admits(p):
            continue
        rec = g.classes[route.ref.id]
        if rec.admits(p):
            out.append(Candidate(rec, route.embed, route.ref))
    return out


def within_parent(g: GroupCatalog, x: Placement, parent: int, action: Optional[OutAction], p) -> list[tuple[ClassRef, Placement]]:
    """Every embedding of a candidate that strictly contains ``x``."""
    elements = action.elements if action is not None else OutAction.trivial(len(x.labels)).elements
    found: dict[tuple, tuple[ClassRef, Placement]] = {}
    for cand in candidates(g, parent, p):
        fam = cand.record.family
        for el in elements:
            hit = _solve(x, cand.desc, el)
            if hit is None:
                continue
            env, z = hit
            if cand.fixed is not None:
                ref = cand.fixed
            elif fam is not None:
                tw = tuple(env[v] for v in fam.variables)
                if not fam.admits(tw, p):
                    continue
                ref = ClassRef(g.name, cand.record.id, tw)
            else:
                ref = cand.record.ref
            if ref == x.ref:
                continue
            z = Placement(ref, z.labels, z.blocks, z.twists)
            found.setdefault((ref, z.blocks, z.labels, z.twists), (ref, z))
    return list(found.values())


def minimal_overgroups(hits: list[tuple[ClassRef, Placement]]) -> list[ClassRef]:
    """Refs of the embeddings that contain no other embedding from ``hits``."""
    keep = []
    for ref, z in hits:
        if any(contains(z, other) for _, other in hits if other is not z):
            continue
        if ref not in keep:
            keep.append(ref)
    return sorted(keep, key=lambda r: (r.id, r.twists or ()))
