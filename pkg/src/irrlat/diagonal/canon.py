"""Twist tuples and their canonical forms under an outer action.

A twist tuple records, per simple factor of the parent, the weight label,
the diagonal factor (block) it belongs to and the Frobenius twist. Two
tuples describe conjugate subgroups when an element of the outer action
carries one to the other after renormalising: blocks renumbered by first
appearance, each block shifted so its least twist is 0, and each block
optionally dualised (an automorphism of the subgroup's own factor).
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Optional

from ..catalog.model import Generator, OutAction
from ..lattice.unify import dual_label
from ..twistlang import EmbeddingDescriptor


class Slot(NamedTuple):
    label: str
    block: int
    twist: int


TwistTuple = tuple[Slot, ...]


def label_key(label: str) -> tuple:
    """Natural label order with ``10`` < ``01``: compare digits from the right."""
    return (len(label), tuple(int(c) for c in reversed(label))) if label.isdigit() else (99, label)


def sort_key(t: TwistTuple) -> tuple:
    return tuple((label_key(s.label), s.block, s.twist) for s in t)


def from_descriptor(desc: EmbeddingDescriptor, twists: Iterable[int] = ()) -> TwistTuple:
    env = dict(zip(desc.twist_variables, twists))
    block = {}
    for k, (_, ix) in enumerate(desc.groups()):
        for i in ix:
            block[i] = k
    vals = desc.twists(env)
    return tuple(Slot(p.weight_label, block[i], vals[i]) for i, p in enumerate(desc.positions))


def is_normalized(t: TwistTuple) -> bool:
    mins: dict[int, int] = {}
    for s in t:
        mins[s.block] = min(mins.get(s.block, s.twist), s.twist)
    return all(v == 0 for v in mins.values())


def normalize(t: TwistTuple) -> TwistTuple:
    renum: dict[int, int] = {}
    mins: dict[int, int] = {}
    flip: dict[int, bool] = {}
    for s in t:
        renum.setdefault(s.block, len(renum))
        mins[s.block] = min(mins.get(s.block, s.twist), s.twist)
        if s.block not in flip and s.label != dual_label(s.label):
            flip[s.block] = label_key(dual_label(s.label)) < label_key(s.label)
    return tuple(
        Slot(dual_label(s.label) if flip.get(s.block) else s.label, renum[s.block], s.twist - mins[s.block])
        for s in t
    )


def apply(g: Generator, t: TwistTuple) -> TwistTuple:
    out: list = [None] * len(t)
    for i, s in enumerate(t):
        out[g.perm[i]] = Slot(dual_label(s.label), s.block, s.twist) if i in g.dual else s
    return tuple(out)


def orbit(t: TwistTuple, action: Optional[OutAction]) -> set[TwistTuple]:
    if action is None:
        return {normalize(t)}
    return {normalize(apply(g, t)) for g in action.elements}


def canonicalize(t: TwistTuple, action: Optional[OutAction]) -> TwistTuple:
    """Lexicographically least normalised image of ``t`` (labels ordered 10 < 01)."""
    return min(orbit(t, action), key=sort_key)


class Canonicalizer:
    """Memoised :func:`canonicalize`: each orbit is expanded once and all its members cached."""

    def __init__(self, action: Optional[OutAction]):
        self.action = action
        self._cache: dict[TwistTuple, TwistTuple] = {}

    def __call__(self, t: TwistTuple) -> TwistTuple:
        t = normalize(t)
        hit = self._cache.get(t)
        if hit is None:
            members = orbit(t, self.action)
            hit = min(members, key=sort_key)
            for m in members:
                self._cache[m] = hit
        return hit


def render_tuple(t: TwistTuple) -> str:
    """``(1_a^{[1]},1_a,1_b)``; letters only when there is more than one block."""
    many = len({s.block for s in t}) > 1
    parts = []
    for s in t:
        out = s.label + (f"_{chr(ord('a') + s.block)}" if many else "")
        if s.twist:
            out += "^{[" + str(s.twist) + "]}"
        parts.append(out)
    return "(" + ",".join(parts) + ")"
