"""Irreducible characters and decomposition for types beyond A1.

An irreducible character L(lam) in characteristic p is resolved by Steinberg's
tensor product theorem into restricted digits; each digit is a Weyl character
when it lies in the closure of the lowest alcove or is minuscule, and is
otherwise read from the checked-in table ``data/irreducibles.json``
(generated by ``tools/gen_irreducibles.py``). Anything else raises
:class:`Unresolved`.
"""

from __future__ import annotations

import json
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Union

from ..errors import NotACharacter, Unresolved, UnsupportedType
from .a1 import irr_char_a1, irr_dim_a1, weyl_char_a1
from .character import Character, Weight, tensor, twist
from .characteristic import Characteristic, char
from .rootsys import expand_dominant, root_system, weyl_character

PLike = Union[Characteristic, int, str]


@lru_cache(maxsize=None)
def _table() -> dict[tuple[str, int, Weight], dict[Weight, int]]:
    raw = json.loads(resources.files("irrlat.data").joinpath("irreducibles.json").read_text())
    out = {}
    for row in raw:
        key = (row["type"], row["p"], tuple(row["weight"]))
        out[key] = {tuple(w): m for w, m in row["dominant"]}
    return out


def table_entries() -> dict[tuple[str, int, Weight], dict[Weight, int]]:
    return dict(_table())


def _norm_type(name: str) -> str:
    return root_system(name).name


def weyl_char(name: str, lam: Union[Weight, int]) -> Character:
    """Weyl character W(lam) by Freudenthal's recursion (A1 in closed form)."""
    if isinstance(lam, int):
        lam = (lam,)
    lam = tuple(lam)
    name = _norm_type(name)
    if name == "A1":
        return weyl_char_a1(lam[0])
    return weyl_character(name, lam)


def weyl_dim(name: str, lam: Weight) -> int:
    return root_system(name).weyl_dim(tuple(lam))


def _digits(lam: Weight, p: int) -> list[Weight]:
    rest = list(lam)
    out = []
    while any(rest):
        out.append(tuple(x % p for x in rest))
        rest = [x // p for x in rest]
    return out


def restricted_is_weyl(name: str, lam: Weight, p: int) -> bool:
    R = root_system(name)
    return not any(lam) or R.is_minuscule(lam) or R.max_coroot_pairing(lam) <= p


@lru_cache(maxsize=None)
def _restricted_char(name: str, lam: Weight, p: int) -> Character:
    if restricted_is_weyl(name, lam, p):
        return weyl_character(name, lam)
    dom = _table().get((name, p, lam))
    if dom is None:
        raise Unresolved(f"L{lam} for {name} at p={p} is outside the lowest alcove and not tabulated")
    return expand_dominant(name, dom)


def _restricted_dim(name: str, lam: Weight, p: int) -> int:
    R = root_system(name)
    if restricted_is_weyl(name, lam, p):
        return R.weyl_dim(lam)
    dom = _table().get((name, p, lam))
    if dom is None:
        raise Unresolved(f"L{lam} for {name} at p={p} is outside the lowest alcove and not tabulated")
    return sum(m * len(R.orbit(mu)) for mu, m in dom.items())


def irr_char(name: str, lam: Union[Weight, int], p: PLike) -> Character:
    """Character of L(lam) in characteristic p."""
    if isinstance(lam, int):
        lam = (lam,)
    lam = tuple(lam)
    p = char(p)
    name = _norm_type(name)
    if name == "A1":
        return irr_char_a1(lam[0], p)
    if p.is_zero:
        return weyl_character(name, lam)
    return _irr_char_finite(name, lam, p.p)


@lru_cache(maxsize=None)
def _irr_char_finite(name: str, lam: Weight, p: int) -> Character:
    out = Character.trivial(len(lam))
    for i, digit in enumerate(_digits(lam, p)):
        if any(digit):
            out = tensor(out, twist(_restricted_char(name, digit, p), i, p))
    return out


def irr_dim(name: str, lam: Union[Weight, int], p: PLike) -> int:
    if isinstance(lam, int):
        lam = (lam,)
    lam = tuple(lam)
    p = char(p)
    name = _norm_type(name)
    if name == "A1":
        return irr_dim_a1(lam[0], p)
    if p.is_zero:
        return root_system(name).weyl_dim(lam)
    out = 1
    for digit in _digits(lam, p.p):
        if any(digit):
            out *= _restricted_dim(name, digit, p.p)
    return out


def _height(name: str, w: Weight) -> Fraction:
    return sum(root_system(name).to_root_coords(w), Fraction(0))


def decompose(name: str, c: Character, p: PLike) -> Counter:
    """Composition factors of a character by greedy peeling of the highest weight."""
    p = char(p)
    name = _norm_type(name)
    R = root_system(name)
    if c.rank != R.rank:
        raise NotACharacter(f"rank {c.rank} character for type {name}")
    if name == "A1":
        from .a1 import decompose_a1

        return Counter({(n,): m for n, m in decompose_a1(c, p).items()})
    rest = dict(c.terms)
    out: Counter = Counter()
    while rest:
        if any(m < 0 for m in rest.values()):
            raise NotACharacter("negative multiplicity while peeling")
        top = max(rest, key=lambda w: (_height(name, w), w))
        if not R.is_dominant(top):
            raise NotACharacter(f"highest remaining weight {top} is not dominant")
        m = rest[top]
        out[top] += m
        for w, k in irr_char(name, top, p).items():
            v = rest.get(w, 0) - m * k
            if v:
                rest[w] = v
            else:
                rest.pop(w, None)
    return out


def decompose_a2(c: Character, p: PLike) -> Counter:
    return decompose("A2", c, p)


def compose(name: str, factors: Counter, p: PLike) -> Character:
    """Sum of irreducible characters; inverse of :func:`decompose`."""
    R = root_system(name)
    out = Character.zero(R.rank)
    for w, m in factors.items():
        out = out + irr_char(name, w, p).scale(m)
    return out


def supported(name: str) -> bool:
    try:
        root_system(name)
    except UnsupportedType:
        return False
    return True
