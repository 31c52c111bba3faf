"""Type A1: Weyl, irreducible and tilting characters in any characteristic."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Union

from ..errors import NotACharacter, OutOfSupportedRange
from .character import Character, tensor, twist
from .characteristic import Characteristic, char

PLike = Union[Characteristic, int, str]


@lru_cache(maxsize=None)
def weyl_char_a1(n: int) -> Character:
    if n < 0:
        raise ValueError("highest weight must be non-negative")
    return Character.a1({d: 1 for d in range(-n, n + 1, 2)})


def digits(n: int, p: int) -> list[int]:
    """Base-p digits, least significant first (empty for n = 0)."""
    out = []
    while n:
        n, d = divmod(n, p)
        out.append(d)
    return out


@lru_cache(maxsize=None)
def _irr(n: int, p: Characteristic) -> Character:
    if p.is_zero or n < p.p:
        return weyl_char_a1(n)
    c = Character.trivial()
    for i, d in enumerate(digits(n, p.p)):
        if d:
            c = tensor(c, twist(weyl_char_a1(d), i, p))
    return c


def irr_char_a1(n: int, p: PLike) -> Character:
    """Character of L(n): Steinberg's tensor product over base-p digits."""
    if n < 0:
        raise ValueError("highest weight must be non-negative")
    return _irr(n, char(p))


def irr_dim_a1(n: int, p: PLike) -> int:
    p = char(p)
    if p.is_zero:
        return n + 1
    out = 1
    for d in digits(n, p.p):
        out *= d + 1
    return out


def tilting_char_a1(n: int, p: PLike) -> Character:
    """Character of T(n), supported for n <= 2p-2."""
    p = char(p)
    if n < 0:
        raise ValueError("highest weight must be non-negative")
    if p.is_zero or n < p.p:
        return weyl_char_a1(n)
    if n > 2 * p.p - 2:
        raise OutOfSupportedRange(f"T({n}) at p={p} lies beyond the first wall (n > 2p-2)")
    return weyl_char_a1(n) + weyl_char_a1(2 * p.p - 2 - n)


def decompose_a1(c: Character, p: PLike) -> Counter:
    """Composition factors of a symmetric A1 character, by greedy highest-weight peeling.

    Returns a Counter mapping highest weight n to its multiplicity.
    """
    p = char(p)
    if c.rank != 1:
        raise NotACharacter("decompose_a1 expects a rank-one character")
    if not c.is_symmetric():
        raise NotACharacter("character is not symmetric under negation")
    rest = dict(c.terms)
    out: Counter = Counter()
    while rest:
        if any(m < 0 for m in rest.values()):
            raise NotACharacter("negative multiplicity while peeling")
        (d,) = max(rest)
        m = rest[(d,)]
        if d < 0:
            raise NotACharacter("only negative weights remain")
        out[d] += m
        for w, k in irr_char_a1(d, p).items():
            v = rest.get(w, 0) - m * k
            if v:
                rest[w] = v
            else:
                rest.pop(w, None)
    return out


def char_of_factors(factors: Counter, p: PLike) -> Character:
    """Inverse of :func:`decompose_a1`."""
    c = Character.zero()
    for n, m in factors.items():
        c = c + irr_char_a1(n, p).scale(m)
    return c
