"""Irreducible characters in characteristic p from Jantzen's sum formula.

For a restricted weight lam the sum formula gives sum_{i>0} ch W(lam)^i as a
signed combination of Weyl characters. Rewriting it in the basis of
irreducible characters, if every coefficient is 0 or 1 then the radical
W(lam)^1 has exactly that character and ch L(lam) = ch W(lam) - sum. When a
coefficient exceeds 1 the layer structure is not determined and the oracle
returns None.

This is an oracle for the checked-in tables, kept apart from the package's
own lookup code on purpose.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Optional

from irrlat.charalg.rootsys import dominant_multiplicities, root_system

Weight = tuple[int, ...]
Dom = dict[Weight, int]


def _nu(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def sum_formula(name: str, lam: Weight, p: int) -> dict[Weight, int]:
    """Jantzen sum as a combination {dominant mu: coefficient} of Weyl characters."""
    R = root_system(name)
    lr = tuple(x + 1 for x in lam)
    out: dict[Weight, int] = {}
    for a in R.positive_roots:
        h = R.coroot_pairing(lr, a)
        assert h.denominator == 1
        h = int(h)
        aw = R.root_weight(a)
        m = 1
        while m * p < h:
            shift = h - m * p
            mu = tuple(x - shift * y for x, y in zip(lam, aw))
            sign, dom = R.dot_dominant(mu)
            if sign:
                out[dom] = out.get(dom, 0) + sign * _nu(m * p, p)
            m += 1
    return {k: v for k, v in out.items() if v}


def _add(acc: Dom, d: Dom, k: int) -> None:
    for w, m in d.items():
        v = acc.get(w, 0) + k * m
        if v:
            acc[w] = v
        else:
            acc.pop(w, None)


def _depth(name: str, top: Weight, mu: Weight) -> Fraction:
    R = root_system(name)
    return sum(R.to_root_coords(tuple(x - y for x, y in zip(top, mu))), Fraction(0))


def _full(name: str, dom: Dom) -> dict[Weight, int]:
    R = root_system(name)
    out: dict[Weight, int] = {}
    for mu, m in dom.items():
        for nu in R.orbit(mu):
            out[nu] = out.get(nu, 0) + m
    return out


def _tensor_dom(name: str, d1: Dom, d2: Dom) -> Dom:
    R = root_system(name)
    f1, f2 = _full(name, d1), _full(name, d2)
    out: Dom = {}
    for w1, m1 in f1.items():
        for w2, m2 in f2.items():
            w = tuple(a + b for a, b in zip(w1, w2))
            if R.is_dominant(w):
                out[w] = out.get(w, 0) + m1 * m2
    return out


@lru_cache(maxsize=None)
def irreducible(name: str, lam: Weight, p: int) -> Optional[tuple[tuple[Weight, int], ...]]:
    """Dominant multiplicities of L(lam) in characteristic p, or None if undetermined."""
    lam = tuple(lam)
    if any(x >= p for x in lam):
        # Steinberg: split into base-p digits
        dom: Dom = {(0,) * len(lam): 1}
        rest = list(lam)
        k = 1
        while any(rest):
            digit = tuple(x % p for x in rest)
            rest = [x // p for x in rest]
            part = irreducible(name, digit, p)
            if part is None:
                return None
            scaled = {tuple(k * x for x in w): m for w, m in part}
            dom = _tensor_dom(name, dom, scaled)
            k *= p
        return tuple(sorted(dom.items()))
    weyl = dict(dominant_multiplicities(name, lam))
    s = sum_formula(name, lam, p)
    if not s:
        return tuple(sorted(weyl.items()))
    virtual: Dom = {}
    for mu, c in s.items():
        _add(virtual, dominant_multiplicities(name, mu), c)
    radical: Dom = {}
    while virtual:
        mu = min(virtual, key=lambda w: _depth(name, lam, w))
        c = virtual[mu]
        if c != 1:
            return None
        sub = irreducible(name, mu, p)
        if sub is None:
            return None
        sub = dict(sub)
        _add(virtual, sub, -1)
        _add(radical, sub, 1)
    _add(weyl, radical, -1)
    assert all(m > 0 for m in weyl.values())
    return tuple(sorted(weyl.items()))


def irreducible_dim(name: str, lam: Weight, p: int) -> Optional[int]:
    dom = irreducible(name, lam, p)
    if dom is None:
        return None
    R = root_system(name)
    return sum(m * len(R.orbit(mu)) for mu, m in dom)
