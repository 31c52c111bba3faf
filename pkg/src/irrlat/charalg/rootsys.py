"""Root data for simple types, Weyl dimensions and Freudenthal's formula.

Weights are integer tuples in fundamental-weight coordinates with Bourbaki
numbering of the simple roots.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from ..errors import UnsupportedType
from .character import Character, Weight

_TYPE_RE = re.compile(r"^([A-G])(\d+)$")


def _cartan(kind: str, n: int) -> tuple[list[list[int]], list[int]]:
    """Cartan matrix C[i][j] = <alpha_i^vee, alpha_j> and half squared root lengths."""
    C = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int, cij: int = -1, cji: int = -1) -> None:
        C[i][j], C[j][i] = cij, cji

    if kind == "A" and n >= 1:
        for i in range(n - 1):
            link(i, i + 1)
        d = [1] * n
    elif kind == "B" and n >= 2:
        for i in range(n - 2):
            link(i, i + 1)
        # alpha_n short
        link(n - 2, n - 1, -1, -2)
        d = [2] * (n - 1) + [1]
    elif kind == "C" and n >= 2:
        for i in range(n - 2):
            link(i, i + 1)
        # alpha_n long
        link(n - 2, n - 1, -2, -1)
        d = [1] * (n - 1) + [2]
    elif kind == "D" and n >= 3:
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
        d = [1] * n
    elif kind == "E" and n in (6, 7, 8):
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
        d = [1] * n
    elif kind == "F" and n == 4:
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
        d = [2, 2, 1, 1]
    elif kind == "G" and n == 2:
        # alpha_1 short, alpha_2 long
        link(0, 1, -3, -1)
        d = [1, 3]
    else:
        raise UnsupportedType(f"no simple type {kind}{n}")
    assert all(d[i] * C[i][j] == d[j] * C[j][i] for i in range(n) for j in range(n))
    return C, d


class RootSystem:
    """Positive roots, coroot pairings and inner products for one simple type."""

    def __init__(self, name: str):
        m = _TYPE_RE.match(name)
        if not m:
            raise UnsupportedType(f"unrecognised simple type {name!r}")
        kind, n = m.group(1), int(m.group(2))
        if kind == "D" and n == 2:
            raise UnsupportedType("D2 is not simple")
        if kind in "BC" and n == 1:
            kind = "A"
        self.name = f"{kind}{n}"
        self.kind = kind
        self.rank = n
        self.cartan, self.d = _cartan(kind, n)
        self._inv = _invert(self.cartan)
        self.positive_roots = self._positive_roots()
        self.rho: Weight = (1,) * n

    def _positive_roots(self) -> list[tuple[int, ...]]:
        """Positive roots in simple-root coordinates, by raising along root strings."""
        n = self.rank
        simple = [tuple(1 if i == j else 0 for j in range(n)) for i in range(n)]
        roots = set(simple)
        layer = list(simple)
        while layer:
            nxt = []
            for a in layer:
                for i in range(n):
                    # the alpha_i string through a: q - r = -<a, alpha_i^vee>
                    pair = sum(self.cartan[i][j] * a[j] for j in range(n))
                    r = 0
                    b = list(a)
                    while True:
                        b[i] -= 1
                        if tuple(b) in roots:
                            r += 1
                        else:
                            break
                    q = r - pair
                    if q > 0:
                        c = list(a)
                        c[i] += 1
                        c = tuple(c)
                        if c not in roots:
                            roots.add(c)
                            nxt.append(c)
            layer = nxt
        return sorted(roots, key=lambda a: (sum(a), a))

    def root_weight(self, a: Iterable[int]) -> Weight:
        """Simple-root coordinates to fundamental-weight coordinates."""
        a = tuple(a)
        n = self.rank
        return tuple(sum(self.cartan[i][j] * a[j] for j in range(n)) for i in range(n))

    def simple_root_weights(self) -> list[Weight]:
        n = self.rank
        return [self.root_weight(tuple(1 if i == j else 0 for j in range(n))) for i in range(n)]

    def half_length(self, a: tuple[int, ...]) -> Fraction:
        """(alpha, alpha)/2 for a root in simple-root coordinates."""
        w = self.root_weight(a)
        return Fraction(sum(a[k] * self.d[k] * w[k] for k in range(self.rank)), 2)

    def coroot_pairing(self, lam: Weight, a: tuple[int, ...]) -> Fraction:
        """<lam, alpha^vee> for a root alpha given in simple-root coordinates."""
        num = sum(a[k] * self.d[k] * lam[k] for k in range(self.rank))
        return Fraction(num) / self.half_length(a)

    def inner(self, lam: Weight, mu: Weight) -> Fraction:
        n = self.rank
        c = [sum(self._inv[k][i] * lam[i] for i in range(n)) for k in range(n)]
        return sum((c[k] * self.d[k] * mu[k] for k in range(n)), Fraction(0))

    def to_root_coords(self, lam: Weight) -> tuple[Fraction, ...]:
        n = self.rank
        return tuple(sum((self._inv[k][i] * lam[i] for i in range(n)), Fraction(0)) for k in range(n))

    def in_root_lattice_cone(self, lam: Weight) -> bool:
        """True when lam is a non-negative integer combination of simple roots."""
        return all(x.denominator == 1 and x >= 0 for x in self.to_root_coords(lam))

    def weyl_dim(self, lam: Weight) -> int:
        lam = tuple(lam)
        num, den = Fraction(1), Fraction(1)
        lr = tuple(x + 1 for x in lam)
        for a in self.positive_roots:
            num *= self.coroot_pairing(lr, a)
            den *= self.coroot_pairing(self.rho, a)
        out = num / den
        assert out.denominator == 1
        return int(out)

    def reflect(self, lam: Weight, i: int) -> Weight:
        a = self.simple_root_weights()[i]
        return tuple(x - lam[i] * y for x, y in zip(lam, a))

    def dominant_conjugate(self, lam: Weight) -> Weight:
        lam = tuple(lam)
        sr = self.simple_root_weights()
        while True:
            for i, x in enumerate(lam):
                if x < 0:
                    lam = tuple(u - x * v for u, v in zip(lam, sr[i]))
                    break
            else:
                return lam

    def dot_dominant(self, lam: Weight) -> tuple[int, Weight]:
        """Return (sign, w.lam) with w.lam dominant, or (0, lam) when lam + rho is singular."""
        v = tuple(x + 1 for x in lam)
        sign = 1
        sr = self.simple_root_weights()
        while True:
            for i, x in enumerate(v):
                if x == 0:
                    return 0, tuple(lam)
                if x < 0:
                    v = tuple(u - x * s for u, s in zip(v, sr[i]))
                    sign = -sign
                    break
            else:
                return sign, tuple(x - 1 for x in v)

    def orbit(self, lam: Weight) -> list[Weight]:
        lam = self.dominant_conjugate(lam)
        sr = self.simple_root_weights()
        seen = {lam}
        stack = [lam]
        while stack:
            mu = stack.pop()
            for i, x in enumerate(mu):
                if x > 0:
                    nu = tuple(u - x * s for u, s in zip(mu, sr[i]))
                    if nu not in seen:
                        seen.add(nu)
                        stack.append(nu)
        return sorted(seen)

    def is_dominant(self, lam: Weight) -> bool:
        return all(x >= 0 for x in lam)

    def dominant_weights_below(self, lam: Weight) -> list[Weight]:
        """Dominant mu <= lam in the dominance order, highest first."""
        lam = tuple(lam)
        roots = [self.root_weight(a) for a in self.positive_roots]
        seen = {lam}
        stack = [lam]
        while stack:
            mu = stack.pop()
            for r in roots:
                nu = tuple(x - y for x, y in zip(mu, r))
                if nu not in seen and self.is_dominant(nu):
                    seen.add(nu)
                    stack.append(nu)
        return sorted(seen, key=lambda mu: (self._depth(lam, mu), mu))

    def _depth(self, lam: Weight, mu: Weight) -> Fraction:
        diff = tuple(x - y for x, y in zip(lam, mu))
        return sum(self.to_root_coords(diff), Fraction(0))

    def max_coroot_pairing(self, lam: Weight) -> Fraction:
        """max over positive alpha of <lam + rho, alpha^vee> (the lowest-alcove test value)."""
        lr = tuple(x + 1 for x in lam)
        return max(self.coroot_pairing(lr, a) for a in self.positive_roots)

    def is_minuscule(self, lam: Weight) -> bool:
        return all(self.coroot_pairing(lam, a) <= 1 for a in self.positive_roots)

    def graph_automorphisms(self) -> list[tuple[int, ...]]:
        """Non-trivial permutations of simple-root indices preserving the Dynkin diagram."""
        n = self.rank
        if self.kind == "A" and n >= 2:
            return [tuple(range(n - 1, -1, -1))]
        if self.kind == "D" and n >= 5:
            perm = list(range(n))
            perm[n - 2], perm[n - 1] = n - 1, n - 2
            return [tuple(perm)]
        if self.kind == "D" and n == 4:
            # alpha_2 is the central node; the others are permuted freely
            return [(2, 1, 0, 3), (3, 1, 2, 0), (0, 1, 3, 2), (2, 1, 3, 0), (3, 1, 0, 2)]
        if self.kind == "E" and n == 6:
            return [(5, 1, 4, 3, 2, 0)]
        return []


def _invert(C: list[list[int]]) -> list[list[Fraction]]:
    n = len(C)
    M = [[Fraction(C[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        f = M[col][col]
        M[col] = [x / f for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                g = M[r][col]
                M[r] = [x - g * y for x, y in zip(M[r], M[col])]
    return [row[n:] for row in M]


@lru_cache(maxsize=None)
def root_system(name: str) -> RootSystem:
    return RootSystem(name)


@lru_cache(maxsize=None)
def dominant_multiplicities(name: str, lam: Weight) -> dict[Weight, int]:
    """Freudenthal's recursion for the dominant weight multiplicities of W(lam)."""
    R = root_system(name)
    lam = tuple(lam)
    if len(lam) != R.rank or any(x < 0 for x in lam):
        raise ValueError(f"{lam} is not a dominant weight of {name}")
    order = R.dominant_weights_below(lam)
    roots = [R.root_weight(a) for a in R.positive_roots]
    lr = tuple(x + 1 for x in lam)
    top = R.inner(lr, lr)
    mult: dict[Weight, int] = {lam: 1}

    def m_of(mu: Weight) -> int:
        return mult.get(R.dominant_conjugate(mu), 0)

    for mu in order[1:]:
        mr = tuple(x + 1 for x in mu)
        denom = top - R.inner(mr, mr)
        total = Fraction(0)
        for r in roots:
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, r))
                m = m_of(nu)
                if m == 0:
                    break
                total += m * R.inner(nu, r)
                k += 1
        val = 2 * total / denom
        assert val.denominator == 1, (name, lam, mu, val)
        if val:
            mult[mu] = int(val)
    return mult


def expand_dominant(name: str, dom: dict[Weight, int]) -> Character:
    """Full character from multiplicities of dominant weights (Weyl orbit sums)."""
    R = root_system(name)
    terms: dict[Weight, int] = {}
    for mu, m in dom.items():
        for nu in R.orbit(mu):
            terms[nu] = terms.get(nu, 0) + m
    return Character(R.rank, terms)


@lru_cache(maxsize=None)
def weyl_character(name: str, lam: Weight) -> Character:
    return expand_dominant(name, dominant_multiplicities(name, tuple(lam)))


def restrict_to_dominant(name: str, c: Character) -> dict[Weight, int]:
    R = root_system(name)
    return {w: m for w, m in c.items() if R.is_dominant(w)}
