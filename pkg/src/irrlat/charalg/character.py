"""Formal characters: sparse maps from torus weights to multiplicities."""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator, Mapping, Union

from ..errors import RankMismatch, TwistInCharZero
from .characteristic import Characteristic, char

Weight = tuple[int, ...]


class Character:
    """Immutable formal character over a torus of rank ``rank``.

    Multiplicities are integers; a genuine module character has all of them
    positive, but intermediate virtual characters (differences used while
    peeling) may carry negative entries. Zero entries are never stored.
    """

    __slots__ = ("rank", "_terms", "_hash")

    def __init__(self, rank: int, terms: Union[Mapping[Weight, int], Iterable[tuple[Weight, int]]] = ()):
        if rank < 1:
            raise ValueError("lattice rank must be positive")
        acc: dict[Weight, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, m in items:
            w = tuple(int(x) for x in w)
            if len(w) != rank:
                raise RankMismatch(f"weight {w} does not have rank {rank}")
            acc[w] = acc.get(w, 0) + int(m)
        self.rank = rank
        self._terms = {w: m for w, m in acc.items() if m != 0}
        self._hash: Union[int, None] = None

    @classmethod
    def a1(cls, terms: Mapping[int, int]) -> "Character":
        """Rank-one shorthand: ``Character.a1({2: 1, 0: 1, -2: 1})``."""
        return cls(1, {(d,): m for d, m in terms.items()})

    @classmethod
    def trivial(cls, rank: int = 1) -> "Character":
        return cls(rank, {(0,) * rank: 1})

    @classmethod
    def zero(cls, rank: int = 1) -> "Character":
        return cls(rank, {})

    @property
    def terms(self) -> dict[Weight, int]:
        return dict(self._terms)

    def __getitem__(self, w: Union[Weight, int]) -> int:
        if isinstance(w, int):
            w = (w,)
        return self._terms.get(tuple(w), 0)

    def __iter__(self) -> Iterator[Weight]:
        return iter(sorted(self._terms))

    def __len__(self) -> int:
        return len(self._terms)

    def items(self) -> list[tuple[Weight, int]]:
        return sorted(self._terms.items())

    def dim(self) -> int:
        return sum(self._terms.values())

    def is_zero(self) -> bool:
        return not self._terms

    def is_effective(self) -> bool:
        return all(m > 0 for m in self._terms.values())

    def is_symmetric(self) -> bool:
        """Invariance under negation (the A1 Weyl group; for A2 it is duality)."""
        return all(self._terms.get(tuple(-x for x in w), 0) == m for w, m in self._terms.items())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Character):
            return NotImplemented
        return self.rank == other.rank and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.rank, frozenset(self._terms.items())))
        return self._hash

    def _check(self, other: "Character") -> None:
        if self.rank != other.rank:
            raise RankMismatch(f"rank {self.rank} vs {other.rank}")

    def __add__(self, other: "Character") -> "Character":
        self._check(other)
        acc = Counter(self._terms)
        acc.update(other._terms)
        return Character(self.rank, acc)

    def __sub__(self, other: "Character") -> "Character":
        self._check(other)
        acc = Counter(self._terms)
        acc.subtract(other._terms)
        return Character(self.rank, acc)

    def scale(self, k: int) -> "Character":
        return Character(self.rank, {w: k * m for w, m in self._terms.items()})

    def __mul__(self, other: "Character") -> "Character":
        return tensor(self, other)

    def map_weights(self, f, rank: int) -> "Character":
        """Push forward along a weight map ``f`` into a lattice of rank ``rank``."""
        acc: dict[Weight, int] = {}
        for w, m in self._terms.items():
            v = tuple(f(w))
            acc[v] = acc.get(v, 0) + m
        return Character(rank, acc)

    def dual(self) -> "Character":
        return Character(self.rank, {tuple(-x for x in w): m for w, m in self._terms.items()})

    def highest(self) -> Weight:
        """Lexicographically greatest weight carried (used by the A1 peel)."""
        return max(self._terms)

    def __repr__(self) -> str:
        if self.rank == 1:
            body = ", ".join(f"{w[0]}:{m}" for w, m in sorted(self._terms.items(), reverse=True))
        else:
            body = ", ".join(f"{w}:{m}" for w, m in sorted(self._terms.items(), reverse=True))
        return f"Character({{{body}}})"


def tensor(c1: Character, c2: Character) -> Character:
    """Convolution of characters."""
    if c1.rank != c2.rank:
        raise RankMismatch(f"rank {c1.rank} vs {c2.rank}")
    acc: dict[Weight, int] = {}
    for w1, m1 in c1._terms.items():
        for w2, m2 in c2._terms.items():
            w = tuple(a + b for a, b in zip(w1, w2))
            acc[w] = acc.get(w, 0) + m1 * m2
    return Character(c1.rank, acc)


def outer(c1: Character, c2: Character) -> Character:
    """External tensor product: weights concatenate, ranks add."""
    acc: dict[Weight, int] = {}
    for w1, m1 in c1._terms.items():
        for w2, m2 in c2._terms.items():
            w = w1 + w2
            acc[w] = acc.get(w, 0) + m1 * m2
    return Character(c1.rank + c2.rank, acc)


def twist(c: Character, r: int, p: Union[Characteristic, int, str]) -> Character:
    """Frobenius twist: scale every weight by p**r."""
    p = char(p)
    if r < 0:
        raise ValueError("twist exponent must be non-negative")
    if r == 0:
        return c
    if p.is_zero:
        raise TwistInCharZero(f"cannot apply a Frobenius twist of {r} in characteristic zero")
    k = p.p ** r
    return Character(c.rank, {tuple(k * x for x in w): m for w, m in c._terms.items()})
