"""Composition factors of subgroups, computed from a parent's factor list.

Characters are pushed down exactly and then re-peeled into irreducibles of
the subgroup, so every result is characteristic-specific while the inputs
(Weyl characters, twisted characters) never re-derive Steinberg digits.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Optional, Sequence

from ..catalog.factors import Component, FactorEntry, FactorList, component_char
from ..catalog.types import SimpleFactor
from ..charalg import Character, char, decompose, irr_char, outer, tensor, twist
from ..charalg.modular import supported
from ..charalg.rootsys import root_system
from ..errors import ConditionViolated, NotACharacter, Unresolved
from ..twistlang import EmbeddingDescriptor, eval_condition

Weight = tuple[int, ...]


def _dual_weight(w: Weight) -> Weight:
    return tuple(reversed(w))


def _orientation(label: str) -> bool:
    """False for the natural label (``1``, ``10``, ``100``), True for its dual."""
    if label == "1" or (label.isdigit() and label[0] == "1" and set(label[1:]) <= {"0"}):
        return False
    if label.isdigit() and label[-1] == "1" and set(label[:-1]) <= {"0"}:
        return True
    raise Unresolved(f"position label {label!r} is neither the natural module nor its dual")


def _kind_ok(name: str) -> None:
    if not supported(name):
        raise Unresolved(f"no character data for type {name}")


def decompose_product(factors: Sequence[SimpleFactor], c: Character, p) -> Counter:
    """Composition factors (as weight tuples per factor) of a character of a product group."""
    p = char(p)
    ranks = [f.rank for f in factors]
    if sum(ranks) != c.rank:
        raise NotACharacter(f"rank {c.rank} character for factors of total rank {sum(ranks)}")
    if len(factors) == 1:
        return Counter({(w,): m for w, m in decompose(factors[0].kind, c, p).items()})
    for f in factors:
        _kind_ok(f.kind)
    systems = [root_system(f.kind) for f in factors]
    cuts = [sum(ranks[:i]) for i in range(len(ranks) + 1)]

    def split(w):
        return tuple(tuple(w[cuts[i] : cuts[i + 1]]) for i in range(len(ranks)))

    def height(w) -> Fraction:
        return sum((sum(R.to_root_coords(x), Fraction(0)) for R, x in zip(systems, split(w))), Fraction(0))

    rest = dict(c.terms)
    out: Counter = Counter()
    while rest:
        if any(m < 0 for m in rest.values()):
            raise NotACharacter("negative multiplicity while peeling")
        top = max(rest, key=lambda w: (height(w), w))
        parts = split(top)
        if not all(R.is_dominant(x) for R, x in zip(systems, parts)):
            raise NotACharacter(f"highest remaining weight {top} is not dominant")
        m = rest[top]
        out[parts] += m
        ch = None
        for f, x in zip(factors, parts):
            piece = irr_char(f.kind, x, p)
            ch = piece if ch is None else outer(ch, piece)
        for w, k in ch.items():
            v = rest.get(w, 0) - m * k
            if v:
                rest[w] = v
            else:
                rest.pop(w, None)
    return out


def _from_weights(factors: Sequence[SimpleFactor], counts: Counter) -> FactorList:
    acc: Counter = Counter()
    for parts, m in counts.items():
        acc[tuple(Component(tuple(x)) for x in parts)] += m
    return FactorList.from_counter(tuple(factors), acc)


def expand_component(c: Component, f: SimpleFactor, p) -> Counter:
    """Irreducible weights of one flagged component (twist kept as a weight scale)."""
    p = char(p)
    if c.kind == "L":
        return Counter({c: 1})
    _kind_ok(f.kind)
    try:
        parts = decompose(f.kind, component_char(Component(c.weight, c.kind), f, p), p)
    except NotACharacter as exc:
        raise Unresolved(f"cannot expand {c.render(f)} at p={p}: {exc}") from exc
    return Counter({Component(w, "L", c.twist): m for w, m in parts.items()})


def expand_entry(e: FactorEntry, factors: Sequence[SimpleFactor], p) -> Counter:
    """W(..) and T(..) components replaced by their composition factors at ``p``."""
    per = [expand_component(c, f, p) for c, f in zip(e, factors)]
    out: Counter = Counter()
    for combo in product(*(list(x.items()) for x in per)):
        mult = 1
        for _, m in combo:
            mult *= m
        out[tuple(c for c, _ in combo)] += mult
    return out


def expand(fl: FactorList, p) -> FactorList:
    """The same module with every flagged entry expanded into irreducibles."""
    acc: Counter = Counter()
    for e, m in fl.entries:
        for x, k in expand_entry(e, fl.factors, p).items():
            acc[x] += m * k
    return FactorList.from_counter(fl.factors, acc)


def weights_of(fl: FactorList, p) -> Counter:
    """Expanded entries as plain weight tuples, for multiset comparisons.

    A twisted irreducible L(w)^[r] is recorded as L(p^r w).
    """
    p = char(p)
    out: Counter = Counter()
    for e, m in expand(fl, p).entries:
        key = tuple(tuple(x * (1 if p.is_zero else p.p**c.twist) for x in c.weight) for c in e)
        out[key] += m
    return out


def block_factors(desc: EmbeddingDescriptor) -> tuple[SimpleFactor, ...]:
    return tuple(SimpleFactor(desc.positions[ix[0]].factor_type) for _, ix in desc.groups())


def restrict_diagonal(
    parent: FactorList, embed: EmbeddingDescriptor, twists: Iterable[int] = (), p=None, check: bool = True
) -> FactorList:
    """Restrict along a diagonal embedding with the given twists (in variable order).

    A block made of a single untwisted natural position passes its component
    through unchanged, flags included; other blocks are computed.
    """
    p = char(p)
    env = dict(zip(embed.twist_variables, twists))
    if len(env) != len(embed.twist_variables):
        raise ConditionViolated(f"need values for {', '.join(embed.twist_variables)}")
    if len(embed.positions) != len(parent.factors):
        raise ConditionViolated(
            f"embedding has {len(embed.positions)} positions, parent has {len(parent.factors)} factors"
        )
    if check:
        penv = dict(env, p=str(p))
        if not eval_condition(embed.condition, penv):
            raise ConditionViolated(f"twists {env} fail {embed.condition.render()}")
    tw = embed.twists(env)
    blocks = [ix for _, ix in embed.groups()]
    out_factors = block_factors(embed)
    for i, f in zip(range(len(embed.positions)), parent.factors):
        if embed.positions[i].factor_type != f.kind:
            raise ConditionViolated(f"position {i + 1} expects {embed.positions[i].factor_type}, parent has {f.kind}")
    acc: Counter = Counter()
    for e, m in parent.entries:
        per_block = []
        for ix, bf in zip(blocks, out_factors):
            if len(ix) == 1 and tw[ix[0]] == 0:
                c = e[ix[0]]
                if _orientation(embed.positions[ix[0]].weight_label):
                    c = Component(_dual_weight(c.weight), c.kind, c.twist)
                if c.kind != "L" and bf.kind == "A1":
                    per_block.append(expand_component(c, bf, p))
                else:
                    per_block.append(Counter({c: 1}))
                continue
            ch = None
            for i in ix:
                piece = component_char(e[i], parent.factors[i], p)
                if _orientation(embed.positions[i].weight_label):
                    piece = piece.dual()
                if tw[i]:
                    piece = twist(piece, tw[i], p)
                ch = piece if ch is None else tensor(ch, piece)
            _kind_ok(bf.kind)
            try:
                parts = decompose(bf.kind, ch, p)
            except NotACharacter as exc:
                raise Unresolved(f"cannot decompose block {ix} at p={p}: {exc}") from exc
            per_block.append(Counter({Component(w): k for w, k in parts.items()}))
        for combo in product(*(list(x.items()) for x in per_block)):
            mult = m
            for _, k in combo:
                mult *= k
            acc[tuple(c for c, _ in combo)] += mult
    return FactorList.from_counter(out_factors, acc)


@dataclass(frozen=True)
class WeightMap:
    """A linear map from the weight lattice of one simple factor to that of a product."""

    source: SimpleFactor
    targets: tuple[SimpleFactor, ...]
    images: tuple[Weight, ...]  # image of each fundamental weight

    def __call__(self, w: Weight) -> Weight:
        out = [0] * sum(t.rank for t in self.targets)
        for coeff, img in zip(w, self.images):
            for j, x in enumerate(img):
                out[j] += coeff * x
        return tuple(out)

    @classmethod
    def identity(cls, f: SimpleFactor) -> "WeightMap":
        n = f.rank
        return cls(f, (f,), tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))


def _solve_basis(basis: list[Weight]) -> Optional[list[list[Fraction]]]:
    """Inverse of the square matrix with rows ``basis`` (None if singular)."""
    n = len(basis)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(basis)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                k = a[r][col]
                a[r] = [x - k * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def fit_weight_map(
    source: SimpleFactor, natural: Character, targets: tuple[SimpleFactor, ...], image: Character
) -> WeightMap:
    """A linear map carrying the weights of ``natural`` onto those of ``image`` (with multiplicity).

    Fits are unique up to the Weyl group of the source, which does not change
    restrictions of Weyl-invariant characters.
    """
    if natural.dim() != image.dim():
        raise Unresolved(f"cannot fit a {natural.dim()}-dim module onto a {image.dim()}-dim one")
    n = source.rank
    weights = sorted(natural.terms, reverse=True)
    basis = None
    for cand in _independent_sets(weights, n):
        inv = _solve_basis(list(cand))
        if inv is not None:
            basis = (cand, inv)
            break
    if basis is None:
        raise Unresolved(f"weights of the natural {source.kind} module do not span")
    cand, inv = basis
    want = Counter(dict(image.terms))
    targets_w = sorted(image.terms, reverse=True)
    for imgs in product(targets_w, repeat=n):
        # images of the fundamental weights: inv (rows) times chosen images
        fund = []
        ok = True
        for i in range(n):
            row = [sum(inv[i][k] * imgs[k][j] for k in range(n)) for j in range(len(imgs[0]))]
            if any(x.denominator != 1 for x in row):
                ok = False
                break
            fund.append(tuple(int(x) for x in row))
        if not ok:
            continue
        wm = WeightMap(source, targets, tuple(fund))
        got: Counter = Counter()
        for w, m in natural.items():
            got[wm(w)] += m
        if got == want:
            return wm
    raise Unresolved(f"no linear map sends the natural {source.kind} module onto the given character")


def _independent_sets(weights: list[Weight], n: int):
    yield from combinations(weights, n)


def restrict_weight_map(parent: FactorList, maps: Sequence[WeightMap], p) -> FactorList:
    """Push each entry's character through per-factor weight maps and decompose."""
    p = char(p)
    if len(maps) != len(parent.factors):
        raise ConditionViolated(f"{len(maps)} maps for {len(parent.factors)} parent factors")
    targets = tuple(t for mp in maps for t in mp.targets)
    acc: Counter = Counter()
    for e, m in parent.entries:
        ch = None
        for c, f, mp in zip(e, parent.factors, maps):
            piece = component_char(c, f, p)
            piece = piece.map_weights(mp, sum(t.rank for t in mp.targets))
            ch = piece if ch is None else outer(ch, piece)
        try:
            parts = decompose_product(targets, ch, p)
        except NotACharacter as exc:
            raise Unresolved(f"cannot decompose at p={p}: {exc}") from exc
        for w, k in parts.items():
            acc[tuple(Component(x) for x in w)] += m * k
    return FactorList.from_counter(targets, acc)
