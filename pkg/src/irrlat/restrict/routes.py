"""Catalog-driven restriction: every way the catalog lets us compute a class's factors."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from itertools import permutations, product
from typing import Optional

from ..catalog import Catalog, ClassRef, group_of, make_ref
from ..catalog.factors import FactorList, _split_top
from ..catalog.types import SimpleFactor
from ..charalg import char, weyl_char
from ..errors import ConditionViolated, IrrlatError, MissingData, Unresolved
from .core import WeightMap, fit_weight_map, restrict_diagonal, restrict_weight_map, weights_of

_G2REF = re.compile(r"G2#(\d+)(?:\^\{([^}]*)\})?$")


@dataclass(frozen=True)
class RouteResult:
    via: str
    factors: FactorList


def shipped(catalog: Catalog, group: str, ref: ClassRef, module: str) -> Optional[FactorList]:
    if ref.is_instance:
        return None
    rec = group_of(catalog, group).classes[ref.id]
    return rec.factor_list(module)


def factors_of(catalog: Catalog, group: str, ref, module: str, p) -> FactorList:
    """Shipped factors when present, else the first computable route."""
    ref = make_ref(catalog, group, ref)
    got = shipped(catalog, group, ref, module)
    if got is not None:
        return got
    errors = []
    for res in _derived(catalog, group, ref, module, p, errors):
        return res.factors
    detail = "; ".join(errors) if errors else "no route"
    raise MissingData(f"{group} {ref.label()}: no {module} factors ({detail})")


def _vm_maps(catalog: Catalog, vm: str, source: tuple[SimpleFactor, ...], p) -> list[WeightMap]:
    body = vm.strip()
    toks = [body]
    if len(source) > 1:
        if not (body.startswith("(") and body.endswith(")")):
            raise Unresolved(f"weight map {vm!r} does not list one image per factor")
        toks = [t.strip() for t in _split_top(body[1:-1], ",")]
    if len(toks) != len(source):
        raise Unresolved(f"weight map {vm!r} has {len(toks)} images for {len(source)} factors")
    return [_one_map(catalog, t, f, p) for t, f in zip(toks, source)]


def _one_map(catalog: Catalog, tok: str, f: SimpleFactor, p) -> WeightMap:
    m = _G2REF.match(tok)
    if m:
        if f.kind != "G2":
            raise Unresolved(f"{tok} names a G2 subgroup but the factor is {f.kind}")
        cid = int(m.group(1))
        if cid == 0 and not m.group(2):
            return WeightMap.identity(f)
        ref = make_ref(catalog, "G2", cid, m.group(2))
        image = factors_of(catalog, "G2", ref, "min", p)
        return fit_weight_map(f, weyl_char("G2", (1, 0)), image.factors, image.character(p))
    if f.kind.startswith("A") and tok.isdigit():
        n = f.rank
        if n > 1 and len(tok) == n:
            target = SimpleFactor(f.kind)
            return fit_weight_map(f, weyl_char(f.kind, (1,) + (0,) * (n - 1)), (target,), weyl_char(f.kind, tuple(int(c) for c in tok)))
        if n == 1 and tok == "1":
            return WeightMap.identity(f)
        if n > 1:
            a1 = SimpleFactor("A1")
            return fit_weight_map(f, weyl_char(f.kind, (1,) + (0,) * (n - 1)), (a1,), weyl_char("A1", (int(tok),)))
    raise Unresolved(f"weight map {tok!r} on a {f.kind} factor is kept as text, not computed")


def via_vm(catalog: Catalog, group: str, source: int, vm: str, module: str, p) -> FactorList:
    g = group_of(catalog, group)
    src = g.classes[source]
    base = factors_of(catalog, group, src.ref, module, p)
    return restrict_weight_map(base, _vm_maps(catalog, vm, src.factors, p), p)


def via_embed(catalog: Catalog, group: str, parent: int, embed, twists, module: str, p) -> FactorList:
    base = factors_of(catalog, group, ClassRef(group, parent), module, p)
    return restrict_diagonal(base, embed, twists, p)


def _derived(catalog: Catalog, group: str, ref: ClassRef, module: str, p, errors: list):
    """Routes other than the shipped row, in a fixed order."""
    g = group_of(catalog, group)
    p = char(p)
    rec = g.classes[ref.id]
    attempts = []
    if rec.embed is not None and rec.parent is not None:
        if rec.family is None or ref.twists is not None:
            tw = ref.twists or ()
            attempts.append((f"#{rec.parent} via {rec.embed.render()}", lambda: via_embed(catalog, group, rec.parent, rec.embed, tw, module, p)))
    elif not ref.is_instance:
        v = rec.variant_at(p)
        parent = v.parent if v and v.parent is not None else rec.parent
        vm = v.vm if v and v.vm else rec.vm
        source = rec.vm_from if rec.vm_from is not None else parent
        if vm and source is not None:
            attempts.append((f"#{source} via {vm}", lambda vm=vm, source=source: via_vm(catalog, group, source, vm, module, p)))
    for route in g.routes:
        if route.ref != ref or not route.char_cond.admits(p):
            continue
        if route.embed is not None:
            attempts.append(
                (f"#{route.parent} via {route.embed.render()}", lambda r=route: via_embed(catalog, group, r.parent, r.embed, (), module, p))
            )
        elif route.vm:
            source = route.vm_from if route.vm_from is not None else route.parent
            attempts.append((f"#{source} via {route.vm}", lambda r=route, s=source: via_vm(catalog, group, s, r.vm, module, p)))
    for label, fn in attempts:
        try:
            yield RouteResult(label, fn())
        except (Unresolved, MissingData, ConditionViolated) as exc:
            errors.append(f"{label}: {exc}")


def all_routes(catalog: Catalog, group: str, ref, module: str, p) -> tuple[list[RouteResult], list[str]]:
    """Every computable route (shipped row first), plus the reasons others were skipped."""
    ref = make_ref(catalog, group, ref)
    if not group_of(catalog, group).admits(ref, p):
        raise ConditionViolated(f"{group} {ref.label()} does not exist at p={char(p)}")
    errors: list[str] = []
    out = []
    own = shipped(catalog, group, ref, module)
    if own is not None:
        out.append(RouteResult("table", own))
    out.extend(_derived(catalog, group, ref, module, p, errors))
    return out, errors


def restrict_class(catalog: Catalog, group: str, ref, module: str, p, via: Optional[str] = None) -> FactorList:
    """Composition factors of a class or instance on the minimal or adjoint module."""
    if module not in ("min", "adj"):
        raise IrrlatError(f"module must be min or adj, not {module!r}")
    results, errors = all_routes(catalog, group, ref, module, p)
    if via is not None:
        results = [r for r in results if r.via.startswith(via)]
    if not results:
        raise MissingData(f"{group} {make_ref(catalog, group, ref).label()}: no {module} factors ({'; '.join(errors) or 'no route'})")
    return results[0].factors


def _graph_autos(f: SimpleFactor):
    if f.kind.startswith("A") and f.rank > 1:
        return (False, True)
    return (False,)


def canonical_weights(fl: FactorList, p, frobenius: bool = False, dual: bool = True) -> frozenset:
    """All relabelings of the expanded multiset under permutations of like factors,
    per-factor graph automorphisms and (optionally) a global Frobenius untwist."""
    p = char(p)
    base = weights_of(fl, p)
    if frobenius and not p.is_zero:
        while base and all(x % p.p == 0 for key in base for w in key for x in w) and any(
            x for key in base for w in key for x in w
        ):
            base = Counter({tuple(tuple(x // p.p for x in w) for w in key): m for key, m in base.items()})
    kinds = [f.kind for f in fl.factors]
    n = len(kinds)
    order = sorted(kinds)
    variants = set()
    for perm in permutations(range(n)):
        # column i of the image is factor perm[i] of ``fl``; columns follow the sorted kinds
        if any(kinds[perm[i]] != order[i] for i in range(n)):
            continue
        autos = [_graph_autos(fl.factors[j]) if dual else (False,) for j in perm]
        for flips in product(*autos):
            img: Counter = Counter()
            for key, m in base.items():
                moved = tuple(tuple(reversed(key[perm[i]])) if flips[i] else key[perm[i]] for i in range(n))
                img[moved] += m
            variants.add(frozenset(img.items()))
    return frozenset(variants)


def same_factors(a: FactorList, b: FactorList, p, frobenius: bool = False, dual: bool = True) -> bool:
    """Equal up to relabeling the subgroup's factors (and optional Frobenius untwist)."""
    if sorted(f.kind for f in a.factors) != sorted(f.kind for f in b.factors):
        return False
    return bool(canonical_weights(a, p, frobenius, dual) & canonical_weights(b, p, frobenius, dual))


def canonical_key(fl: FactorList, p, frobenius: bool = True) -> tuple:
    """A hashable invariant: equal keys iff :func:`same_factors` holds."""
    kinds = tuple(sorted(f.kind for f in fl.factors))
    forms = canonical_weights(fl, p, frobenius)
    return kinds, min(tuple(sorted(v)) for v in forms)
