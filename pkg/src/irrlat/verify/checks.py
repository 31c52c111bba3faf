"""Catalog-wide checks: composition factors determine classes, type existence,
single maximal covers, and the Steinberg-type factorisation of simple subgroups."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Optional

from ..catalog import Catalog, ClassRef, classes_of_type, group_of, make_ref
from ..catalog.factors import Component, FactorList
from ..catalog.model import ClassRecord, GroupCatalog
from ..charalg import PROBES, char
from ..diagonal import enumerate_classes
from ..errors import ConditionViolated, IrrlatError, MissingData, Unresolved
from ..lattice import immediate_overgroups, overgroup_closure
from ..restrict import canonical_key, restrict_class
from ..restrict.core import expand, restrict_diagonal
from ..restrict.routes import factors_of
from ..twistlang import EmbeddingDescriptor, PositionSpec

MODULES = {"adjoint-determines": "adj", "min-determines": "min"}


@dataclass(frozen=True)
class Finding:
    check: str
    p: str
    refs: tuple[str, ...]
    verdict: str  # collision | potential collision (unresolved) | skipped | note

    def render(self) -> str:
        return f"{self.check}\t{self.p}\t{' '.join(self.refs)}\t{self.verdict}"


@dataclass
class CollisionReport:
    check: str
    group: str
    p: str
    compared: int = 0
    # each entry starts with the characteristic it was found at
    collisions: list[tuple[str, str, str]] = field(default_factory=list)
    unresolved: list[tuple[str, str, str]] = field(default_factory=list)
    skipped: list[tuple[str, str, str]] = field(default_factory=list)
    frobenius_notes: list[tuple[str, str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """No collisions; an unresolved tie is not a pass."""
        return not self.collisions and not self.unresolved

    def findings(self) -> list[Finding]:
        out = [Finding(self.check, q, (a, b), "collision") for q, a, b in self.collisions]
        out += [Finding(self.check, q, (a, b), "potential collision (unresolved)") for q, a, b in self.unresolved]
        out += [Finding(self.check, q, (r,), f"skipped: {why}") for q, r, why in self.skipped]
        out += [Finding(self.check, q, (a, b), "note: equal only after a Frobenius shift") for q, a, b in self.frobenius_notes]
        return out

    def summary(self) -> str:
        if self.ok:
            return f"OK ({len(self.collisions)} collisions)"
        n = len(self.collisions) + len(self.unresolved)
        return f"FAIL ({len(self.collisions)} collisions, {len(self.unresolved)} unresolved)" if n else "FAIL"

    def merge(self, other: "CollisionReport") -> "CollisionReport":
        return CollisionReport(
            self.check,
            self.group,
            "all" if self.p != other.p else self.p,
            self.compared + other.compared,
            self.collisions + other.collisions,
            self.unresolved + other.unresolved,
            self.skipped + other.skipped,
            self.frobenius_notes + other.frobenius_notes,
        )


def _symbolic_key(fl: FactorList) -> tuple:
    """Entries with flags kept, minimised over permutations of like factors."""
    kinds = [f.kind for f in fl.factors]
    order = sorted(kinds)
    forms = []
    for perm in permutations(range(len(kinds))):
        if any(kinds[perm[i]] != order[i] for i in range(len(kinds))):
            continue
        forms.append(tuple(sorted((tuple(e[j] for j in perm), m) for e, m in fl.entries)))
    return tuple(order), min(forms)


def _instances(g: GroupCatalog, rec: ClassRecord, p, bound: int) -> list[ClassRef]:
    if rec.family is None:
        return [rec.ref]
    return [ClassRef(g.name, rec.id, tw) for tw in enumerate_classes(rec, bound, p)]


def _determines(catalog: Catalog, group: str, p, module: str, check: str, bound: int) -> CollisionReport:
    g = group_of(catalog, group)
    pc = char(p)
    report = CollisionReport(check, group, str(pc))
    q = str(pc)
    resolved: dict[tuple, str] = {}
    plain: dict[tuple, str] = {}
    symbolic: dict[tuple, str] = {}
    for cid, rec in sorted(g.classes.items()):
        if cid == 0 or not rec.admits(pc):
            continue
        if rec.stub:
            report.skipped.append((q, rec.ref.label(), "family without a descriptor"))
            continue
        for ref in _instances(g, rec, pc, bound):
            name = ref.label()
            try:
                fl = restrict_class(catalog, group, ref, module, pc)
            except (MissingData, ConditionViolated) as exc:
                report.skipped.append((q, name, str(exc)))
                continue
            report.compared += 1
            shape = rec.abstract
            try:
                key = (shape, canonical_key(fl, pc, frobenius=True))
                flat = (shape, canonical_key(fl, pc, frobenius=False))
            except Unresolved:
                skey = (shape, _symbolic_key(fl))
                if skey in symbolic:
                    report.unresolved.append((q, symbolic[skey], name))
                else:
                    symbolic[skey] = name
                continue
            if key in resolved:
                report.collisions.append((q, resolved[key], name))
                if flat not in plain:
                    report.frobenius_notes.append((q, resolved[key], name))
            else:
                resolved[key] = name
            plain.setdefault(flat, name)
    return report


def _probes(p) -> list:
    if isinstance(p, str) and p.strip().lower() == "all":
        return list(PROBES)
    return [char(p)]


def check_determines(catalog: Catalog, group: str, p, check: str, bound: int = 2) -> CollisionReport:
    """Pairwise comparison of factor multisets for all classes of each abstract type.

    ``p`` may be ``"all"`` for every probe. Diagonal families contribute their
    instances with twists up to ``bound``.
    """
    if check not in MODULES:
        raise IrrlatError(f"unknown check {check!r}")
    reports = [_determines(catalog, group, q, MODULES[check], check, bound) for q in _probes(p)]
    out = reports[0]
    for r in reports[1:]:
        out = out.merge(r)
    return out


def check_adjoint_determines(catalog: Catalog, group: str, p, bound: int = 2) -> CollisionReport:
    return check_determines(catalog, group, p, "adjoint-determines", bound)


def check_min_determines(catalog: Catalog, group: str, p, bound: int = 2) -> CollisionReport:
    return check_determines(catalog, group, p, "min-determines", bound)


def _type_pattern(n: int, kind: str) -> str:
    return kind if n == 1 else f"{kind}^{n}"


def _exists(g: GroupCatalog, rec: ClassRecord, p) -> bool:
    if not rec.admits(p):
        return False
    if rec.family is None:
        return True
    return bool(enumerate_classes(rec, 1, p))


def check_type_existence(catalog: Catalog, group: str, n: int, kind: str, p) -> tuple[bool, Optional[ClassRef]]:
    """Whether an irreducible subgroup of type kind^n exists at ``p``, with the
    highest-numbered class as witness."""
    if kind not in ("A1", "A2"):
        raise IrrlatError(f"type must be A1 or A2, not {kind!r}")
    g = group_of(catalog, group)
    hits = [r for r in classes_of_type(catalog, group, _type_pattern(n, kind), p) if _exists(g, r, p)]
    if not hits:
        return False, None
    return True, max(hits, key=lambda r: r.id).ref


def _a1_power(rec: ClassRecord, kind: str) -> bool:
    return bool(rec.factors) and all(f.kind == kind for f in rec.factors)


def _maximal(catalog: Catalog, g: GroupCatalog, p) -> list[ClassRef]:
    out = []
    for cid, rec in sorted(g.classes.items()):
        if cid == 0 or not rec.admits(p) or rec.is_family:
            continue
        if immediate_overgroups(catalog, g.name, rec.ref, p) == [ClassRef(g.name, 0)]:
            out.append(rec.ref)
    return out


def cover_members(catalog: Catalog, group: str, p, kind: str = "A1") -> list[ClassRef]:
    """Classes of type kind^n admitted at ``p``: non-family classes, bare
    families, and family instances named in the overgroup tables."""
    g = group_of(catalog, group)
    pc = char(p)
    refs: list[ClassRef] = []
    for cid, rec in sorted(g.classes.items()):
        if cid == 0 or not _a1_power(rec, kind) or not _exists(g, rec, pc):
            continue
        refs.append(rec.ref)
    for e in g.edges:
        ref = e.child
        if ref.is_instance and ref not in refs and g.admits(ref, pc) and _a1_power(g.classes[ref.id], kind):
            refs.append(ref)
    return refs


def check_single_maximal_cover(catalog: Catalog, group: str, p, kind: str = "A1") -> Optional[ClassRef]:
    """The lowest-numbered maximal class containing every kind^n class, or None
    (also when no such class exists at ``p``)."""
    g = group_of(catalog, group)
    pc = char(p)
    members = cover_members(catalog, group, pc, kind)
    if not members:
        return None
    closures = [set(overgroup_closure(catalog, group, m, pc)) for m in members]
    for m in _maximal(catalog, g, pc):
        if all(m in c for c in closures):
            return m
    return None


@dataclass(frozen=True)
class SteinbergComponent:
    """One factor E_i: the positions of the diagonal that carry one twist."""

    kind: str
    positions: tuple[int, ...]
    twist: int
    weights: tuple[tuple[int, ...], ...]  # high weights of E_i on L(G), ascending

    def label(self) -> str:
        pos = ",".join(str(i + 1) for i in self.positions)
        return f"{self.kind}[{pos}]^[{self.twist}]"


def _restricted(kind: str, w: tuple[int, ...], p) -> bool:
    if p.is_zero:
        return True
    if kind == "A1":
        return w[0] <= 2 * p.p - 2
    return all(x <= p.p - 1 for x in w)


def _split_by_twist(desc: EmbeddingDescriptor, tw: tuple[int, ...]):
    """A descriptor whose blocks are the (diagonal factor, twist) classes, untwisted."""
    keys: list[tuple] = []
    members: dict[tuple, list[int]] = {}
    for key, ix in desc.groups():
        for i in ix:
            k = (key, tw[i])
            if k not in members:
                keys.append(k)
                members[k] = []
            members[k].append(i)
    letters = {k: chr(ord("a") + n) for n, k in enumerate(keys)}
    pos = []
    for i, spec in enumerate(desc.positions):
        k = next(k for k in keys if i in members[k])
        pos.append(PositionSpec(spec.weight_label, letters[k]))
    return EmbeddingDescriptor(tuple(pos)), [(k, tuple(members[k])) for k in keys]


def steinberg_product(catalog: Catalog, group: str, ref, p) -> list[tuple[SteinbergComponent, bool]]:
    """Components E_1...E_k of a simple subgroup and whether each is restricted on L(G).

    A diagonal subgroup splits into one component per distinct twist; a
    non-diagonal simple subgroup is its own single component.
    """
    g = group_of(catalog, group)
    pc = char(p)
    ref = make_ref(catalog, group, ref)
    rec = g.classes[ref.id]
    if len(rec.factors) != 1:
        raise IrrlatError(f"{group} {ref.label()} is not simple")
    if not g.admits(ref, pc):
        raise ConditionViolated(f"{group} {ref.label()} does not exist at p={pc}")
    if rec.embed is None:
        fl = expand(restrict_class(catalog, group, ref, "adj", pc), pc)
        kind = rec.factors[0].kind
        ws = tuple(sorted({e[0].weight for e, _ in fl.entries if not e[0].twist}))
        if any(e[0].twist for e, _ in fl.entries):
            raise Unresolved(f"twisted factor in the table for {ref.label()}")
        comp = SteinbergComponent(kind, (), 0, ws)
        return [(comp, all(_restricted(kind, w, pc) for w in ws))]
    if rec.family is not None and ref.twists is None:
        raise IrrlatError(f"{group} {ref.label()}: give the twists of the instance")
    env = dict(zip(rec.embed.twist_variables, ref.twists or ()))
    tw = rec.embed.twists(env)
    split, keys = _split_by_twist(rec.embed, tw)
    base = factors_of(catalog, group, ClassRef(group, rec.parent_at(pc)), "adj", pc)
    fl = expand(restrict_diagonal(base, split, (), pc, check=False), pc)
    out = []
    for col, ((_, t), ix) in enumerate(keys):
        kind = split.positions[ix[0]].factor_type
        ws = tuple(sorted({e[col].weight for e, _ in fl.entries}))
        out.append((SteinbergComponent(kind, ix, t, ws), all(_restricted(kind, w, pc) for w in ws)))
    return out


def satisfies_steinberg(components: Iterable[tuple[SteinbergComponent, bool]]) -> bool:
    comps = list(components)
    twists = [c.twist for c, _ in comps]
    return all(ok for _, ok in comps) and len(set(twists)) == len(twists)


def varstein_flagged(catalog: Catalog, group: str, probes: Iterable = None, bound: int = 3) -> list[tuple[ClassRef, str]]:
    """(class, p) pairs where some simple class or instance fails the factorisation.

    A family is flagged at ``p`` once, under its bare reference, if any instance
    with twists up to ``bound`` fails.
    """
    g = group_of(catalog, group)
    probes = [q for q in (probes or PROBES) if not char(q).is_zero]
    out = []
    for q in probes:
        pc = char(q)
        for cid, rec in sorted(g.classes.items()):
            if cid == 0 or len(rec.factors) != 1 or not rec.admits(pc) or rec.stub:
                continue
            refs = _instances(g, rec, pc, bound)
            if any(not satisfies_steinberg(steinberg_product(catalog, group, r, pc)) for r in refs):
                out.append((rec.ref, str(pc)))
    return out
