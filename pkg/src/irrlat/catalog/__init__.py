"""The catalog of irreducible A1-type subgroups and their overgroups."""

from __future__ import annotations

from functools import lru_cache
from typing import Optional

from ..charalg.characteristic import char
from ..errors import ConditionViolated, UnknownId
from .charcond import ALL, CharCondition
from .factors import FactorList
from .loader import load_catalog, parse_text
from .model import (
    GROUPS,
    Catalog,
    ClassRecord,
    ClassRef,
    DiagonalFamily,
    GroupCatalog,
    Instance,
    OutAction,
    OvergroupEdge,
    Route,
    expand_twists,
    split_ref,
)
from .types import abstract_key, parse_pattern, parse_type, render_type


@lru_cache(maxsize=1)
def default_catalog() -> Catalog:
    """The bundled catalog, loaded and validated once."""
    return load_catalog()


def group_of(catalog: Catalog, group: str) -> GroupCatalog:
    if group not in catalog:
        raise UnknownId(f"no group {group!r} in the catalog (have {', '.join(catalog.groups)})")
    return catalog[group]


def parse_twists(text: Optional[str], family: DiagonalFamily) -> tuple[int, ...]:
    """``r=1,s=0`` (named), ``1,0`` (positional), ``d1`` or ``0*``."""
    if text is None or not text.strip():
        raise UnknownId(f"family #{family.family_id} needs twists for {','.join(family.variables)}")
    if "=" not in text:
        return expand_twists(text, family.arity)
    env = {}
    for part in text.split(","):
        k, _, v = part.partition("=")
        k, v = k.strip(), v.strip()
        if k not in family.variables:
            raise UnknownId(f"family #{family.family_id} has no twist {k!r} (twists: {','.join(family.variables)})")
        if not v.isdigit():
            raise UnknownId(f"twist {k} must be a non-negative integer, got {v!r}")
        env[k] = int(v)
    missing = [x for x in family.variables if x not in env]
    if missing:
        raise UnknownId(f"family #{family.family_id} needs twists for {','.join(missing)}")
    return tuple(env[x] for x in family.variables)


def lookup(catalog: Catalog, group: str, cid: int, twists=None, p=None):
    """A class record, or an :class:`Instance` when ``twists`` is given.

    With ``p`` the class (and instance conditions) must hold there, else
    :class:`ConditionViolated`.
    """
    g = group_of(catalog, group)
    rec = g.classes.get(int(cid))
    if rec is None:
        raise UnknownId(f"{group} has no class #{cid}")
    if p is not None:
        p = char(p)
        if not rec.admits(p):
            raise ConditionViolated(f"{group} #{cid} requires {rec.char_cond.label()}, not p={p}")
    if twists is None:
        return rec
    if rec.family is None:
        raise UnknownId(f"{group} #{cid} is not a diagonal family with a shipped descriptor")
    if isinstance(twists, str):
        twists = parse_twists(twists, rec.family)
    inst = Instance(rec, tuple(int(t) for t in twists))
    if len(inst.twists) != rec.family.arity:
        raise UnknownId(f"{group} #{cid} takes {rec.family.arity} twists, got {len(inst.twists)}")
    if p is not None and not rec.family.admits(inst.twists, p):
        raise ConditionViolated(f"{inst} fails its twist condition at p={p}")
    return inst


def classes_of_type(catalog: Catalog, group: str, pattern: str, p=None) -> list[ClassRecord]:
    """Classes whose abstract type is ``pattern`` (e.g. ``A1^2``), optionally admitted at ``p``."""
    want = parse_pattern(pattern)
    g = group_of(catalog, group)
    return [
        rec
        for cid, rec in sorted(g.classes.items())
        if rec.abstract == want and (p is None or rec.admits(char(p)))
    ]


__all__ = [
    "ALL",
    "GROUPS",
    "Catalog",
    "CharCondition",
    "ClassRecord",
    "ClassRef",
    "DiagonalFamily",
    "FactorList",
    "GroupCatalog",
    "Instance",
    "OutAction",
    "OvergroupEdge",
    "Route",
    "classes_of_type",
    "default_catalog",
    "group_of",
    "load_catalog",
    "lookup",
    "make_ref",
    "parse_text",
    "parse_twists",
    "parse_type",
    "render_type",
    "split_ref",
]


def make_ref(catalog: Catalog, group: str, text, twists=None) -> ClassRef:
    """A :class:`ClassRef` from ``"1^{1,0}"``, ``"#2"``, ``"34^{0*}"`` or an int id plus twists."""
    if isinstance(text, ClassRef):
        return text
    g = group_of(catalog, group)
    if isinstance(text, int):
        cid, spec = text, None
    else:
        cid, _, spec = split_ref(str(text))
    rec = g.classes.get(cid)
    if rec is None:
        raise UnknownId(f"{group} has no class #{cid}")
    if twists is not None and spec is None:
        spec = twists if isinstance(twists, str) else ",".join(map(str, twists))
    if spec is None:
        return ClassRef(group, cid)
    if rec.stub:
        return ClassRef(group, cid, symbolic=spec)
    if rec.family is None:
        raise UnknownId(f"{group} #{cid} is not a family; it takes no twists")
    return ClassRef(group, cid, parse_twists(spec, rec.family))
