"""Catalog records: classes, diagonal families, edges, routes and actions."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Mapping, Optional, Union

from ..charalg.characteristic import Characteristic, char
from ..errors import ParseError, UnboundVariable
from ..twistlang import EmbeddingDescriptor, RowTable, eval_condition, eval_row_table
from .charcond import ALL, CharCondition
from .factors import FactorList
from .types import SimpleFactor, abstract_key, render_type

GROUPS = ("G2", "F4", "E6", "E7", "E8")

_REF = re.compile(r"#?(\d+)([ab]?)(?:\^\{([^}]*)\})?$")


@dataclass(frozen=True, order=True)
class ClassRef:
    """A class, or one instance of a diagonal family.

    ``twists`` is set for instances of families with a shipped descriptor;
    ``symbolic`` keeps the written form (``0*``, ``d1``) for stub families
    whose twist count is unknown.
    """

    group: str
    id: int
    twists: Optional[tuple[int, ...]] = None
    symbolic: Optional[str] = None

    @property
    def is_instance(self) -> bool:
        return self.twists is not None or self.symbolic is not None

    def key(self) -> str:
        if self.twists is not None:
            return f"{self.id}^{{{','.join(map(str, self.twists))}}}"
        if self.symbolic is not None:
            return f"{self.id}^{{{self.symbolic}}}"
        return str(self.id)

    def label(self) -> str:
        return "#" + self.key()

    def node_id(self) -> str:
        """DOT identifier: ``G2_4`` or ``G2_1__1_0``."""
        base = f"{self.group}_{self.id}"
        if self.twists is not None:
            return base + "__" + "_".join(map(str, self.twists))
        if self.symbolic is not None:
            return base + "__" + re.sub(r"\W", "x", self.symbolic)
        return base

    def base(self) -> "ClassRef":
        return ClassRef(self.group, self.id)

    def __str__(self) -> str:
        return f"{self.group}{self.label()}"


def split_ref(text: str) -> tuple[int, str, Optional[str]]:
    """``"1^{1,0}"`` -> (1, "", "1,0"); ``"8a"`` -> (8, "a", None)."""
    m = _REF.match(text.strip())
    if not m:
        raise ParseError(f"bad class reference {text!r}")
    return int(m.group(1)), m.group(2), m.group(3)


def expand_twists(spec: str, arity: int) -> tuple[int, ...]:
    """Instance twist notation: ``1,0`` explicit, ``d2`` second twist 1, ``0*`` all zero."""
    spec = spec.strip()
    if spec == "0*":
        return (0,) * arity
    m = re.fullmatch(r"d(\d+)", spec)
    if m:
        j = int(m.group(1))
        if not 1 <= j <= arity:
            raise ParseError(f"twist notation {spec!r} needs at least {j} twists, family has {arity}")
        return tuple(1 if i == j - 1 else 0 for i in range(arity))
    try:
        vals = tuple(int(x) for x in spec.split(","))
    except ValueError:
        raise ParseError(f"bad twist notation {spec!r}") from None
    if len(vals) != arity:
        raise ParseError(f"twist tuple {spec!r} has {len(vals)} entries, family has {arity}")
    if any(v < 0 for v in vals):
        raise ParseError(f"negative twist in {spec!r}")
    return vals


@dataclass(frozen=True)
class Generator:
    """A permutation of positions (0-based images) and positions whose A2 label is dualised."""

    perm: tuple[int, ...]
    dual: frozenset[int] = frozenset()

    def render(self) -> str:
        seen, cycles = set(), []
        for i in range(len(self.perm)):
            if i in seen or self.perm[i] == i:
                continue
            cyc, j = [], i
            while j not in seen:
                seen.add(j)
                cyc.append(j + 1)
                j = self.perm[j]
            cycles.append("(" + ",".join(map(str, cyc)) + ")")
        out = "".join(cycles)
        if self.dual:
            out += (" " if out else "") + "~" + ",".join(str(i + 1) for i in sorted(self.dual))
        return out


def parse_generator(text: str, degree: int) -> Generator:
    perm = list(range(degree))
    body, _, dual = text.partition("~")
    for cyc in re.findall(r"\(([^)]*)\)", body):
        pts = [int(x) - 1 for x in cyc.split(",")]
        if any(not 0 <= x < degree for x in pts) or len(set(pts)) != len(pts):
            raise ParseError(f"bad cycle ({cyc}) for {degree} positions")
        for i, x in enumerate(pts):
            perm[x] = pts[(i + 1) % len(pts)]
    if re.sub(r"\([^)]*\)", "", body).strip():
        raise ParseError(f"bad generator {text!r}")
    dset = frozenset(int(x) - 1 for x in dual.split(",") if x.strip()) if dual.strip() else frozenset()
    if any(not 0 <= x < degree for x in dset):
        raise ParseError(f"bad dual positions in {text!r}")
    return Generator(tuple(perm), dset)


@dataclass(frozen=True)
class OutAction:
    """Outer automorphisms permuting the simple factors of a parent.

    An element maps position ``i`` to ``perm[i]`` and swaps ``10 <-> 01`` on
    the positions in ``dual`` (before moving them).
    """

    name: str
    degree: int
    generators: tuple[Generator, ...] = ()

    @cached_property
    def elements(self) -> tuple[Generator, ...]:
        ident = Generator(tuple(range(self.degree)))
        seen = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for g in frontier:
                for h in self.generators:
                    c = compose(h, g)
                    if c not in seen:
                        seen.add(c)
                        nxt.append(c)
            frontier = nxt
        return tuple(sorted(seen, key=lambda g: (g.perm, sorted(g.dual))))

    @property
    def order(self) -> int:
        return len(self.elements)

    @classmethod
    def trivial(cls, degree: int) -> "OutAction":
        return cls("trivial", degree, ())


def compose(h: Generator, g: Generator) -> Generator:
    """``h`` after ``g``."""
    perm = tuple(h.perm[g.perm[i]] for i in range(len(g.perm)))
    # dual flags ride along with positions: g flips g.dual, moves i -> g(i), then h flips h.dual at g(i)
    dual = frozenset(i for i in range(len(g.perm)) if (i in g.dual) != (g.perm[i] in h.dual))
    return Generator(perm, dual)


@dataclass(frozen=True)
class DiagonalFamily:
    family_id: int
    group: str
    parent_class: int
    descriptor: EmbeddingDescriptor
    row_table: Optional[RowTable] = None
    out_action: Optional[OutAction] = None

    @property
    def variables(self) -> tuple[str, ...]:
        return self.descriptor.twist_variables

    @property
    def arity(self) -> int:
        return len(self.variables)

    def env(self, twists: Union[tuple[int, ...], Mapping[str, int]], p=None) -> dict:
        if isinstance(twists, Mapping):
            env = {k: int(v) for k, v in twists.items()}
            missing = set(self.variables) - set(env)
            if missing:
                raise UnboundVariable(f"family #{self.family_id} needs values for {sorted(missing)}")
        else:
            env = dict(zip(self.variables, twists))
        env["p"] = "inf" if p is None else str(char(p))
        return env

    def admits(self, twists, p=None) -> bool:
        """Descriptor condition and (when present) the row table, at characteristic ``p``.

        At an explicit p=inf only untwisted instances exist.
        """
        env = self.env(twists, p)
        if p is not None and char(p).is_zero and any(env[v] for v in self.variables):
            return False
        if not eval_condition(self.descriptor.condition, env):
            return False
        return self.row_table is None or eval_row_table(self.row_table, env)

    def head_admits(self, twists, p=None) -> bool:
        return eval_condition(self.descriptor.condition, self.env(twists, p))

    def mentions_p(self) -> bool:
        from ..twistlang import variables

        return "p" in variables(self.descriptor.condition)

    def tuples(self, bound: int):
        return product(range(bound + 1), repeat=self.arity)


@dataclass(frozen=True)
class Variant:
    tag: str
    char_cond: CharCondition
    parent: Optional[int] = None
    vm: Optional[str] = None


@dataclass(frozen=True)
class ClassRecord:
    group: str
    id: int
    type_label: str
    factors: tuple[SimpleFactor, ...]
    char_cond: CharCondition = ALL
    declared_cond: CharCondition = ALL
    parent: Optional[int] = None
    embed: Optional[EmbeddingDescriptor] = None
    vm: Optional[str] = None
    vm_from: Optional[int] = None
    minimal_factors: Optional[FactorList] = None
    adjoint_factors: Optional[FactorList] = None
    variants: tuple[Variant, ...] = ()
    family: Optional[DiagonalFamily] = None
    stub: bool = False
    action: Optional[str] = None

    @property
    def ref(self) -> ClassRef:
        return ClassRef(self.group, self.id)

    @property
    def is_family(self) -> bool:
        return self.family is not None or self.stub

    @property
    def is_diagonal(self) -> bool:
        return self.embed is not None

    @property
    def abstract(self) -> tuple[tuple[str, int], ...]:
        return abstract_key(self.factors)

    @property
    def long_root_flags(self) -> tuple[str, ...]:
        return tuple(f.mark for f in self.factors)

    def admits(self, p) -> bool:
        return self.char_cond.admits(p)

    def variant_at(self, p) -> Optional[Variant]:
        for v in self.variants:
            if v.char_cond.admits(p):
                return v
        return None

    def parent_at(self, p) -> Optional[int]:
        v = self.variant_at(p)
        return v.parent if v is not None and v.parent is not None else self.parent

    def factor_list(self, module: str) -> Optional[FactorList]:
        return self.minimal_factors if module == "min" else self.adjoint_factors

    def describe(self) -> str:
        return render_type(self.factors)


@dataclass(frozen=True)
class Instance:
    """A family record with concrete twists."""

    record: ClassRecord
    twists: tuple[int, ...]

    @property
    def family(self) -> DiagonalFamily:
        assert self.record.family is not None
        return self.record.family

    @property
    def ref(self) -> ClassRef:
        return ClassRef(self.record.group, self.record.id, self.twists)

    @property
    def env(self) -> dict[str, int]:
        return dict(zip(self.family.variables, self.twists))

    def admits(self, p) -> bool:
        return self.record.admits(p) and self.family.admits(self.twists, p)

    def __str__(self) -> str:
        return str(self.ref)


@dataclass(frozen=True)
class OvergroupEdge:
    child: ClassRef
    parent: ClassRef
    char_cond: CharCondition = ALL


@dataclass(frozen=True)
class Route:
    """A class listed again (in italics) inside another overgroup."""

    ref: ClassRef
    parent: int
    char_cond: CharCondition = ALL
    vm: Optional[str] = None
    vm_from: Optional[int] = None
    embed: Optional[EmbeddingDescriptor] = None


@dataclass(frozen=True)
class LeviRecord:
    group: str
    type_label: str
    factors: tuple[SimpleFactor, ...]
    minimal_factors: FactorList
    adjoint_factors: FactorList


@dataclass
class GroupCatalog:
    name: str
    rank: int
    minimal_dim: int
    adjoint_dim: int
    classes: dict[int, ClassRecord] = field(default_factory=dict)
    edges: list[OvergroupEdge] = field(default_factory=list)
    routes: list[Route] = field(default_factory=list)
    row_tables: dict[str, RowTable] = field(default_factory=dict)
    actions: dict[str, OutAction] = field(default_factory=dict)
    levis: list[LeviRecord] = field(default_factory=list)
    sources: list[str] = field(default_factory=list)

    @property
    def families(self) -> dict[int, DiagonalFamily]:
        return {i: r.family for i, r in self.classes.items() if r.family is not None}

    def module_dim(self, module: str) -> int:
        return self.minimal_dim if module == "min" else self.adjoint_dim

    def admits(self, ref: "ClassRef", p) -> bool:
        """Whether the class (or family instance) ``ref`` exists at ``p``."""
        rec = self.classes.get(ref.id)
        if rec is None or not rec.admits(p):
            return False
        if ref.twists is not None and rec.family is not None:
            return rec.family.admits(ref.twists, p)
        return True


@dataclass
class Catalog:
    groups: dict[str, GroupCatalog] = field(default_factory=dict)

    def __getitem__(self, name: str) -> GroupCatalog:
        return self.groups[name]

    def __contains__(self, name: str) -> bool:
        return name in self.groups
