"""Reader for the line-oriented ``.isl`` catalog format.

Each non-blank line is a record: a keyword followed by ``key=value`` fields,
values double-quoted when they contain spaces; ``#`` starts a comment. A
file starts with a ``group`` record naming the group every later record
belongs to. Keywords:

    group     NAME rank= minimal= adjoint=
    class     id= type= [p=] [in=] [embed=] [vm=] [from=] [action=]
    variant   id=<n><a|b> p= [in=] [vm=]
    family    id= [type=] in= embed= [p=] [rows=]      (or stub=yes, no embed)
    route     id=<ref> in= [p=] [vm=] [from=] [embed=]
    edge      child=<ref> parent=<ref> [p=]
    factors   id= [min=] [adj=]
    levi      type= min= adj=
    rowtable  name= govern="0,r,s | v,w"
    row       table= eq= then=
    action    name= gen=... [gen=...]
"""

from __future__ import annotations

import shlex
from collections import defaultdict
from dataclasses import replace
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional, Union

from ..charalg.characteristic import PROBES
from ..errors import (
    AmbiguousRows,
    DanglingReference,
    DimensionMismatch,
    DuplicateId,
    IrrlatError,
    ParseError,
    TwistSyntaxError,
    Unresolved,
)
from ..twistlang import RowTable, make_row, parse_embedding, parse_groups
from .charcond import ALL, CharCondition
from .factors import FactorList
from .model import (
    Catalog,
    ClassRecord,
    ClassRef,
    DiagonalFamily,
    GroupCatalog,
    LeviRecord,
    OutAction,
    OvergroupEdge,
    Route,
    Variant,
    expand_twists,
    parse_generator,
    split_ref,
)
from .types import SimpleFactor, parse_type

_FIELDS = {
    "group": ({"rank", "minimal", "adjoint"}, {"rank", "minimal", "adjoint"}),
    "class": ({"id", "type"}, {"id", "type", "p", "in", "embed", "vm", "from", "action"}),
    "variant": ({"id", "p"}, {"id", "p", "in", "vm"}),
    "family": ({"id"}, {"id", "type", "in", "embed", "p", "rows", "stub"}),
    "route": ({"id", "in"}, {"id", "in", "p", "vm", "from", "embed"}),
    "edge": ({"child", "parent"}, {"child", "parent", "p"}),
    "factors": ({"id"}, {"id", "min", "adj"}),
    "levi": ({"type", "min", "adj"}, {"type", "min", "adj"}),
    "rowtable": ({"name", "govern"}, {"name", "govern"}),
    "row": ({"table", "eq", "then"}, {"table", "eq", "then"}),
    "action": ({"name", "gen"}, {"name", "gen"}),
}


class _Line:
    def __init__(self, source: str, lineno: int, keyword: str, fields: dict, positional: list):
        self.source, self.lineno, self.keyword = source, lineno, keyword
        self.fields, self.positional = fields, positional

    def where(self) -> str:
        return f"{self.source}:{self.lineno}"

    def get(self, key: str, default=None):
        v = self.fields.get(key, default)
        return v[-1] if isinstance(v, list) else v

    def all(self, key: str) -> list[str]:
        v = self.fields.get(key, [])
        return v if isinstance(v, list) else [v]

    def int(self, key: str) -> int:
        v = self.get(key)
        if v is None or not str(v).isdigit():
            raise ParseError(f"{self.where()}: field {key}= must be a non-negative integer, got {v!r}")
        return int(v)


def _tokenize(text: str, source: str) -> list[_Line]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        lex = shlex.shlex(raw, posix=True)
        lex.whitespace_split = True
        lex.commenters = "#"
        try:
            toks = list(lex)
        except ValueError as exc:
            raise ParseError(f"{source}:{lineno}: {exc}") from None
        if not toks:
            continue
        kw, fields, positional = toks[0], {}, []
        if kw not in _FIELDS:
            raise ParseError(f"{source}:{lineno}: unknown record keyword {kw!r}")
        for tok in toks[1:]:
            if "=" not in tok:
                positional.append(tok)
                continue
            k, v = tok.split("=", 1)
            if k in fields:
                if k != "gen":
                    raise ParseError(f"{source}:{lineno}: field {k}= given twice")
                fields[k].append(v)
            else:
                fields[k] = [v] if k == "gen" else v
        required, allowed = _FIELDS[kw]
        missing = required - set(fields)
        extra = set(fields) - allowed
        if missing:
            raise ParseError(f"{source}:{lineno}: {kw} record lacks {sorted(missing)}")
        if extra:
            raise ParseError(f"{source}:{lineno}: {kw} record has unknown fields {sorted(extra)}")
        if positional and kw != "group":
            raise ParseError(f"{source}:{lineno}: stray token {positional[0]!r}")
        out.append(_Line(source, lineno, kw, fields, positional))
    return out


def _cond(line: _Line) -> CharCondition:
    try:
        return CharCondition.parse(line.get("p", "all"))
    except ParseError as exc:
        raise ParseError(f"{line.where()}: {exc}") from None


def _embed(line: _Line, key: str = "embed"):
    text = line.get(key)
    if text is None:
        return None
    try:
        return parse_embedding(text)
    except TwistSyntaxError as exc:
        raise ParseError(f"{line.where()}: {exc}") from exc


def _type(line: _Line) -> tuple[SimpleFactor, ...]:
    try:
        return parse_type(line.get("type"))
    except ParseError as exc:
        raise ParseError(f"{line.where()}: {exc}") from None


def _family_type(desc) -> tuple[SimpleFactor, ...]:
    return tuple(SimpleFactor(desc.positions[idx[0]].factor_type) for _, idx in desc.groups())


class _Builder:
    """Collects one group's records, then resolves references and validates."""

    def __init__(self, name: str, rank: int, minimal: int, adjoint: int, source: str):
        self.g = GroupCatalog(name, rank, minimal, adjoint, sources=[source])
        self.records: dict[int, dict] = {}
        self.lines: dict[int, _Line] = {}
        self.variants: dict[int, list[Variant]] = defaultdict(list)
        self.factor_lines: dict[int, _Line] = {}
        self.pending_rows: list[_Line] = []
        self.edge_lines: list[_Line] = []
        self.route_lines: list[_Line] = []
        self.levi_lines: list[_Line] = []

    def add(self, line: _Line) -> None:
        kw = line.keyword
        if kw in ("class", "family"):
            cid = line.int("id")
            if cid in self.records:
                raise DuplicateId(f"{line.where()}: {self.g.name} #{cid} defined twice (first at {self.lines[cid].where()})")
            self.records[cid] = {"kind": kw}
            self.lines[cid] = line
        elif kw == "variant":
            cid, tag, tw = split_ref(line.get("id"))
            if not tag or tw:
                raise ParseError(f"{line.where()}: variant id must look like 8a or 8b")
            parent = line.int("in") if "in" in line.fields else None
            self.variants[cid].append(Variant(tag, _cond(line), parent, line.get("vm")))
        elif kw == "factors":
            cid = line.int("id")
            if cid in self.factor_lines:
                raise DuplicateId(f"{line.where()}: factors for #{cid} given twice")
            self.factor_lines[cid] = line
        elif kw == "rowtable":
            name = line.get("name")
            if name in self.g.row_tables:
                raise DuplicateId(f"{line.where()}: row table {name} defined twice")
            self.g.row_tables[name] = RowTable(name, parse_groups(line.get("govern")), ())
        elif kw == "row":
            self.pending_rows.append(line)
        elif kw == "action":
            name = line.get("name")
            if name in self.g.actions:
                raise DuplicateId(f"{line.where()}: action {name} defined twice")
            self.g.actions[name] = line  # resolved once degrees are known
        elif kw == "edge":
            self.edge_lines.append(line)
        elif kw == "route":
            self.route_lines.append(line)
        elif kw == "levi":
            self.levi_lines.append(line)
        elif kw == "group":
            raise ParseError(f"{line.where()}: second group record in one file")

    # resolution

    def _row_tables(self) -> None:
        rows = defaultdict(list)
        for line in self.pending_rows:
            name = line.get("table")
            if name not in self.g.row_tables:
                raise DanglingReference(f"{line.where()}: row for unknown table {name}")
            try:
                rows[name].append(make_row(line.get("eq"), line.get("then")))
            except TwistSyntaxError as exc:
                raise ParseError(f"{line.where()}: {exc}") from exc
        for name, t in list(self.g.row_tables.items()):
            table = RowTable(name, t.groups, tuple(rows[name]))
            try:
                table.validate()
            except (AmbiguousRows, TwistSyntaxError) as exc:
                raise ParseError(f"row table {name}: {exc}") from exc
            self.g.row_tables[name] = table

    def _action(self, name: str, degree: int, where: str) -> OutAction:
        entry = self.g.actions.get(name)
        if entry is None:
            raise DanglingReference(f"{where}: unknown action {name}")
        if isinstance(entry, OutAction):
            if entry.degree != degree:
                raise ParseError(f"{where}: action {name} has degree {entry.degree}, parent has {degree} factors")
            return entry
        gens = tuple(parse_generator(t, degree) for t in entry.all("gen"))
        act = OutAction(name, degree, gens)
        self.g.actions[name] = act
        return act

    def _ref(self, text: str, line: _Line) -> ClassRef:
        try:
            cid, tag, tw = split_ref(text)
        except ParseError as exc:
            raise ParseError(f"{line.where()}: {exc}") from None
        rec = self.g.classes.get(cid)
        if rec is None:
            raise DanglingReference(f"{line.where()}: {self.g.name} #{cid} is not defined")
        if tag and tag not in {v.tag for v in rec.variants}:
            raise DanglingReference(f"{line.where()}: {self.g.name} #{cid}{tag} is not a defined variant")
        if tw is None:
            return ClassRef(self.g.name, cid)
        if rec.stub:
            return ClassRef(self.g.name, cid, symbolic=tw)
        if rec.family is None:
            raise ParseError(f"{line.where()}: #{cid} is not a family, so {text!r} has no meaning")
        try:
            twists = expand_twists(tw, rec.family.arity)
        except ParseError as exc:
            raise ParseError(f"{line.where()}: {exc}") from None
        return ClassRef(self.g.name, cid, twists)

    def build(self, check_dims: bool = True) -> GroupCatalog:
        self._row_tables()
        g = self.g
        # first pass: records without cross references resolved
        for cid, line in self.lines.items():
            kind = self.records[cid]["kind"]
            embed = _embed(line)
            stub = line.get("stub") == "yes"
            if kind == "family" and embed is None and not stub:
                raise ParseError(f"{line.where()}: family #{cid} needs embed= (or stub=yes)")
            if kind == "family" and embed is not None and not embed.twist_variables:
                raise ParseError(f"{line.where()}: family #{cid} has no twist variables; use a class record")
            if kind == "class" and embed is not None and embed.twist_variables:
                raise ParseError(f"{line.where()}: class #{cid} has twist variables; use a family record")
            if "type" in line.fields:
                factors = _type(line)
            elif embed is not None:
                factors = _family_type(embed)
            else:
                raise ParseError(f"{line.where()}: #{cid} needs type=")
            parent = line.int("in") if "in" in line.fields else None
            if kind == "family" and parent is None and not stub:
                raise ParseError(f"{line.where()}: family #{cid} needs in=")
            cond = _cond(line)
            g.classes[cid] = ClassRecord(
                group=g.name,
                id=cid,
                type_label=line.get("type") or " ".join(f.kind for f in factors),
                factors=factors,
                char_cond=cond,
                declared_cond=cond,
                parent=parent,
                embed=embed,
                vm=line.get("vm"),
                vm_from=line.int("from") if "from" in line.fields else None,
                stub=stub,
                action=line.get("action"),
            )
        for cid, vs in self.variants.items():
            if cid not in g.classes:
                raise DanglingReference(f"variant of undefined {g.name} #{cid}")
            tags = [v.tag for v in vs]
            if len(set(tags)) != len(tags):
                raise DuplicateId(f"{g.name} #{cid} repeats a variant tag")
            g.classes[cid] = replace(g.classes[cid], variants=tuple(sorted(vs, key=lambda v: v.tag)))
        # parents, families and effective characteristic conditions
        for cid in sorted(g.classes):
            rec = g.classes[cid]
            line = self.lines[cid]
            parents = [rec.parent] + [v.parent for v in rec.variants]
            for par in parents:
                if par is not None and par not in g.classes:
                    raise DanglingReference(f"{line.where()}: {g.name} #{cid} refers to undefined parent #{par}")
            if rec.vm_from is not None and rec.vm_from not in g.classes:
                raise DanglingReference(f"{line.where()}: from=#{rec.vm_from} is not defined")
            if rec.embed is not None:
                self._check_positions(rec, line)
            if rec.family is None and rec.embed is not None and rec.embed.twist_variables:
                fam = self._family(rec, line)
                g.classes[cid] = replace(rec, family=fam)
        for cid in sorted(g.classes):
            g.classes[cid] = replace(g.classes[cid], char_cond=self._effective(cid, set()))
        for rec in g.classes.values():
            if rec.action is not None:
                self._action(rec.action, len(rec.factors), self.lines[rec.id].where())
        for name, entry in list(g.actions.items()):
            if not isinstance(entry, OutAction):
                raise ParseError(f"{entry.where()}: action {name} is not used by any class")
        self._factors(check_dims)
        for line in self.edge_lines:
            child, parent = self._ref(line.get("child"), line), self._ref(line.get("parent"), line)
            if child == parent:
                raise ParseError(f"{line.where()}: self-edge on {child.label()}")
            g.edges.append(OvergroupEdge(child, parent, _cond(line)))
        for line in self.route_lines:
            ref = self._ref(line.get("id"), line)
            par = line.int("in")
            if par not in g.classes:
                raise DanglingReference(f"{line.where()}: route into undefined #{par}")
            frm = line.int("from") if "from" in line.fields else None
            if frm is not None and frm not in g.classes:
                raise DanglingReference(f"{line.where()}: from=#{frm} is not defined")
            emb = _embed(line)
            if emb is not None and len(emb.positions) != len(g.classes[par].factors):
                raise ParseError(f"{line.where()}: embedding has {len(emb.positions)} positions, #{par} has {len(g.classes[par].factors)} factors")
            g.routes.append(Route(ref, par, _cond(line), line.get("vm"), frm, emb))
        for line in self.levi_lines:
            factors = _type(line)
            mins = self._factor_list(line.get("min"), factors, line)
            adjs = self._factor_list(line.get("adj"), factors, line)
            levi = LeviRecord(g.name, line.get("type"), factors, mins, adjs)
            if check_dims:
                self._check_dim(mins, g.minimal_dim, ALL, f"{line.where()}: Levi {levi.type_label} minimal")
                self._check_dim(adjs, g.adjoint_dim, ALL, f"{line.where()}: Levi {levi.type_label} adjoint")
            g.levis.append(levi)
        if 0 not in g.classes:
            raise DanglingReference(f"{g.name}: no record for the group itself (#0)")
        return g

    def _effective(self, cid: int, seen: set) -> CharCondition:
        if cid in seen:
            raise ParseError(f"{self.g.name}: containment cycle through #{cid}")
        rec = self.g.classes[cid]
        cond = rec.declared_cond
        if rec.parent is not None and not rec.variants:
            cond = cond.conj(self._effective(rec.parent, seen | {cid}))
        return cond

    def _check_positions(self, rec: ClassRecord, line: _Line) -> None:
        par = self.g.classes[rec.parent] if rec.parent is not None else None
        if par is None:
            raise ParseError(f"{line.where()}: #{rec.id} has an embedding but no parent")
        if len(rec.embed.positions) != len(par.factors):
            raise ParseError(
                f"{line.where()}: descriptor of #{rec.id} has {len(rec.embed.positions)} positions, "
                f"parent #{par.id} has {len(par.factors)} simple factors"
            )
        for pos, f in zip(rec.embed.positions, par.factors):
            if pos.factor_type != f.kind:
                raise ParseError(f"{line.where()}: position {pos.render()} does not fit a factor of type {f.kind}")

    def _family(self, rec: ClassRecord, line: _Line) -> DiagonalFamily:
        rows = line.get("rows")
        table = None
        if rows is not None:
            table = self.g.row_tables.get(rows)
            if table is None:
                raise DanglingReference(f"{line.where()}: unknown row table {rows}")
            stray = set(table.governed) - set(rec.embed.twist_variables) - {"0"}
            if stray:
                raise ParseError(f"{line.where()}: row table {rows} governs {sorted(stray)}, which #{rec.id} lacks")
        par = self.g.classes[rec.parent]
        action = None
        if par.action is not None:
            action = self._action(par.action, len(par.factors), line.where())
        return DiagonalFamily(rec.id, self.g.name, rec.parent, rec.embed, table, action)

    def _factor_list(self, text: Optional[str], factors, line: _Line) -> Optional[FactorList]:
        if text is None:
            return None
        try:
            return FactorList.parse(text, factors)
        except ParseError as exc:
            raise ParseError(f"{line.where()}: {exc}") from None

    def _check_dim(self, fl: FactorList, want: int, cond: CharCondition, what: str) -> None:
        for p in PROBES:
            if not cond.admits(p):
                continue
            try:
                got = fl.dim(p)
            except Unresolved as exc:
                raise DimensionMismatch(f"{what} at p={p}: {exc}") from exc
            if got != want:
                raise DimensionMismatch(f"{what} at p={p}: dimension {got}, expected {want}")

    def _factors(self, check_dims: bool) -> None:
        g = self.g
        for cid, line in self.factor_lines.items():
            rec = g.classes.get(cid)
            if rec is None:
                raise DanglingReference(f"{line.where()}: factors for undefined #{cid}")
            mins = self._factor_list(line.get("min"), rec.factors, line)
            adjs = self._factor_list(line.get("adj"), rec.factors, line)
            if check_dims:
                if mins is not None:
                    self._check_dim(mins, g.minimal_dim, rec.char_cond, f"{line.where()}: #{cid} minimal module")
                if adjs is not None:
                    self._check_dim(adjs, g.adjoint_dim, rec.char_cond, f"{line.where()}: #{cid} adjoint module")
            g.classes[cid] = replace(rec, minimal_factors=mins, adjoint_factors=adjs)


def parse_text(text: str, source: str = "<string>", check_dims: bool = True) -> GroupCatalog:
    lines = _tokenize(text, source)
    if not lines or lines[0].keyword != "group":
        raise ParseError(f"{source}: the first record must be 'group'")
    head = lines[0]
    if len(head.positional) != 1:
        raise ParseError(f"{head.where()}: group record needs exactly one name")
    b = _Builder(head.positional[0], head.int("rank"), head.int("minimal"), head.int("adjoint"), source)
    for line in lines[1:]:
        b.add(line)
    return b.build(check_dims)


def load_catalog(paths: Optional[Iterable[Union[str, Path]]] = None, check_dims: bool = True) -> Catalog:
    """Load ``.isl`` files (default: every bundled file). A directory means all its ``.isl`` files."""
    cat = Catalog()
    sources: list[tuple[str, str]] = []
    if paths is None:
        for entry in sorted(resources.files("irrlat.data").iterdir(), key=lambda e: e.name):
            if entry.name.endswith(".isl"):
                sources.append((entry.name, entry.read_text(encoding="utf-8")))
    else:
        for p in paths:
            p = Path(p)
            files = sorted(p.glob("*.isl")) if p.is_dir() else [p]
            for f in files:
                try:
                    sources.append((str(f), f.read_text(encoding="utf-8")))
                except OSError as exc:
                    raise ParseError(f"cannot read {f}: {exc}") from None
    for name, text in sources:
        g = parse_text(text, name, check_dims)
        if g.name in cat.groups:
            raise DuplicateId(f"group {g.name} defined in {cat.groups[g.name].sources[0]} and {name}")
        cat.groups[g.name] = g
    return cat


__all__ = ["IrrlatError", "load_catalog", "parse_text"]
