"""Immediate-overgroup queries, closures and DOT export."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional, TextIO

from ..catalog import Catalog, ClassRef, group_of, make_ref
from ..catalog.model import GroupCatalog
from ..charalg import char
from ..errors import ConditionViolated, UnknownId
from .unify import minimal_overgroups, place, within_parent


def _ref(catalog: Catalog, group: str, ref) -> ClassRef:
    return make_ref(catalog, group, ref)


def admitted(g: GroupCatalog, ref: ClassRef, p) -> bool:
    return g.admits(ref, p)


def aux_parents(g: GroupCatalog, ref: ClassRef, p) -> list[ClassRef]:
    """Overgroups listed explicitly for ``ref`` and valid at ``p``."""
    return [e.parent for e in g.edges if e.child == ref and e.char_cond.admits(p) and admitted(g, e.parent, p)]


def unified_parents(g: GroupCatalog, ref: ClassRef, p) -> list[ClassRef]:
    """Immediate overgroups of a diagonal instance inside its parent class."""
    rec = g.classes[ref.id]
    parent = rec.parent_at(p)
    if rec.family is None or ref.twists is None or parent is None:
        return []
    x = place(ref, rec.embed, ref.twists)
    prec = g.classes[parent]
    action = rec.family.out_action
    hits = within_parent(g, x, parent, action, p)
    found = minimal_overgroups(hits)
    return found or [prec.ref]


def immediate_overgroups(catalog: Catalog, group: str, ref, p) -> list[ClassRef]:
    """Aux-listed overgroups when the class or instance is listed; otherwise derived.

    A family instance that is not listed gets its overgroups inside the
    parent by unification; a bare family (no twists) points at its parent.
    """
    g = group_of(catalog, group)
    ref = _ref(catalog, group, ref)
    p = char(p)
    rec = g.classes.get(ref.id)
    if rec is None:
        raise UnknownId(f"{group} has no class #{ref.id}")
    if not admitted(g, ref, p):
        raise ConditionViolated(f"{ref} does not exist at p={p}")
    if ref.id == 0 and not ref.is_instance:
        return []
    listed = aux_parents(g, ref, p)
    if listed:
        return listed
    if ref.twists is not None:
        return unified_parents(g, ref, p)
    parent = rec.parent_at(p)
    if parent is not None:
        return [ClassRef(group, parent)]
    return [ClassRef(group, 0)] if 0 in g.classes else []


def overgroup_closure(catalog: Catalog, group: str, ref, p) -> list[ClassRef]:
    """Reflexive-transitive closure in breadth-first order (``ref`` first)."""
    start = _ref(catalog, group, ref)
    seen = [start]
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nxt in immediate_overgroups(catalog, group, cur, p):
            if nxt not in seen:
                seen.append(nxt)
                queue.append(nxt)
    return seen


def _generic_parents(g: GroupCatalog, fam_id: int, p) -> list[ClassRef]:
    parent = g.classes[fam_id].parent_at(p)
    return [ClassRef(g.name, parent)] if parent is not None else []


def lattice_nodes(catalog: Catalog, group: str, p) -> list[ClassRef]:
    """Nodes drawn at ``p``, ascending by id.

    Classes and families admitted at ``p``; a listed family instance gets
    its own node when its overgroups differ from the family's generic ones
    or when it is itself a listed overgroup.
    """
    g = group_of(catalog, group)
    p = char(p)
    nodes: list[ClassRef] = []
    parents_named = {e.parent for e in g.edges if e.char_cond.admits(p)}
    for cid, rec in sorted(g.classes.items()):
        if not rec.admits(p):
            continue
        if not rec.stub:
            nodes.append(rec.ref)
        inst = sorted(
            {e.child for e in g.edges if e.child.id == cid and e.child.is_instance}
            | {r for r in parents_named if r.id == cid and r.is_instance},
            key=_order,
        )
        for ref in inst:
            if not admitted(g, ref, p):
                continue
            if ref in parents_named or rec.stub:
                nodes.append(ref)
                continue
            ups = aux_parents(g, ref, p)
            if ups and set(ups) != set(_generic_parents(g, cid, p)):
                nodes.append(ref)
    return nodes


def _order(ref: ClassRef):
    return (ref.id, ref.is_instance, ref.twists or (), ref.symbolic or "")


def lattice_edges(catalog: Catalog, group: str, p) -> list[tuple[ClassRef, ClassRef]]:
    nodes = lattice_nodes(catalog, group, p)
    present = set(nodes)
    out = []
    for n in nodes:
        for up in immediate_overgroups(catalog, group, n, p):
            if up in present:
                out.append((n, up))
    return out


def node_label(g: GroupCatalog, ref: ClassRef) -> str:
    rec = g.classes[ref.id]
    cond = rec.declared_cond
    tail = f" [{cond.label()}]" if not cond.is_all else ""
    return f"{rec.describe()} ({ref.label()}){tail}"


def export_dot(catalog: Catalog, group: str, p, out: Optional[TextIO] = None) -> str:
    """Deterministic DOT digraph of the lattice at ``p``; edges point child -> overgroup."""
    g = group_of(catalog, group)
    pc = char(p)
    nodes = lattice_nodes(catalog, group, pc)
    lines = [f'digraph "{group}_p{pc}" {{', "  rankdir=BT;"]
    for n in nodes:
        lines.append(f'  {n.node_id()} [label="{node_label(g, n)}"];')
    for a, b in lattice_edges(catalog, group, pc):
        lines.append(f"  {a.node_id()} -> {b.node_id()};")
    lines.append("}")
    text = "\n".join(lines) + "\n"
    if out is not None:
        out.write(text)
    return text


def parse_dot(text: str) -> tuple[set[str], set[tuple[str, str]]]:
    """Node and edge identifier sets from DOT produced by :func:`export_dot`."""
    nodes, edges = set(), set()
    for line in text.splitlines():
        s = line.strip().rstrip(";")
        if "->" in s:
            a, b = (x.strip() for x in s.split("->"))
            edges.add((a, b))
        elif "[label=" in s:
            nodes.add(s.split()[0])
    return nodes, edges


def is_acyclic(edges: Iterable[tuple[ClassRef, ClassRef]]) -> bool:
    succ: dict = {}
    for a, b in edges:
        succ.setdefault(a, []).append(b)
    state: dict = {}

    def visit(v) -> bool:
        state[v] = 1
        for w in succ.get(v, []):
            s = state.get(w, 0)
            if s == 1 or (s == 0 and not visit(w)):
                return False
        state[v] = 2
        return True

    return all(state.get(v, 0) == 2 or visit(v) for v in list(succ))
