"""The immediate-overgroup DAG of irreducible subgroups."""

from .graph import (
    admitted,
    aux_parents,
    export_dot,
    immediate_overgroups,
    is_acyclic,
    lattice_edges,
    lattice_nodes,
    node_label,
    overgroup_closure,
    parse_dot,
    unified_parents,
)
from .unify import Placement, contains, dual_label, minimal_overgroups, place, within_parent

__all__ = [
    "Placement",
    "admitted",
    "aux_parents",
    "contains",
    "dual_label",
    "export_dot",
    "immediate_overgroups",
    "is_acyclic",
    "lattice_edges",
    "lattice_nodes",
    "minimal_overgroups",
    "node_label",
    "overgroup_closure",
    "parse_dot",
    "place",
    "unified_parents",
    "within_parent",
]
