"""Composition factors of subgroups by restriction from an overgroup."""

from .core import (
    WeightMap,
    block_factors,
    decompose_product,
    expand,
    expand_component,
    expand_entry,
    fit_weight_map,
    restrict_diagonal,
    restrict_weight_map,
    weights_of,
)
from .routes import (
    RouteResult,
    all_routes,
    canonical_key,
    canonical_weights,
    factors_of,
    restrict_class,
    same_factors,
    via_embed,
    via_vm,
)

__all__ = [
    "RouteResult",
    "WeightMap",
    "all_routes",
    "block_factors",
    "canonical_key",
    "canonical_weights",
    "decompose_product",
    "expand",
    "expand_component",
    "expand_entry",
    "factors_of",
    "fit_weight_map",
    "restrict_class",
    "restrict_diagonal",
    "restrict_weight_map",
    "same_factors",
    "via_embed",
    "via_vm",
    "weights_of",
]
