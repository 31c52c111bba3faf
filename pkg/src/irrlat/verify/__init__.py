"""Mechanical checks of catalog-wide statements."""

from .checks import (
    CollisionReport,
    Finding,
    SteinbergComponent,
    check_adjoint_determines,
    check_determines,
    check_min_determines,
    check_single_maximal_cover,
    check_type_existence,
    cover_members,
    satisfies_steinberg,
    steinberg_product,
    varstein_flagged,
)

__all__ = [
    "CollisionReport",
    "Finding",
    "SteinbergComponent",
    "check_adjoint_determines",
    "check_determines",
    "check_min_determines",
    "check_single_maximal_cover",
    "check_type_existence",
    "cover_members",
    "satisfies_steinberg",
    "steinberg_product",
    "varstein_flagged",
]
