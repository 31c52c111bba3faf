"""Diagonal subgroups: canonical forms, enumeration and condition audits."""

from .audit import AuditReport, ParentAudit, audit_family, audit_parent, diagonal_parents, enumerate_classes
from .canon import (
    Canonicalizer,
    Slot,
    TwistTuple,
    apply,
    canonicalize,
    from_descriptor,
    is_normalized,
    label_key,
    normalize,
    orbit,
    render_tuple,
    sort_key,
)

__all__ = [
    "AuditReport",
    "Canonicalizer",
    "ParentAudit",
    "Slot",
    "TwistTuple",
    "apply",
    "audit_family",
    "audit_parent",
    "canonicalize",
    "diagonal_parents",
    "enumerate_classes",
    "from_descriptor",
    "is_normalized",
    "label_key",
    "normalize",
    "orbit",
    "render_tuple",
    "sort_key",
]
