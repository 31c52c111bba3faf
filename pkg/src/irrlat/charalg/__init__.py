"""Exact character arithmetic for simple factors in any characteristic."""

from .a1 import decompose_a1, irr_char_a1, irr_dim_a1, tilting_char_a1, weyl_char_a1
from .character import Character, outer, tensor, twist
from .characteristic import INFINITY, PROBES, Characteristic, char
from .modular import compose, decompose, decompose_a2, irr_char, irr_dim, weyl_char, weyl_dim
from .rootsys import root_system

__all__ = [
    "Character",
    "Characteristic",
    "INFINITY",
    "PROBES",
    "char",
    "compose",
    "decompose",
    "decompose_a1",
    "decompose_a2",
    "irr_char",
    "irr_char_a1",
    "irr_dim",
    "irr_dim_a1",
    "outer",
    "root_system",
    "tensor",
    "tilting_char_a1",
    "twist",
    "weyl_char",
    "weyl_char_a1",
    "weyl_dim",
]
