"""Classification lattice of irreducible subgroups of exceptional groups."""

__version__ = "0.1.0"
