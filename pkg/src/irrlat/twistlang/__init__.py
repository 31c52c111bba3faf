"""Embedding descriptors and the field-twist condition language."""

from .embedding import EmbeddingDescriptor, PositionSpec, parse_embedding
from .evaluate import eval_condition, term_value
from .parser import parse_condition, tokenize
from .rowtable import (
    Row,
    RowTable,
    eval_row_table,
    induced_pattern,
    make_row,
    matching_rows,
    parse_groups,
    parse_pattern,
    render_pattern,
)
from .syntax import TRUE, Clauses, conjoin, render, variables

__all__ = [
    "Clauses",
    "EmbeddingDescriptor",
    "PositionSpec",
    "Row",
    "RowTable",
    "TRUE",
    "conjoin",
    "eval_condition",
    "eval_row_table",
    "induced_pattern",
    "make_row",
    "matching_rows",
    "parse_condition",
    "parse_embedding",
    "parse_groups",
    "parse_pattern",
    "render",
    "render_pattern",
    "term_value",
    "tokenize",
    "variables",
]
