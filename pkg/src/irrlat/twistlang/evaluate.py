"""Evaluation of condition ASTs over twist assignments."""

from __future__ import annotations

import math
import operator
from typing import Mapping, Union

from ..errors import UnboundVariable
from .syntax import (
    And,
    Builtin,
    Clauses,
    Compare,
    Extremum,
    If,
    Lit,
    Member,
    Or,
    Paren,
    Product,
    SetLit,
    SortAt,
    Sum,
)

Value = Union[int, float]

_OPS = {
    "<": operator.lt,
    "<=": operator.le,
    "=": operator.eq,
    "!=": operator.ne,
    ">": operator.gt,
    ">=": operator.ge,
}


def _lookup(env: Mapping[str, object], name: str) -> Value:
    if name not in env:
        raise UnboundVariable(f"variable {name!r} has no value")
    v = env[name]
    if name == "p":
        # the characteristic: a Characteristic, an int, or "inf"
        if v is None or str(v) == "inf":
            return math.inf
        return int(str(v))
    return v  # type: ignore[return-value]


def term_value(t, env: Mapping[str, object]):
    if isinstance(t, Lit):
        return t.value
    if isinstance(t, Product):
        vals = [_lookup(env, n) for n in t.names]
        if len(vals) == 1:
            return vals[0]
        # 0 * inf is not needed: p never appears inside a product
        out = 1
        for v in vals:
            out *= v
        return out
    if isinstance(t, Sum):
        return sum(term_value(x, env) for x in t.terms)
    if isinstance(t, SetLit):
        return frozenset(term_value(x, env) for x in t.items)
    if isinstance(t, Extremum):
        vals = [term_value(x, env) for x in t.arg.items]
        return min(vals) if t.kind == "min" else max(vals)
    if isinstance(t, SortAt):
        return sorted(term_value(x, env) for x in t.arg.items)[t.index]
    raise TypeError(f"not a term: {t!r}")


def _no_double_pair(vals: list) -> bool:
    if len(vals) != 4:
        raise ValueError("nodoublepair takes exactly four values")
    a, b, c, d = vals
    return not ((a == b and c == d) or (a == c and b == d) or (a == d and b == c))


def eval_condition(cond, env: Mapping[str, object]) -> bool:
    """Truth value of ``cond`` under ``env`` (variable name -> non-negative int)."""
    if isinstance(cond, Clauses):
        return all(eval_condition(c, env) for c in cond.parts)
    if isinstance(cond, And):
        return all(eval_condition(c, env) for c in cond.parts)
    if isinstance(cond, Or):
        return any(eval_condition(c, env) for c in cond.parts)
    if isinstance(cond, If):
        return (not eval_condition(cond.cond, env)) or eval_condition(cond.then, env)
    if isinstance(cond, Paren):
        return eval_condition(cond.body, env)
    if isinstance(cond, Compare):
        vals = [term_value(t, env) for t in cond.operands]
        return all(_OPS[op](x, y) for op, x, y in zip(cond.ops, vals, vals[1:]))
    if isinstance(cond, Member):
        inside = term_value(cond.item, env) in term_value(cond.pool, env)
        return inside != cond.negated
    if isinstance(cond, Builtin):
        vals = [term_value(t, env) for t in cond.arg.items]
        if cond.name == "distinct":
            return len(set(vals)) == len(vals)
        return _no_double_pair(vals)
    raise TypeError(f"not a condition: {cond!r}")

