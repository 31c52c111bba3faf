"""The checked-in irreducible-character table against the sum-formula oracle."""

import json
from importlib import resources

import pytest

from irrlat.charalg import irr_char, weyl_char
from irrlat.charalg.rootsys import dominant_multiplicities, restrict_to_dominant
from oracles.jantzen import irreducible

ROWS = json.loads(resources.files("irrlat.data").joinpath("irreducibles.json").read_text())


def _dom(row):
    return {tuple(w): m for w, m in row["dominant"]}


def test_table_nonempty_and_sourced():
    assert ROWS
    assert {r["source"] for r in ROWS} <= {"sum-formula", "literature"}


@pytest.mark.parametrize("row", [r for r in ROWS if r["source"] == "sum-formula"], ids=lambda r: f"{r['type']}-{r['p']}-{r['weight']}")
def test_row_matches_oracle(row):
    got = irreducible(row["type"], tuple(row["weight"]), row["p"])
    assert got is not None
    assert dict(got) == _dom(row)


@pytest.mark.parametrize("row", [r for r in ROWS if r["source"] == "literature"], ids=lambda r: f"{r['type']}-{r['p']}-{r['weight']}")
def test_literature_rows_fit_inside_weyl_module(row):
    lam = tuple(row["weight"])
    weyl = dominant_multiplicities(row["type"], lam)
    dom = _dom(row)
    assert dom[lam] == 1
    assert all(0 < m <= weyl.get(w, 0) for w, m in dom.items())


def test_lookup_uses_table():
    row = next(r for r in ROWS if r["type"] == "A2" and r["p"] == 3 and r["weight"] == [1, 1])
    c = irr_char("A2", (1, 1), 3)
    assert restrict_to_dominant("A2", c) == _dom(row)
    assert c != weyl_char("A2", (1, 1))
