from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from irrlat.catalog import ClassRef, default_catalog, make_ref
from irrlat.catalog.factors import Component, FactorList
from irrlat.catalog.types import parse_type
from irrlat.charalg import PROBES, weyl_char, weyl_char_a1
from irrlat.cli import render_factors
from irrlat.errors import ConditionViolated, MissingData
from irrlat.restrict import (
    all_routes,
    expand,
    fit_weight_map,
    restrict_class,
    restrict_diagonal,
    restrict_weight_map,
    same_factors,
    weights_of,
)
from irrlat.twistlang import parse_embedding

A1 = parse_type("A1")
A2 = parse_type("A2")
G2_6 = parse_type("A1bar A1tilde")
V7 = FactorList.parse("(1,1)/(0,W(2))", G2_6)
L14 = FactorList.parse("(W(2),0)/(1,W(3))/(0,W(2))", G2_6)


def show(fl, p):
    return render_factors(fl, p)


@pytest.mark.parametrize("text,p,want", [("W(3)", 3, "3 / 1"), ("W(2)", 2, "2 / 0"), ("W(6)", 7, "6"), ("T(3)", 3, "3 / 1 / 1")])
def test_expand(text, p, want):
    assert show(expand(FactorList.parse(text, A1), p), p) == want


def test_restrict_diagonal_examples():
    for p in (3, 5, 7):
        assert show(restrict_diagonal(V7, parse_embedding("(1,1)"), (), p), p) == "2 / 2 / 0"
    assert show(restrict_diagonal(L14, parse_embedding("(1,1)"), (), 3), 3) == "4 / 2 / 2 / 2 / 0"
    assert show(restrict_diagonal(L14, parse_embedding("(1,1)"), (), 7), 7) == "4 / 2 / 2 / 2"


def test_restrict_diagonal_checks_condition():
    with pytest.raises(ConditionViolated):
        restrict_diagonal(V7, parse_embedding("(1^{[r]},1^{[s]}) | rs=0; r!=s"), (1, 1), 5)


def test_twisted_diagonal_dimension():
    fl = restrict_diagonal(L14, parse_embedding("(1^{[r]},1^{[s]}) | rs=0; r!=s"), (1, 0), 3)
    assert fl.dim(3) == 14


def test_principal_weight_map():
    wm = fit_weight_map(A2[0], weyl_char("A2", (1, 0)), A1, weyl_char_a1(2))
    adj = FactorList.parse("W(11)", A2)
    assert show(restrict_weight_map(adj, [wm], 7), 7) == "4 / 2"
    assert show(restrict_weight_map(adj, [wm], 3), 3) == "4 / 2 / 0"
    for p in (3, 5, "inf"):
        assert show(restrict_weight_map(FactorList.parse("10", A2), [wm], p), p) == "2"


def test_g2_class_2_two_routes(cat):
    for p in (3, 5, 7, 11, 13, "inf"):
        rs, _ = all_routes(cat, "G2", 2, "min", p)
        assert {r.via.split()[0] for r in rs} == {"#4", "#6"}
        assert {show(r.factors, p) for r in rs} == {"2 / 2 / 0"}
        want = "4 / 2 / 2 / 2 / 0" if p == 3 else "4 / 2 / 2 / 2"
        rs, _ = all_routes(cat, "G2", 2, "adj", p)
        assert {show(r.factors, p) for r in rs} == {want}


@pytest.mark.parametrize("ref", ["34^{0,0}", "37^{0,0}", "45^{0}"])
def test_e6_two_route_instances(cat, ref):
    g = cat["E6"]
    checked = 0
    for p in PROBES:
        if not g.admits(make_ref(cat, "E6", ref), p):
            continue
        for module in ("min", "adj"):
            rs, _ = all_routes(cat, "E6", ref, module, p)
            assert len(rs) >= 2
            assert all(same_factors(rs[0].factors, r.factors, p) for r in rs[1:])
            checked += 1
    assert checked


@pytest.mark.parametrize("group", ["G2", "E6"])
def test_all_routes_agree(cat, group):
    g = cat[group]
    refs = [r.ref for _, r in sorted(g.classes.items()) if r.family is None]
    refs += sorted({rt.ref for rt in g.routes}, key=str)
    multi = 0
    for ref in refs:
        for p in PROBES:
            if not g.admits(ref, p):
                continue
            for module in ("min", "adj"):
                rs, _ = all_routes(cat, group, ref, module, p)
                if len(rs) > 1:
                    multi += 1
                    assert all(same_factors(rs[0].factors, r.factors, p) for r in rs[1:]), (ref, p, module)
    assert multi > 0


def test_route_errors(cat):
    with pytest.raises(ConditionViolated):
        all_routes(cat, "E6", "34^{0,0}", "min", 2)
    with pytest.raises(MissingData):
        restrict_class(cat, "G2", 0, "min", 5)


def test_same_factors_up_to_symmetry():
    f = parse_type("A1 A1")
    a = FactorList.parse("(4,0)/(3,1)", f)
    b = FactorList.parse("(0,4)/(1,3)", f)
    c = FactorList.parse("(4,0)/(1,3)", f)
    assert same_factors(a, b, 5)
    assert same_factors(a, c, 5) is False
    g = parse_type("A2")
    assert same_factors(FactorList.parse("10/00", g), FactorList.parse("01/00", g), 5)
    assert not same_factors(FactorList.parse("10/00", g), FactorList.parse("01/00", g), 5, dual=False)


def test_frobenius_shift():
    a = FactorList.parse("1/0", A1)
    b = FactorList.from_counter(A1, Counter({(Component((1,), "L", 1),): 1, (Component((0,)),): 1}))
    assert not same_factors(a, b, 3)
    assert same_factors(a, b, 3, frobenius=True)


# properties

E6 = default_catalog()["E6"]
E6_FAMILIES = sorted(i for i, r in E6.classes.items() if r.family is not None)


@given(st.sampled_from(E6_FAMILIES), st.sampled_from([2, 3, 5, 7]), st.sampled_from(["min", "adj"]), st.data())
def test_dimension_conserved_on_instances(fid, p, module, data):
    from irrlat.diagonal import enumerate_classes

    insts = enumerate_classes(E6.classes[fid], 2, p)
    if not insts:
        return
    tw = data.draw(st.sampled_from(insts))
    try:
        fl = restrict_class(default_catalog(), "E6", ClassRef("E6", fid, tw), module, p)
    except MissingData:
        return
    assert fl.dim(p) == E6.module_dim(module)


entry = st.tuples(*(st.integers(0, 3) for _ in range(4)))


@given(st.lists(entry, min_size=1, max_size=3), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.sampled_from([2, 3, 5, 7]))
def test_restriction_commutes_with_composition(entries, r, s, t, p):
    four = parse_type("A1^4")
    text = "/".join("(" + ",".join(map(str, e)) + ")" for e in entries)
    parent = FactorList.parse(text, four)
    step1 = restrict_diagonal(parent, parse_embedding("(1_a,1_a^{[r]},1_b,1_b^{[s]})"), (r, s), p)
    step2 = restrict_diagonal(step1, parse_embedding(f"(1,1^{{[{t}]}})"), (), p)
    direct = restrict_diagonal(parent, parse_embedding(f"(1,1^{{[{r}]}},1^{{[{t}]}},1^{{[{t + s}]}})"), (), p)
    assert weights_of(step2, p) == weights_of(direct, p)
    assert direct.dim(p) == parent.dim(p)
