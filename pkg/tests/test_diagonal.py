import pytest
from hypothesis import given
from hypothesis import strategies as st

from irrlat.catalog import default_catalog
from irrlat.catalog.model import DiagonalFamily, OutAction, parse_generator
from irrlat.diagonal import (
    Slot,
    apply,
    audit_family,
    audit_parent,
    canonicalize,
    diagonal_parents,
    enumerate_classes,
    from_descriptor,
    is_normalized,
    normalize,
    orbit,
    render_tuple,
)
from irrlat.twistlang import parse_embedding

S4 = OutAction("s4", 4, (parse_generator("(1,2)", 4), parse_generator("(1,2,3,4)", 4)))
CAT = default_catalog()
PSL = CAT["E7"].actions["psl27"]
AGL = CAT["E8"].actions["agl32"]


def one_block(*twists):
    return tuple(Slot("1", 0, t) for t in twists)


def test_group_orders():
    assert S4.order == 24
    assert PSL.order == 168
    assert AGL.order == 1344
    assert CAT["E6"].actions["a2cubed"].order == 12


def test_canonicalize_examples():
    t = from_descriptor(parse_embedding("(1^{[r]},1^{[s]})"), (1, 0))
    assert canonicalize(t, None) == t
    assert canonicalize(one_block(2, 0, 0, 1), S4) == one_block(0, 0, 1, 2)
    t7 = one_block(0, 1, 2, 0, 3, 0, 1)
    g = PSL.generators[0]
    assert canonicalize(apply(g, t7), PSL) == canonicalize(t7, PSL)


def test_normalize_shifts_and_relabels():
    t = (Slot("1", 3, 2), Slot("1", 3, 5), Slot("01", 7, 1))
    assert normalize(t) == (Slot("1", 0, 0), Slot("1", 0, 3), Slot("10", 1, 0))
    assert is_normalized(normalize(t))


def test_render_tuple():
    assert render_tuple(one_block(1, 0)) == "(1^{[1]},1)"
    t = (Slot("1", 0, 0), Slot("1", 0, 1), Slot("1", 1, 0))
    assert render_tuple(t) == "(1_a,1_a^{[1]},1_b)"


def test_enumerate_examples(cat):
    g2 = cat["G2"]
    assert enumerate_classes(g2.classes[1], 1, 5) == [(0, 1), (1, 0)]
    for n in range(1, 6):
        assert len(enumerate_classes(g2.classes[1], n, 5)) == 2 * n
    assert enumerate_classes(g2.classes[2], 3, 2) == []
    assert enumerate_classes(g2.classes[2], 3, 3) == [()]


def test_enumerate_zero_char_only_untwisted(cat):
    assert enumerate_classes(cat["G2"].classes[1], 3, "inf") == []


def test_audit_g2(cat):
    rep = audit_family(cat["G2"].classes[1], 3, 5)
    assert rep.injective and rep.accepted == 6
    assert [render_tuple(t) for t in rep.excluded] == ["(1,1)"]
    assert rep.render().splitlines()[:3] == ["family: G2 #1", "bound: 3", "p: 5"]


def test_audit_detects_collisions():
    fam = DiagonalFamily(0, "X", 0, parse_embedding("(a,a^{[r]},a^{[s]},a^{[t]})"), out_action=S4)
    rep = audit_family(fam, 1, 5)
    assert not rep.injective
    # (0,1,0,0) and (0,0,1,0) are one S4 orbit
    assert ((0, 0, 1), (0, 1, 0)) in rep.collisions or ((0, 0, 1), (1, 0, 0)) in rep.collisions


def test_e7_family_12_injective(cat):
    assert audit_family(cat["E7"].classes[12], 3, 2).injective


@pytest.mark.parametrize("parent", diagonal_parents(CAT["E6"]))
def test_e6_parents_injective_across_families(cat, parent):
    for p in (2, 3, 5):
        assert audit_parent(cat["E6"], parent, 2, p).injective, (parent, p)


@pytest.mark.parametrize("fid", sorted(i for i, r in CAT["E6"].classes.items() if r.family))
def test_every_e6_family_injective(cat, fid):
    for p in (2, 3, 5, 7, "inf"):
        assert audit_family(cat["E6"].classes[fid], 3, p).injective


# multi-block E7/E8 families whose printed conditions admit conjugate tuples
# under the stated outer action, for every labelling of the positions
E7_KNOWN = [60, 63, 66]
E8_KNOWN = [142, 151, 154]


@pytest.mark.parametrize("group,fid", [("E7", i) for i in E7_KNOWN] + [("E8", i) for i in E8_KNOWN])
@pytest.mark.xfail(strict=True, reason="printed conditions are not orbit-injective under the stated action")
def test_multiblock_families_injective(cat, group, fid):
    assert audit_family(cat[group].classes[fid], 2, 5).injective


# properties

tw = st.integers(0, 4)


@given(st.lists(tw, min_size=7, max_size=7), st.sampled_from(PSL.elements))
def test_canonical_form_constant_on_orbit(ts, g):
    t = normalize(one_block(*ts))
    c = canonicalize(t, PSL)
    assert canonicalize(c, PSL) == c
    assert canonicalize(apply(g, t), PSL) == c
    assert c in orbit(t, PSL)


@given(st.lists(tw, min_size=4, max_size=4))
def test_s4_canonical_is_sorted(ts):
    t = normalize(one_block(*ts))
    assert canonicalize(t, S4) == one_block(*sorted(s.twist for s in t))


@given(st.sampled_from(sorted(i for i, r in CAT["E6"].classes.items() if r.family)), st.integers(0, 3), st.sampled_from([2, 3, 5]))
def test_enumeration_sorted_unique_canonical(fid, bound, p):
    rec = CAT["E6"].classes[fid]
    got = enumerate_classes(rec, bound, p)
    assert got == sorted(set(got))
    for t in got:
        assert is_normalized(from_descriptor(rec.embed, t))
        assert rec.family.admits(t, p)
