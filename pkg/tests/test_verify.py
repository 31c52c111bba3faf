from importlib import resources

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from irrlat.catalog import Catalog, ClassRef, default_catalog, parse_text
from irrlat.charalg import PROBES
from irrlat.verify import (
    CollisionReport,
    Finding,
    check_adjoint_determines,
    check_min_determines,
    check_single_maximal_cover,
    check_type_existence,
    cover_members,
    satisfies_steinberg,
    steinberg_product,
    varstein_flagged,
)

G2_TEXT = resources.files("irrlat.data").joinpath("g2.isl").read_text()


def forged(clone_of: int, factors: str) -> Catalog:
    rec = default_catalog()["G2"].classes[clone_of]
    extra = f'\nclass id=9 type="{rec.type_label}" in=0\nedge child=9 parent=0\nfactors id=9 {factors}\n'
    return Catalog({"G2": parse_text(G2_TEXT + extra)})


@pytest.mark.parametrize("group", ["G2", "E6"])
def test_no_collisions(cat, group):
    for check in (check_adjoint_determines, check_min_determines):
        rep = check(cat, group, "all")
        assert rep.ok and rep.summary() == "OK (0 collisions)"
        assert rep.compared > 0


def test_per_probe_reports(cat):
    rep = check_adjoint_determines(cat, "G2", 2)
    assert rep.ok and rep.p == "2"


def test_forged_duplicate_collides():
    cat = forged(4, 'min="10/01/00" adj="W(11)/10/01"')
    for check in (check_adjoint_determines, check_min_determines):
        rep = check(cat, "G2", 5)
        assert not rep.ok
        assert ("5", "#4", "#9") in rep.collisions
        assert rep.summary().startswith("FAIL (1 collisions")


def test_forged_dual_relabel_still_collides():
    cat = forged(4, 'min="01/10/00" adj="W(11)/01/10"')
    assert not check_min_determines(cat, "G2", 7).ok


def test_findings_render():
    rep = CollisionReport("adjoint-determines", "G2", "5", collisions=[("5", "#4", "#9")])
    assert [f.render() for f in rep.findings()] == ["adjoint-determines\t5\t#4 #9\tcollision"]
    assert Finding("x", "2", ("#1",), "skipped: no data").render() == "x\t2\t#1\tskipped: no data"


def test_type_existence_examples(cat):
    assert check_type_existence(cat, "E6", 3, "A1", 3) == (True, ClassRef("E6", 44))
    assert check_type_existence(cat, "E6", 1, "A1", 2) == (False, None)
    assert check_type_existence(cat, "G2", 2, "A1", 2) == (True, ClassRef("G2", 6))


def test_e6_a1_powers(cat):
    for p in PROBES:
        for n in range(1, 7):
            want = p.is_zero or p.p != 2
            assert check_type_existence(cat, "E6", n, "A1", p)[0] is (want and n <= 3), (p, n)


def test_single_cover(cat):
    assert check_single_maximal_cover(cat, "G2", 2) == ClassRef("G2", 6)
    assert check_single_maximal_cover(cat, "G2", 3) == ClassRef("G2", 6)
    assert check_single_maximal_cover(cat, "E6", 3) == ClassRef("E6", 8)
    assert check_single_maximal_cover(cat, "E6", 2) is None
    assert cover_members(cat, "E6", 2) == []


def test_steinberg_examples(cat):
    low = steinberg_product(cat, "G2", "1^{1,0}", 2)
    assert [ok for _, ok in low] == [True, False]
    assert max(low[1][0].weights) == (3,)
    assert not satisfies_steinberg(low)
    assert satisfies_steinberg(steinberg_product(cat, "G2", "1^{1,0}", 3))
    (comp, ok), = steinberg_product(cat, "G2", 5, 3)
    assert (3, 0) in comp.weights and not ok


def test_varstein_g2(cat):
    got = {(r.label(), p) for r, p in varstein_flagged(cat, "G2")}
    assert got == {("#5", "3"), ("#1", "2")}


@settings(max_examples=25)
@given(st.sampled_from(PROBES))
def test_report_is_deterministic(p):
    cat = default_catalog()
    a = check_adjoint_determines(cat, "G2", p)
    b = check_adjoint_determines(cat, "G2", p)
    assert a.findings() == b.findings() and a.summary() == b.summary()
