from fractions import Fraction

import pytest

from scva.space import NS, R, boson, fermion, make_space
from scva.state import State, make_state, vacuum
from scva.fields import nth_product
from scva.structures import (conformal_boson, conformal_fermion, n1_from_n2,
                             n1_structure, n2_structure, n4_structure,
                             polarized_fermion_conformal, twist, untwist,
                             verify_n1, verify_n2, verify_n4,
                             verify_topological, verify_virasoro)

H = Fraction(1, 2)


@pytest.mark.parametrize("dim", [1, 2, 3, 4])
def test_virasoro_boson(dim):
    st = conformal_boson(make_space(dim))
    assert st.claimed_c == dim
    assert verify_virasoro(st).passed


@pytest.mark.parametrize("dim", [1, 2, 3, 4])
def test_virasoro_fermion(dim):
    st = conformal_fermion(make_space(dim))
    assert st.claimed_c == Fraction(dim, 2)
    assert verify_virasoro(st).passed


@pytest.mark.parametrize("lam,c", [(0, -2), (Fraction(1, 3), Fraction(2, 3)),
                                   (H, 1), (1, -2)])
def test_virasoro_lambda(lam, c):
    st = polarized_fermion_conformal(make_space(2, polarized=True), lam)
    assert st.claimed_c == c
    assert verify_virasoro(st).passed


@pytest.mark.parametrize("dim", [1, 2, 3])
def test_n1(dim):
    st = n1_structure(make_space(dim))
    assert st.claimed_c == Fraction(3 * dim, 2)
    assert verify_n1(st).passed


@pytest.mark.parametrize("dim", [2, 4])
@pytest.mark.parametrize("sector", [NS, R])
def test_n2(dim, sector):
    st = n2_structure(make_space(dim, sector=sector, polarized=True))
    assert st.claimed_c == Fraction(3 * dim, 2)
    rep = verify_n2(st)
    assert rep.passed, rep.failed_ids()


@pytest.mark.parametrize("dim", [4, 8])
def test_n4(dim):
    st = n4_structure(make_space(dim, polarized=True, quaternionic=True))
    rep = verify_n4(st)
    assert rep.passed, rep.failed_ids()


@pytest.mark.parametrize("a", [1, 2, Fraction(3, 5)])
def test_n1_from_n2(a):
    st = n2_structure(make_space(2, polarized=True))
    assert verify_n1(n1_from_n2(st, a)).passed


@pytest.mark.parametrize("which", ["A", "B"])
@pytest.mark.parametrize("dim,sector", [(2, NS), (2, R), (4, NS)])
def test_topological(which, dim, sector):
    st = n2_structure(make_space(dim, sector=sector, polarized=True))
    top = twist(st, which)
    assert top.claimed_c == Fraction(dim, 2)  # rank d = c/3
    rep = verify_topological(top)
    assert rep.passed, rep.failed_ids()


@pytest.mark.parametrize("which", ["A", "B"])
def test_twist_untwist_round_trip(which):
    st = n2_structure(make_space(4, sector=R, polarized=True))
    back = untwist(twist(st, which), which)
    assert back.vectors == st.vectors
    assert back.claimed_c == st.claimed_c


def test_mixed_supercurrent_normalization():
    # the frozen normalization: tau-_(2)tau+ = (c/3)|0>, tau-_(1)tau+ = -j
    sp = make_space(2, polarized=True)
    st = n2_structure(sp)
    tp, tm, j = st.vectors["tau+"], st.vectors["tau-"], st.vectors["j"]
    assert nth_product(sp, tm, tp, 2) == Fraction(st.claimed_c, 3) * vacuum(sp)
    assert nth_product(sp, tm, tp, 1) == -1 * j


def test_negative_control_perturbed_nu():
    sp = make_space(2, polarized=True)
    st = n2_structure(sp)
    bad = st.vectors["nu"] + st.vectors["j"]
    from scva.structures import StructureSpec
    rep = verify_virasoro(StructureSpec("Virasoro", sp, {"nu": bad}, st.claimed_c))
    assert not rep.passed
    assert any(rid.startswith("LL") for rid in rep.failed_ids())


def test_negative_control_sign_flipped_tau():
    sp = make_space(2, polarized=True)
    st = n2_structure(sp)
    st.vectors["tau-"] = -1 * st.vectors["tau-"]
    rep = verify_n2(st)
    assert not rep.passed
    failed = rep.failed_ids()
    # the mixed G-G+ relations break, the pure Virasoro ones survive
    assert any("G-G+" in rid or "G+G-" in rid for rid in failed)
    assert not any(rid.startswith("LL") for rid in failed)
