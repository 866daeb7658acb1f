from fractions import Fraction

import pytest

from scva.space import (NS, R, Mode, FERMION, BOSON, SpaceError, boson, fermion,
                        is_creation, make_space, mode_charge, mode_weight2)
from scva.state import (State, apply_mode, grading, is_homogeneous, make_state,
                        vacuum, weight2)

H = Fraction(1, 2)


def test_make_space_validation():
    make_space(3)
    make_space(4, polarized=True)
    make_space(4, sector=R, polarized=True)
    make_space(4, polarized=True, quaternionic=True)
    with pytest.raises(SpaceError):
        make_space(0)
    with pytest.raises(SpaceError):
        make_space(3, polarized=True)
    with pytest.raises(SpaceError):
        make_space(2, sector=R)  # R needs a polarization
    with pytest.raises(SpaceError):
        make_space(6, polarized=True, quaternionic=True)


def test_mode_parity_checks():
    sp = make_space(2)
    with pytest.raises(SpaceError):
        fermion(sp, 1, -1)  # NS fermions sit at half-integers
    spr = make_space(2, sector=R, polarized=True)
    with pytest.raises(SpaceError):
        fermion(spr, 1, -H)


def test_creation_conventions():
    spr = make_space(2, sector=R, polarized=True)
    assert is_creation(spr, Mode(FERMION, 0, 1, 0))       # phi_0 creates
    assert not is_creation(spr, Mode(FERMION, 1, 1, 0))   # psi_0 does not
    assert is_creation(spr, Mode(FERMION, 1, 1, -2))
    sp = make_space(1)
    assert not is_creation(sp, Mode(BOSON, 0, 1, 0))


def test_r_sector_weights_and_charges():
    spr = make_space(2, sector=R, polarized=True)
    assert mode_weight2(spr, Mode(FERMION, 0, 1, 0)) == 1     # phi_0: 1/2
    assert mode_weight2(spr, Mode(FERMION, 1, 1, -2)) == 1    # psi_{-1}: 1/2
    assert mode_charge(spr, Mode(FERMION, 1, 1, -2)) == 1
    assert mode_charge(spr, Mode(FERMION, 0, 1, 0)) == -1


def test_fermion_reorder_sign():
    sp = make_space(2)
    a = make_state(sp, (1, [fermion(sp, 1, -H), fermion(sp, 2, -H)]))
    b = make_state(sp, (1, [fermion(sp, 2, -H), fermion(sp, 1, -H)]))
    assert a == -1 * b
    # repeated fermionic mode dies
    assert make_state(sp, (1, [fermion(sp, 1, -H), fermion(sp, 1, -H)])).is_zero()


def test_boson_annihilation_contracts():
    sp = make_space(1)
    st = make_state(sp, (1, [boson(sp, 1, -2), boson(sp, 1, -2)]))
    # a_2 on a_{-2}^2 |0>: contraction coefficient 2 * multiplicity 2
    out = apply_mode(sp, boson(sp, 1, 2), st)
    assert out == 4 * make_state(sp, (1, [boson(sp, 1, -2)]))
    # zero mode kills everything
    assert apply_mode(sp, Mode(BOSON, 0, 1, 0), st).is_zero()


def test_polarized_boson_pairing():
    sp = make_space(2, polarized=True)
    st = make_state(sp, (1, [boson(sp, 1, -1, 0)]))
    # c_1 contracts b_{-1}; b_1 does not
    assert apply_mode(sp, boson(sp, 1, 1, 1), st) == vacuum(sp)
    assert apply_mode(sp, boson(sp, 1, 1, 0), st).is_zero()


def test_grading_and_homogeneity():
    sp = make_space(2, polarized=True)
    nu_ish = make_state(sp, (1, [boson(sp, 1, -1, 0), boson(sp, 1, -1, 1)]))
    assert weight2(sp, nu_ish) == 4
    assert is_homogeneous(sp, nu_ish, weight2_=4, charge_=0)
    mixed = nu_ish + make_state(sp, (1, [fermion(sp, 1, -H, 1)]))
    assert not is_homogeneous(sp, mixed)
    g = grading(sp, mixed)
    assert (Fraction(1, 2), 1) in [(w, q) for w, q, _ in g]


def test_state_arithmetic():
    sp = make_space(1)
    v = vacuum(sp)
    assert (v + v) == 2 * v
    assert (v - v).is_zero()
    assert Fraction(1, 3) * (3 * v) == v
