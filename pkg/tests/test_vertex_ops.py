import random
from fractions import Fraction

import pytest

from scva.space import NS, R, boson, fermion, make_space
from scva.state import State, make_state, vacuum, weight2
from scva.fields import (commutator_check, normally_ordered, nth_product,
                         ope_singular, skew_symmetry_check, state_parity,
                         translate)
from scva.structures import conformal_boson, n1_structure, n2_structure

from helpers import random_state, substitute

H = Fraction(1, 2)

SPACES = [
    make_space(2),
    make_space(2, polarized=True),
    make_space(4, sector=R, polarized=True),
]


def test_vacuum_axioms():
    for sp in SPACES:
        v = vacuum(sp)
        rng = random.Random(11)
        for _ in range(20):
            a = random_state(sp, rng)
            # a_(-1)|0> = a, and the vacuum field acts as the identity
            assert nth_product(sp, a, v, -1) == a
            assert nth_product(sp, v, a, -1) == a
            for n in range(0, 4):
                assert nth_product(sp, a, v, n).is_zero()
                assert nth_product(sp, v, a, n).is_zero()


def test_translation_vacuum():
    for sp in SPACES:
        assert translate(sp, vacuum(sp)).is_zero()


def test_translation_covariance():
    # (Ta)_(n) = -n a_(n-1) as operators on random probes
    for sp in SPACES:
        rng = random.Random(23)
        for _ in range(25):
            a = random_state(sp, rng)
            b = random_state(sp, rng)
            ta = translate(sp, a)
            for n in range(-1, 3):
                assert nth_product(sp, ta, b, n) == -n * nth_product(sp, a, b, n - 1)


def test_translation_leibniz_on_products():
    for sp in SPACES:
        rng = random.Random(5)
        for _ in range(10):
            a = random_state(sp, rng)
            b = random_state(sp, rng)
            lhs = translate(sp, normally_ordered(sp, a, b))
            rhs = normally_ordered(sp, translate(sp, a), b) \
                + normally_ordered(sp, a, translate(sp, b))
            assert lhs == rhs


@pytest.mark.parametrize("sp", SPACES, ids=["NS-orth", "NS-pol", "R-pol"])
def test_skew_symmetry_randomized(sp):
    rng = random.Random(42)
    done = 0
    while done < 100:
        a = random_state(sp, rng)
        b = random_state(sp, rng)
        if state_parity(a) is None or state_parity(b) is None:
            continue
        assert skew_symmetry_check(sp, a, b, 3)["ok"]
        done += 1


@pytest.mark.parametrize("sp", SPACES, ids=["NS-orth", "NS-pol", "R-pol"])
def test_commutator_identity_randomized(sp):
    rng = random.Random(7)
    done = 0
    while done < 100:
        a = random_state(sp, rng, max_weight2=3, max_len=2)
        b = random_state(sp, rng, max_weight2=3, max_len=2)
        probe = random_state(sp, rng, max_weight2=3, max_len=2)
        if state_parity(a) is None or state_parity(b) is None:
            continue
        m = rng.randint(0, 2)
        n = rng.randint(-1, 2)
        assert commutator_check(sp, a, b, m, n, probe)["ok"]
        done += 1


def test_grading_additivity():
    for sp in SPACES:
        rng = random.Random(3)
        for _ in range(100):
            a = random_state(sp, rng, max_terms=1)
            b = random_state(sp, rng, max_terms=1)
            n = rng.randint(-2, 3)
            p = nth_product(sp, a, b, n)
            if p.is_zero() or a.is_zero() or b.is_zero():
                continue
            wa, wb = weight2(sp, a), weight2(sp, b)
            assert weight2(sp, p) == wa + wb - 2 * (n + 1)


def test_ope_singular_listing():
    sp = make_space(1)
    a = make_state(sp, (1, [boson(sp, 1, -1)]))
    poles = ope_singular(sp, a, a)
    assert poles == [(2, vacuum(sp))]
    assert ope_singular(sp, vacuum(sp), a) == []


def test_basis_independence_rotation():
    # rational rotation (3/5, 4/5) is orthogonal: products transform covariantly
    sp = make_space(2)
    mat = {1: {1: Fraction(3, 5), 2: Fraction(4, 5)},
           2: {1: Fraction(-4, 5), 2: Fraction(3, 5)}}
    nu = conformal_boson(sp).vectors["nu"]
    assert substitute(sp, nu, mat) == nu
    st = n1_structure(sp)
    assert substitute(sp, st.vectors["tau"], mat) == st.vectors["tau"]
    rng = random.Random(19)
    for _ in range(30):
        a = random_state(sp, rng)
        b = random_state(sp, rng)
        for n in (-1, 0, 1):
            lhs = substitute(sp, nth_product(sp, a, b, n), mat)
            rhs = nth_product(sp, substitute(sp, a, mat), substitute(sp, b, mat), n)
            assert lhs == rhs


def test_basis_independence_signed_permutation():
    # swap the two pairs with a sign flip on the first; preserves the pairing
    sp = make_space(4, polarized=True)
    mat = {1: {2: Fraction(-1)}, 2: {1: Fraction(-1)}}
    vecs = n2_structure(sp).vectors
    for name in ("nu", "tau+", "tau-", "j"):
        assert substitute(sp, vecs[name], mat) == vecs[name]
    rng = random.Random(29)
    for _ in range(20):
        a = random_state(sp, rng)
        b = random_state(sp, rng)
        lhs = substitute(sp, nth_product(sp, a, b, 0), mat)
        rhs = nth_product(sp, substitute(sp, a, mat), substitute(sp, b, mat), 0)
        assert lhs == rhs
