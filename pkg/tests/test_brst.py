from fractions import Fraction
from math import comb

import pytest

from scva.space import NS, R, make_space
from scva.brst import (BudgetError, brst_blocks, cohomology_dims,
                       cohomology_ring_check, enumerate_monomials)

H = Fraction(1, 2)


@pytest.mark.parametrize("m", [1, 2, 3])
def test_r_sector_a_twist_binomials(m):
    sp = make_space(2 * m, sector=R, polarized=True)
    dims = cohomology_dims(sp, "A", 2)
    expected = {(Fraction(0), k): comb(m, k) for k in range(m + 1)}
    assert dims == expected


@pytest.mark.parametrize("m", [1, 2, 3])
def test_r_sector_b_twist_binomials(m):
    sp = make_space(2 * m, sector=R, polarized=True)
    dims = cohomology_dims(sp, "B", 2)
    expected = {(Fraction(0), -k): comb(m, k) for k in range(m + 1)}
    assert dims == expected


@pytest.mark.parametrize("which", ["A", "B"])
@pytest.mark.parametrize("m", [1, 2])
def test_ns_sector_scalar_line_only(which, m):
    # all NS cohomology sits on the twisted-weight-0 (scalar) line
    sp = make_space(2 * m, sector=NS, polarized=True)
    dims = cohomology_dims(sp, which, 2)
    assert all(w == 0 for (w, _q) in dims)
    sign = 1 if which == "A" else -1
    assert dims == {(Fraction(0), sign * k): comb(m, k) for k in range(m + 1)}


def test_q0_squares_to_zero_blockwise():
    sp = make_space(4, sector=R, polarized=True)
    blocks, step = brst_blocks(sp, "A", 2)
    # the composite of consecutive block matrices vanishes
    for (w2, q), blk in blocks.items():
        nxt = blocks.get((w2, q + step))
        if not (blk.matrix and nxt and nxt.matrix):
            continue
        for col in range(len(blk.basis)):
            v = [row[col] for row in blk.matrix]
            out = [sum(r[i] * v[i] for i in range(len(v))) for r in nxt.matrix]
            assert all(x == 0 for x in out)


def test_ring_check_exterior_algebra():
    sp = make_space(4, sector=R, polarized=True)
    for which in ("A", "B"):
        rep = cohomology_ring_check(sp, which)
        assert rep["passed"], rep["checks"]


def test_budget_error():
    sp = make_space(4, sector=R, polarized=True)
    with pytest.raises(BudgetError):
        enumerate_monomials(sp, "A", 4, budget=10)


def test_euler_characteristic_stability():
    # per-charge Euler characteristics agree between cutoffs 2 and 3
    sp = make_space(2, sector=R, polarized=True)

    def euler(cutoff):
        blocks, step = brst_blocks(sp, "A", cutoff)
        chi = {}
        for (w2, q), blk in blocks.items():
            chi[q] = chi.get(q, 0) + (-1) ** (q % 2) * len(blk.basis)
        return chi

    dims = cohomology_dims(sp, "A", 2)
    total = sum(d * (-1) ** (q % 2) for (_w, q), d in dims.items())
    assert total == sum(euler(2).values())
