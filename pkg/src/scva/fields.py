"""State-field correspondence and n-th products for the free fields.

Y(a, z) of a basis monomial is the left-nested normally ordered product
of divided derivatives of the generator fields; a_(n)b is extracted with
the split  :AB:_(n) = sum_{m<0} A_(m) B_(n-m-1)
                    + (-1)^{|A||B|} sum_{m>=0} B_(n-m-1) A_(m),
which is finite on any state by weight bookkeeping.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .space import BOSON, FERMION, Mode, SpaceSpec, NS, mode_weight2
from .state import (
    State,
    apply_mode,
    monomial_weight2,
    vacuum,
    weight2,
    zero,
)


def gen_binom(m: int, j: int) -> int:
    """binom(m, j) for any integer m and j >= 0."""
    if j < 0:
        return 0
    num = 1
    for i in range(j):
        num *= m - i
    return num // factorial(j)


def _gen_base_idx2(space, m: Mode) -> int:
    """Raw idx2 of the undifferentiated generator creation mode."""
    if m.fam == BOSON:
        return -2
    if space.sector == NS:
        return -1
    return 0 if m.tag == 0 else -2


def _raw_idx2(space, m: Mode, k: int) -> int:
    """Raw idx2 of the integer field mode u_(k) of m's generator field."""
    if m.fam == BOSON:
        return 2 * k
    if space.sector == NS:
        return 2 * k + 1
    return 2 * k + 2 if m.tag == 0 else 2 * k


def _gen_field_mode(space, u: Mode, m: int, state: State) -> State:
    """Apply the integer field mode (d^(j) u_gen)_(m) to a state."""
    j = (_gen_base_idx2(space, u) - u.idx2) // 2
    c = gen_binom(m, j)
    if c == 0:
        return zero()
    if j % 2:
        c = -c
    raw = Mode(u.fam, u.tag, u.gen, _raw_idx2(space, u, m - j))
    return Fraction(c) * apply_mode(space, raw, state)


def _mono_nth(space, mono, b: State, n: int) -> State:
    if b.is_zero():
        return b
    if not mono:
        return b if n == -1 else zero()
    u, rest = mono[0], mono[1:]
    pa = 1 if u.fam == FERMION else 0
    pb = sum(1 for x in rest if x.fam == FERMION) % 2
    sign = -1 if pa and pb else 1
    wa2 = mode_weight2(space, u)
    wrest2 = monomial_weight2(space, rest)
    wb2 = weight2(space, b)
    out = zero()
    # annihilation half: (-1)^{|A||B|} B_(n-m-1) A_(m), m >= 0
    for m in range(0, (wa2 + wb2) // 2):
        x = _gen_field_mode(space, u, m, b)
        if x.is_zero():
            continue
        y = _mono_nth(space, rest, x, n - m - 1)
        out = out + Fraction(sign) * y
    # creation half: A_(m) B_(n-m-1), m <= -1; B_(k)b = 0 once k exceeds
    # the combined weight, so m is bounded below
    m_low = n - (wrest2 + wb2) // 2
    for m in range(-1, m_low - 1, -1):
        y = _mono_nth(space, rest, b, n - m - 1)
        if y.is_zero():
            continue
        out = out + _gen_field_mode(space, u, m, y)
    return out


def nth_product(space: SpaceSpec, a: State, b: State, n: int) -> State:
    """The n-th product a_(n)b, exact and always finite."""
    out = zero()
    for mono, c in a.terms.items():
        out = out + c * _mono_nth(space, mono, b, n)
    return out


def normally_ordered(space, a, b) -> State:
    return nth_product(space, a, b, -1)


def translate(space: SpaceSpec, state: State) -> State:
    """The translation operator T = L_{-1}, a derivation on monomials.

    A factor at divided-derivative depth j becomes (j+1) times the factor
    one step deeper: u_{-k} -> k u_{-k-1} for bosons, and the analogous
    shift per sector for fermions.
    """
    out = zero()
    for mono, c in state.terms.items():
        for pos, u in enumerate(mono):
            j = (_gen_base_idx2(space, u) - u.idx2) // 2
            shifted = Mode(u.fam, u.tag, u.gen, u.idx2 - 2)
            # remove u at pos (Koszul sign for fermions), re-insert shifted
            sign = 1
            if u.fam == FERMION and pos % 2:
                sign = -1
            partial = State({mono[:pos] + mono[pos + 1:]: sign * c * (j + 1)})
            out = out + apply_mode(space, shifted, partial)
    return out


def ope_singular(space, a, b):
    """All nonzero a_(n)b with n >= 0, as [(pole_order, coefficient)].

    Pole order k corresponds to the (z-w)^{-k} coefficient a_(k-1)b;
    the list is sorted by descending pole order.
    """
    bound = (weight2(space, a) + weight2(space, b)) // 2
    out = []
    for n in range(bound, -1, -1):
        c = nth_product(space, a, b, n)
        if not c.is_zero():
            out.append((n + 1, c))
    return out


def state_parity(state: State):
    """0/1 fermion parity when homogeneous, None for mixed or zero states."""
    ps = {sum(1 for m in mono if m.fam == FERMION) % 2 for mono in state.terms}
    if len(ps) == 1:
        return ps.pop()
    return None


def skew_symmetry_check(space, a, b, max_n):
    """Check a_(n)b = (-1)^{|a||b|} sum_j (-1)^{n+j+1} T^j(b_(n+j)a)/j!.

    Both sides are evaluated independently for |n| <= max_n; returns a
    report dict with the first failing n, if any.
    """
    pa, pb = state_parity(a), state_parity(b)
    if pa is None or pb is None:
        raise ValueError("skew symmetry needs parity-homogeneous states")
    sign = -1 if pa and pb else 1
    jmax = (weight2(space, a) + weight2(space, b)) // 2 + max_n + 2
    for n in range(-max_n, max_n + 1):
        lhs = nth_product(space, a, b, n)
        rhs = zero()
        for j in range(0, jmax):
            t = nth_product(space, b, a, n + j)
            if t.is_zero():
                continue
            for _ in range(j):
                t = translate(space, t)
            s = sign if (n + j + 1) % 2 == 0 else -sign
            rhs = rhs + Fraction(s, factorial(j)) * t
        if lhs != rhs:
            return {"ok": False, "first_failure": n, "lhs": lhs, "rhs": rhs}
    return {"ok": True, "first_failure": None}


def commutator_check(space, a, b, m, n, probe: State):
    """Borcherds commutator formula on a probe state.

    [a_(m), b_(n)] probe  vs  sum_{j>=0} binom(m, j) (a_(j)b)_(m+n-j) probe,
    with the supercommutator sign for odd a, b.
    """
    pa, pb = state_parity(a), state_parity(b)
    if pa is None or pb is None:
        raise ValueError("commutator check needs parity-homogeneous states")
    sign = -1 if pa and pb else 1
    lhs = nth_product(space, a, nth_product(space, b, probe, n), m) - \
        Fraction(sign) * nth_product(space, b, nth_product(space, a, probe, m), n)
    rhs = zero()
    for j in range(0, (weight2(space, a) + weight2(space, b)) // 2 + 1):
        c = gen_binom(m, j)
        if c == 0:
            continue
        ab = nth_product(space, a, b, j)
        if ab.is_zero():
            continue
        rhs = rhs + Fraction(c) * nth_product(space, ab, probe, m + n - j)
    return {"ok": lhs == rhs, "lhs": lhs, "rhs": rhs}
