"""Graded characters G_q and G_{q,y}, by enumeration and by product formulas.

Two independent routes to the same series: `enumerate_character` walks the
monomial basis and tallies (weight, charge) eigenvalues, while
`product_character` expands the closed-form infinite products.  Agreement to
a cutoff is the certificate.

q-exponents are half-integers, stored doubled (q2 = 2*exponent) so all keys
are ints.  The ground-energy shift -dim T/16 is kept as a symbolic prefactor
and never folded into the coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .space import BOSON, FERMION, Mode, NS, R, mode_charge, mode_weight2
from .brst import BudgetError, basis_budget, twisted_mode_weight2

GRADINGS = ("untwisted", "A", "B")
FORMULAS = ("riemannian", "n2", "a_twist", "b_twist")


class QYSeries:
    """Truncated series in q^{1/2} and y with integer coefficients.

    terms: {(q2, y): coeff} with q2 = 2*(q-exponent); cutoff2 = 2*cutoff.
    prefactor: rational exponent e0 so the full series is q^{e0} * sum(...).
    """

    __slots__ = ("terms", "cutoff2", "prefactor")

    def __init__(self, cutoff2, prefactor=Fraction(0), terms=None):
        self.cutoff2 = int(cutoff2)
        self.prefactor = Fraction(prefactor)
        self.terms = dict(terms) if terms else {}

    def add(self, q2, y, coeff):
        if q2 > self.cutoff2 or coeff == 0:
            return
        key = (q2, y)
        c = self.terms.get(key, 0) + coeff
        if c:
            self.terms[key] = c
        else:
            self.terms.pop(key, None)

    def coeff(self, q2, y=0):
        return self.terms.get((q2, y), 0)

    def __eq__(self, other):
        return (isinstance(other, QYSeries)
                and self.cutoff2 == other.cutoff2
                and self.prefactor == other.prefactor
                and self.terms == other.terms)

    def __mul__(self, other):
        if not isinstance(other, QYSeries):
            return NotImplemented
        if self.cutoff2 != other.cutoff2:
            raise ValueError("cutoff mismatch in series product")
        out = QYSeries(self.cutoff2, self.prefactor + other.prefactor)
        for (q2a, ya), ca in self.terms.items():
            for (q2b, yb), cb in other.terms.items():
                out.add(q2a + q2b, ya + yb, ca * cb)
        return out

    def specialize_y1(self):
        out = QYSeries(self.cutoff2, self.prefactor)
        for (q2, _y), c in self.terms.items():
            out.add(q2, 0, c)
        return out

    def map_y_inverse(self):
        """The series with y -> 1/y."""
        out = QYSeries(self.cutoff2, self.prefactor)
        for (q2, y), c in self.terms.items():
            out.add(q2, -y, c)
        return out

    def to_json(self):
        terms = [{"q2": q2, "y": y, "coeff": c}
                 for (q2, y), c in sorted(self.terms.items())]
        return {"cutoff2": self.cutoff2,
                "prefactor_num": self.prefactor.numerator,
                "prefactor_den": self.prefactor.denominator,
                "terms": terms}

    def format_text(self):
        lines = []
        if self.prefactor:
            lines.append(f"prefactor q^({self.prefactor})")
        for (q2, y), c in sorted(self.terms.items()):
            qpart = "1" if q2 == 0 else f"q^{Fraction(q2, 2)}"
            ypart = "" if y == 0 else (" y" if y == 1 else f" y^{y}")
            lines.append(f"{qpart}{ypart}: {c}")
        return "\n".join(lines) if lines else "0"

    def __repr__(self):
        return f"QYSeries(cutoff2={self.cutoff2}, terms={len(self.terms)})"


def _mode_grading(space, m, grading):
    """(doubled weight, y-exponent) of a creation mode in the given grading."""
    if grading == "untwisted":
        return mode_weight2(space, m), (mode_charge(space, m) if space.polarized else 0)
    q = mode_charge(space, m)
    return twisted_mode_weight2(space, m, grading), (q if grading == "A" else -q)


def _modes_upto(space, grading, cutoff2):
    out = []
    for tag in (0, 1) if space.polarized else (0,):
        for gen in range(1, space.ngen + 1):
            k = 1
            while True:
                m = Mode(BOSON, tag, gen, -2 * k)
                if _mode_grading(space, m, grading)[0] > cutoff2:
                    break
                out.append(m)
                k += 1
            top = -1 if space.sector == NS else (0 if tag == 0 else -2)
            idx2 = top
            while True:
                m = Mode(FERMION, tag, gen, idx2)
                if _mode_grading(space, m, grading)[0] > cutoff2:
                    break
                out.append(m)
                idx2 -= 2
    return out


def enumerate_character(space, grading, cutoff, budget=None):
    """G_{q,y} by explicit count of the monomial basis up to the cutoff."""
    if grading not in GRADINGS:
        raise ValueError(f"unknown grading {grading!r}")
    if grading != "untwisted" and not (space.sector == R and space.polarized):
        raise ValueError("A/B gradings need a polarized R-sector space")
    budget = budget if budget is not None else basis_budget()
    cutoff2 = int(2 * Fraction(cutoff))
    series = QYSeries(cutoff2, Fraction(-space.dim, 16))
    # states reached so far, keyed by (weight2, y): count
    reached = {(0, 0): 1}
    total = 1
    for m in _modes_upto(space, grading, cutoff2):
        w2, y = _mode_grading(space, m, grading)
        new = {}
        for (rw2, ry), cnt in reached.items():
            if m.fam == FERMION:
                if rw2 + w2 <= cutoff2:
                    key = (rw2 + w2, ry + y)
                    new[key] = new.get(key, 0) + cnt
            else:
                mult = 1
                while rw2 + mult * w2 <= cutoff2:
                    key = (rw2 + mult * w2, ry + mult * y)
                    new[key] = new.get(key, 0) + cnt
                    mult += 1
        for key, cnt in new.items():
            reached[key] = reached.get(key, 0) + cnt
            total += cnt
        if total > budget:
            raise BudgetError(
                f"character basis would exceed budget ({total} > {budget})")
    for (w2, y), cnt in reached.items():
        series.add(w2, y, cnt)
    return series


def _lambda_factor(cutoff2, w2, y, rk):
    """Lambda_t of a rank-rk space, t = y^{y} q^{w2/2}, truncated."""
    s = QYSeries(cutoff2)
    kmax = rk if w2 == 0 else min(rk, cutoff2 // w2)
    for k in range(kmax + 1):
        s.add(k * w2, k * y, comb(rk, k))
    return s


def _sym_factor(cutoff2, w2, y, rk):
    """S_t of a rank-rk space, t = y^{y} q^{w2/2}, truncated."""
    if w2 <= 0:
        raise ValueError("symmetric factors need positive weight")
    s = QYSeries(cutoff2)
    for k in range(cutoff2 // w2 + 1):
        s.add(k * w2, k * y, comb(rk + k - 1, k) if k else 1)
    return s


def product_character(formula, dims, cutoff, sign_flip=False):
    """Expand one of the closed-form character products to the cutoff.

    dims is a plain rank for `riemannian`, or (dim T', dim T'') for the
    polarized formulas.  `sign_flip` flips the sign of the fermionic
    variables in the riemannian product (the (-1)^F insertion).
    """
    if formula not in FORMULAS:
        raise ValueError(f"unknown formula {formula!r}")
    cutoff2 = int(2 * Fraction(cutoff))
    if formula == "riemannian":
        d = int(dims)
        out = QYSeries(cutoff2, Fraction(-d, 16))
        out.add(0, 0, 1)
        n = 1
        while 2 * n - 1 <= cutoff2:
            # Lambda_{q^{n-1/2}} on rank d; expand with an optional sign flip
            f = QYSeries(cutoff2)
            for k in range(min(d, cutoff2 // (2 * n - 1)) + 1):
                f.add(k * (2 * n - 1), 0, (-1) ** k * comb(d, k) if sign_flip else comb(d, k))
            out = out * f
            if 2 * n <= cutoff2:
                out = out * _sym_factor(cutoff2, 2 * n, 0, d)
            n += 1
        return out
    dp, dpp = dims
    out = QYSeries(cutoff2, Fraction(-(dp + dpp), 16))
    out.add(0, 0, 1)
    if formula == "n2":
        lam = lambda n: ((2 * n - 1, -1, dp), (2 * n - 1, 1, dpp))
    elif formula == "a_twist":
        lam = lambda n: ((2 * n, -1, dp), (2 * n - 2, 1, dpp))
    else:  # b_twist
        lam = lambda n: ((2 * n - 2, 1, dp), (2 * n, -1, dpp))
    n = 1
    while True:
        used = False
        for w2, y, rk in lam(n):
            if w2 <= cutoff2 and not (w2 == 0 and n > 1):
                out = out * _lambda_factor(cutoff2, w2, y, rk)
                used = True
        if 2 * n <= cutoff2:
            out = out * _sym_factor(cutoff2, 2 * n, 0, dp)
            out = out * _sym_factor(cutoff2, 2 * n, 0, dpp)
            used = True
        if not used:
            break
        n += 1
    return out


def compare_characters(lhs: QYSeries, rhs: QYSeries):
    """Coefficientwise comparison; reports the first mismatch if any."""
    if lhs.cutoff2 != rhs.cutoff2:
        raise ValueError("character comparison needs matching cutoffs")
    report = {"equal": True, "prefactor_equal": lhs.prefactor == rhs.prefactor,
              "first_mismatch": None}
    if not report["prefactor_equal"]:
        report["equal"] = False
    for key in sorted(set(lhs.terms) | set(rhs.terms)):
        a, b = lhs.terms.get(key, 0), rhs.terms.get(key, 0)
        if a != b:
            report["equal"] = False
            report["first_mismatch"] = {"q2": key[0], "y": key[1],
                                        "lhs": a, "rhs": b}
            break
    return report
