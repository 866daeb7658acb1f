"""Exact states of the Fock spaces B(T,g) x F(T,g).

A monomial is a tuple of creation modes in the canonical total order
(fermions first, then by copy tag, generator, mode index).  Fermionic
modes never repeat; bosonic ones may.  A state is a finite sparse map
monomial -> rational, with Koszul signs absorbed at canonicalization.
"""

from __future__ import annotations

from bisect import bisect_left, insort
from fractions import Fraction

from .space import (
    BOSON,
    FERMION,
    Mode,
    SpaceSpec,
    is_creation,
    mode_charge,
    mode_weight2,
    paired_generator,
)

Monomial = tuple  # tuple[Mode, ...] in canonical order


class State:
    """Finite linear combination of canonical monomials over Q."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c:
                    self.terms[mono] = c

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        res = State()
        res.terms = out
        return res

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        res = State()
        if scalar:
            res.terms = {m: scalar * c for m, c in self.terms.items()}
        return res

    def __neg__(self):
        return -1 * self

    def __eq__(self, other):
        return isinstance(other, State) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"State({self.terms!r})"


def zero() -> State:
    return State()


def vacuum(space: SpaceSpec) -> State:
    return State({(): Fraction(1)})


def monomial_weight2(space, mono) -> int:
    return sum(mode_weight2(space, m) for m in mono)


def monomial_charge(space, mono) -> int:
    return sum(mode_charge(space, m) for m in mono)


def weight2(space, state: State):
    """Max twice-weight over the monomials of the state (0 for the zero state)."""
    if state.is_zero():
        return 0
    return max(monomial_weight2(space, m) for m in state.terms)


def mult_mode(mono, mode):
    """Left-multiply a creation mode into a canonical monomial.

    Returns (sign, new_mono), or None when a fermionic mode repeats.
    The sign is the Koszul sign of moving the operator past the
    fermionic modes preceding its slot.
    """
    pos = bisect_left(mono, mode)
    if mode.fam == FERMION:
        if pos < len(mono) and mono[pos] == mode:
            return None
        # everything before pos is fermionic because fermions sort first
        sign = -1 if pos % 2 else 1
    else:
        sign = 1
    return sign, mono[:pos] + (mode,) + mono[pos:]


def remove_at(mono, pos):
    return mono[:pos] + mono[pos + 1:]


def apply_mode(space: SpaceSpec, mode: Mode, state: State) -> State:
    """Action of a single raw mode operator u_k on a state.

    Creation modes multiply (exterior/symmetric product); bosonic
    annihilation at index n > 0 contracts each g-paired factor at -n
    with coefficient n times the multiplicity; fermionic annihilation
    contracts the g-paired creation mode with the Koszul sign; the
    bosonic zero mode acts as 0.
    """
    out = {}
    if mode.fam == BOSON and mode.idx2 == 0:
        return State()
    if is_creation(space, mode):
        for mono, c in state.terms.items():
            r = mult_mode(mono, mode)
            if r is None:
                continue
            sign, new = r
            s = out.get(new, 0) + sign * c
            if s:
                out[new] = s
            else:
                out.pop(new, None)
    else:
        tag, gen = paired_generator(space, mode)
        target = Mode(mode.fam, tag, gen, -mode.idx2)
        for mono, c in state.terms.items():
            pos = bisect_left(mono, target)
            if pos == len(mono) or mono[pos] != target:
                continue
            if mode.fam == BOSON:
                mult = 1
                while pos + mult < len(mono) and mono[pos + mult] == target:
                    mult += 1
                coeff = Fraction(mode.idx2, 2) * mult * c
            else:
                coeff = -c if pos % 2 else c
            new = remove_at(mono, pos)
            s = out.get(new, 0) + coeff
            if s:
                out[new] = s
            else:
                out.pop(new, None)
    res = State()
    res.terms = out
    return res


def make_state(space, *terms) -> State:
    """Build a state from (coefficient, [modes...]) pairs.

    Modes are applied right-to-left to the vacuum, so the list reads in
    operator order; they need not be pre-sorted.
    """
    total = State()
    for coeff, modes in terms:
        s = vacuum(space)
        for m in reversed(modes):
            s = apply_mode(space, m, s)
        total = total + Fraction(coeff) * s
    return total


def grading(space: SpaceSpec, state: State):
    """Decompose into simultaneous (weight, charge) eigencomponents.

    Returns a list of (weight, charge, component) sorted by the pair,
    with exact rational weights.
    """
    buckets = {}
    for mono, c in state.terms.items():
        key = (monomial_weight2(space, mono), monomial_charge(space, mono))
        buckets.setdefault(key, {})[mono] = c
    out = []
    for (w2, q) in sorted(buckets):
        comp = State()
        comp.terms = buckets[(w2, q)]
        out.append((Fraction(w2, 2), q, comp))
    return out


def is_homogeneous(space, state, weight2_=None, charge_=None) -> bool:
    parts = grading(space, state)
    if len(parts) > 1:
        return False
    if not parts:
        return True
    w, q, _ = parts[0]
    if weight2_ is not None and 2 * w != weight2_:
        return False
    if charge_ is not None and q != charge_:
        return False
    return True
