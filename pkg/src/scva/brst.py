"""BRST operator and exact cohomology on truncated blocks.

Q0 is the zero mode of the twist's Q field.  It preserves the twisted
weight (the T0 eigenvalue) and shifts the U(1) charge by +1 (A twist)
or -1 (B twist), so the complex splits into finite blocks keyed by
(twisted weight, charge).  Ranks are computed over Q, so the reported
dimensions are certified.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from .space import BOSON, FERMION, Mode, SpaceSpec, NS, mode_charge, mode_weight2
from .state import State, monomial_charge, monomial_weight2
from .fields import normally_ordered, nth_product
from .linalg import in_column_span, rank
from .structures import n2_structure, twist

DEFAULT_BUDGET = 20000


class BudgetError(RuntimeError):
    """Raised when a block enumeration would exceed the basis-size budget."""


def basis_budget() -> int:
    return int(os.environ.get("SCVA_BASIS_BUDGET", DEFAULT_BUDGET))


def twisted_mode_weight2(space, m: Mode, which: str) -> int:
    """Twice the T0 eigenvalue of a creation mode under the A or B twist."""
    w2 = mode_weight2(space, m)
    q = mode_charge(space, m)
    return w2 - q if which == "A" else w2 + q


def _creation_modes_upto(space, which, cutoff2):
    """All creation modes of twisted weight <= cutoff2 (those of weight 0 included)."""
    out = []
    for tag in (0, 1) if space.polarized else (0,):
        for gen in range(1, space.ngen + 1):
            # bosons: idx -1, -2, ...
            k = 1
            while True:
                m = Mode(BOSON, tag, gen, -2 * k)
                if twisted_mode_weight2(space, m, which) > cutoff2:
                    break
                out.append(m)
                k += 1
            # fermions: walk creation indices downward from the sector's top one
            top = -1 if space.sector == NS else (0 if tag == 0 else -2)
            idx2 = top
            while True:
                m = Mode(FERMION, tag, gen, idx2)
                if twisted_mode_weight2(space, m, which) > cutoff2:
                    break
                out.append(m)
                idx2 -= 2
    return out


def enumerate_monomials(space, which, cutoff2, budget=None):
    """All basis monomials of twisted weight <= cutoff2, grouped into blocks.

    Returns {(tweight2, charge): [monomial, ...]} with deterministic order.
    """
    budget = budget if budget is not None else basis_budget()
    modes = sorted(_creation_modes_upto(space, which, cutoff2))
    monos = [()]
    for m in modes:
        tw2 = twisted_mode_weight2(space, m, which)
        new = []
        for mono in monos:
            w = monomial_twisted_weight2(space, mono, which)
            if m.fam == FERMION:
                if w + tw2 <= cutoff2:
                    new.append(mono + (m,))
            else:
                mult = 1
                if tw2 == 0:
                    raise AssertionError("bosonic modes have positive twisted weight")
                while w + mult * tw2 <= cutoff2:
                    new.append(mono + (m,) * mult)
                    mult += 1
        monos.extend(new)
        if len(monos) > budget:
            raise BudgetError(
                f"basis would exceed budget ({len(monos)} > {budget} monomials)")
    blocks = {}
    for mono in monos:
        key = (monomial_twisted_weight2(space, mono, which), monomial_charge(space, mono))
        blocks.setdefault(key, []).append(tuple(sorted(mono)))
    for v in blocks.values():
        v.sort()
    return blocks


def monomial_twisted_weight2(space, mono, which) -> int:
    return sum(twisted_mode_weight2(space, m, which) for m in mono)


@dataclass
class TruncatedBlock:
    space: SpaceSpec
    twist: str
    weight2: int
    charge: int
    basis: list
    matrix: list  # Q0 from this block to (weight2, charge +/- 1), rows = target basis


def brst_blocks(space, which, weight_cutoff, budget=None):
    """Q0 matrices on all blocks of twisted weight <= cutoff.

    Returns (blocks dict keyed by (weight2, charge), charge step).
    """
    struct = twist(n2_structure(space), which)
    q_state = struct.vectors["Q"]
    step = 1 if which == "A" else -1
    cutoff2 = int(2 * Fraction(weight_cutoff))
    raw = enumerate_monomials(space, which, cutoff2, budget)
    index = {key: {mono: i for i, mono in enumerate(basis)} for key, basis in raw.items()}
    blocks = {}
    for (w2, q), basis in sorted(raw.items()):
        tkey = (w2, q + step)
        tbasis = raw.get(tkey, [])
        tindex = index.get(tkey, {})
        matrix = [[Fraction(0)] * len(basis) for _ in tbasis]
        for col, mono in enumerate(basis):
            img = nth_product(space, q_state, State({mono: 1}), 0)
            for tmono, c in img.terms.items():
                row = tindex.get(tmono)
                if row is None:
                    raise AssertionError(
                        f"Q0 left the block lattice at {(w2, q)} -> {tmono}")
                matrix[row][col] = c
        blocks[(w2, q)] = TruncatedBlock(space, which, w2, q, basis, matrix)
    return blocks, step


def cohomology_dims(space, which, weight_cutoff, budget=None):
    """Exact BRST cohomology dimensions per (twisted weight, charge) block."""
    blocks, step = brst_blocks(space, which, weight_cutoff, budget)
    dims = {}
    for (w2, q), blk in blocks.items():
        n = len(blk.basis)
        rk_out = rank(blk.matrix) if blk.matrix else 0
        prev = blocks.get((w2, q - step))
        rk_in = rank(prev.matrix) if prev and prev.matrix else 0
        d = n - rk_out - rk_in
        if d:
            dims[(Fraction(w2, 2), q)] = d
    return dims


def cohomology_ring_check(space, which, cutoff=2, budget=None):
    """Check that the induced product on cohomology is the exterior algebra.

    In the R sector the A-twist classes are represented by the weight-0
    modes psi^i_{-1} (phi^i_0 for the B twist); products go through the
    normally ordered product and are compared modulo im Q0.
    """
    if space.sector != "R":
        raise ValueError("the ring check applies to the R sector")
    blocks, step = brst_blocks(space, which, cutoff, budget)
    n = space.pairs
    if which == "A":
        gen_mode = lambda i: Mode(FERMION, 1, i, -2)
    else:
        gen_mode = lambda i: Mode(FERMION, 0, i, 0)
    gens = [State({(gen_mode(i),): Fraction(1)}) for i in range(1, n + 1)]
    results = []

    def project_ok(prod, expected, charge):
        """prod == expected modulo im Q0 in the twisted-weight-0 block."""
        diff = prod - expected
        if diff.is_zero():
            return True
        blk = blocks.get((0, charge - step))
        if blk is None or not blk.matrix:
            return False
        tgt = blocks[(0, charge)]
        idx = {mono: i for i, mono in enumerate(tgt.basis)}
        vec = [Fraction(0)] * len(tgt.basis)
        for mono, c in diff.terms.items():
            if mono not in idx:
                return False
            vec[idx[mono]] = c
        return in_column_span(blk.matrix, vec)

    qsign = step
    for i in range(n):
        for k in range(n):
            prod = normally_ordered(space, gens[i], gens[k])
            expected = _wedge_pair(gens[i], gens[k])
            ok = project_ok(prod, expected, 2 * qsign)
            results.append({"id": f"ring.{i+1}.{k+1}", "ok": ok})
            # anticommutativity on degree-1 classes
            back = normally_ordered(space, gens[k], gens[i])
            results.append({"id": f"anticomm.{i+1}.{k+1}",
                            "ok": project_ok(prod + back, State(), 2 * qsign)})
    return {"checks": results, "passed": all(r["ok"] for r in results)}


def _wedge_pair(x: State, y: State) -> State:
    """Exterior product of two single-mode states."""
    monox, monoy = next(iter(x.terms)), next(iter(y.terms))
    (mx,), (my,) = monox, monoy
    cx, cy = x.terms[monox], y.terms[monoy]
    if mx == my:
        return State()
    if mx < my:
        return State({(mx, my): cx * cy})
    return State({(my, mx): -cx * cy})
