"""Shared test utilities: random states and linear generator substitutions."""

import random
from fractions import Fraction

from scva.space import BOSON, FERMION, Mode, NS
from scva.state import State, apply_mode, vacuum


def substitute(space, state, mat):
    """Extend the generator map e^i -> sum_j mat[i][j] e^j multiplicatively.

    mat is {gen: {gen: Fraction}}, applied to every family and copy tag.
    """
    out = State()
    for mono, c in state.terms.items():
        acc = c * vacuum(space)
        for m in reversed(mono):
            nxt = State()
            for g, coeff in mat.get(m.gen, {m.gen: 1}).items():
                nxt = nxt + Fraction(coeff) * apply_mode(space, m._replace(gen=g), acc)
            acc = nxt
        out = out + acc
    return out


def creation_modes(space, max_weight2):
    from scva.space import mode_weight2

    out = []
    for tag in (0, 1) if space.polarized else (0,):
        for gen in range(1, space.ngen + 1):
            k = 1
            while 2 * k <= max_weight2:
                out.append(Mode(BOSON, tag, gen, -2 * k))
                k += 1
            idx2 = -1 if space.sector == NS else (0 if tag == 0 else -2)
            while True:
                m = Mode(FERMION, tag, gen, idx2)
                if mode_weight2(space, m) > max_weight2:
                    break
                out.append(m)
                idx2 -= 2
    return out


def random_state(space, rng: random.Random, max_weight2=4, max_terms=2, max_len=2):
    """Parity-homogeneous random state (the axioms need a definite parity)."""
    modes = creation_modes(space, max_weight2)
    parity = rng.randint(0, 1)
    st = State()
    for _ in range(rng.randint(1, max_terms)):
        for _try in range(20):
            mono_modes = rng.sample(modes, k=rng.randint(0, max_len))
            if sum(1 for m in mono_modes if m.fam == FERMION) % 2 == parity:
                break
        else:
            continue
        acc = Fraction(rng.randint(-3, 3) or 1) * vacuum(space)
        for m in mono_modes:
            acc = apply_mode(space, m, acc)
        st = st + acc
    return st
