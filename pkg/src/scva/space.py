"""Underlying spaces and mode labels for the free-field Fock algebras.

A space is a finite-dimensional complex vector space T with an inner
product g, either with an orthonormal basis {e^i} or with a polarization
T = T' + T'' and dual bases (e^i, f^i), g(e^i, f^j) = delta.  Each space
carries a bosonic and a fermionic copy of T; the fermionic copy lives in
the NS or the R sector.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

NS = "NS"
R = "R"

FERMION = 0
BOSON = 1


class SpaceError(ValueError):
    pass


class Mode(NamedTuple):
    """One creation/annihilation operator label.

    fam: FERMION or BOSON (fermions sort first in the canonical order).
    tag: 0 for the unprimed copy (a, b, phi), 1 for the primed copy (c, psi).
    gen: generator index, 1-based.
    idx2: twice the mode index, so NS half-integers stay integral.
    """

    fam: int
    tag: int
    gen: int
    idx2: int


@dataclass(frozen=True)
class SpaceSpec:
    dim: int
    sector: str = NS
    polarized: bool = False
    quaternionic: bool = False

    @property
    def pairs(self) -> int:
        """Number of (e^i, f^i) pairs; only meaningful when polarized."""
        return self.dim // 2

    @property
    def ngen(self) -> int:
        """Number of generators per copy (dim if orthonormal, dim/2 if polarized)."""
        return self.pairs if self.polarized else self.dim


def make_space(dim, sector=NS, polarized=False, quaternionic=False) -> SpaceSpec:
    if dim <= 0:
        raise SpaceError("dim must be positive")
    if sector not in (NS, R):
        raise SpaceError(f"unknown sector {sector!r}")
    if polarized and dim % 2 != 0:
        raise SpaceError("polarized space must have even dim")
    if quaternionic and not polarized:
        raise SpaceError("quaternionic space must be polarized")
    if quaternionic and dim % 4 != 0:
        raise SpaceError("quaternionic space must have dim divisible by 4")
    if sector == R and not polarized:
        raise SpaceError("R sector requires a polarization")
    return SpaceSpec(dim, sector, polarized, quaternionic)


def check_mode(space: SpaceSpec, m: Mode) -> None:
    """Raise SpaceError unless m is a legal mode label for the space."""
    if m.fam not in (FERMION, BOSON):
        raise SpaceError(f"bad family {m.fam}")
    if m.tag not in (0, 1) or (m.tag == 1 and not space.polarized):
        raise SpaceError(f"bad copy tag {m.tag} for this space")
    if not 1 <= m.gen <= space.ngen:
        raise SpaceError(f"generator index {m.gen} out of range 1..{space.ngen}")
    if m.fam == BOSON:
        if m.idx2 % 2 != 0:
            raise SpaceError("bosonic mode index must be an integer")
    elif space.sector == NS:
        if m.idx2 % 2 == 0:
            raise SpaceError("NS fermionic mode index must be a half-integer")
    else:
        if m.idx2 % 2 != 0:
            raise SpaceError("R fermionic mode index must be an integer")


def is_creation(space: SpaceSpec, m: Mode) -> bool:
    if m.fam == BOSON:
        return m.idx2 <= -2
    if space.sector == NS:
        return m.idx2 <= -1
    # R sector: phi^i_0 creates, psi creators start at index -1
    return m.idx2 <= 0 if m.tag == 0 else m.idx2 <= -2


def mode_weight2(space: SpaceSpec, m: Mode) -> int:
    """Twice the L0 weight contributed by a creation mode."""
    if m.fam == BOSON or space.sector == NS:
        return -m.idx2
    # R sector: phi_{-n+1} weighs n - 1/2, psi_{-n} weighs n - 1/2
    return -m.idx2 + 1 if m.tag == 0 else -m.idx2 - 1


def mode_charge(space: SpaceSpec, m: Mode) -> int:
    """J0 charge of a creation mode: +1 per psi, -1 per phi when polarized."""
    if m.fam == FERMION and space.polarized:
        return 1 if m.tag == 1 else -1
    return 0


def mode_index(m: Mode) -> Fraction:
    return Fraction(m.idx2, 2)


def mode_name(space: SpaceSpec, m: Mode) -> str:
    if m.fam == BOSON:
        base = ("b" if space.polarized else "a") if m.tag == 0 else "c"
    else:
        base = "phi" if m.tag == 0 else "psi"
    return f"{base}{m.gen}"


def paired_generator(space: SpaceSpec, m: Mode) -> tuple[int, int]:
    """(tag, gen) of the generator g-paired with m's generator."""
    if space.polarized:
        return (1 - m.tag, m.gen)
    return (m.tag, m.gen)


def boson(space, gen, idx, tag=0) -> Mode:
    m = Mode(BOSON, tag, gen, int(2 * Fraction(idx)))
    check_mode(space, m)
    return m


def fermion(space, gen, idx, tag=0) -> Mode:
    m = Mode(FERMION, tag, gen, int(2 * Fraction(idx)))
    check_mode(space, m)
    return m
