"""Exact symbolic engine for free-field superconformal vertex algebras.

Bosonic and fermionic Fock spaces over a finite-dimensional complex
inner-product space (NS and R sectors, orthonormal / polarized /
quaternionic), with exact n-th products, OPE singular parts, and
mechanical verification of the superconformal structures, twists, BRST
cohomology, characters, and special-holonomy OPE tables.  All arithmetic
is over Q.
"""

from .space import (NS, R, Mode, SpaceSpec, SpaceError, boson, fermion,
                    make_space)
from .state import State, make_state, vacuum
from .fields import normally_ordered, nth_product, ope_singular, translate
from .parser import ParseError, format_state, parse_state

__all__ = [
    "NS", "R", "Mode", "SpaceSpec", "SpaceError", "boson", "fermion",
    "make_space", "State", "make_state", "vacuum", "normally_ordered",
    "nth_product", "ope_singular", "translate", "ParseError",
    "format_state", "parse_state",
]

__version__ = "0.1.0"
