"""Distinguished vectors of the (super)conformal structures and their verifiers.

Conventions.  All vectors are built verbatim from their defining free-field
displays.  With those normalizations the mixed supercurrent and SU(2)-current
OPEs close with central terms at half the textbook values (the supercurrents
carry a 1/sqrt(2) relative to the usual normalization, which cannot be fixed
rationally); every non-central pole is standard.  The verifiers check the
relation set actually satisfied by the construction:

    G-(z)G+(w) ~ (c/3)/(z-w)^3 - J/(z-w)^2 + (L - d J/2)/(z-w)
    Gt+(z)Gt-(w) ~ (c/3)/(z-w)^3 + J/(z-w)^2 + (L + d J/2)/(z-w)
    J--(z)J++(w) ~ -(c/6)/(z-w)^2 + J/(z-w)

This is the normalization in which a tau+ + (1/a) tau- is exactly an N=1
superconformal vector and the A/B twists satisfy the topological OPE list
Q(z)G(w) ~ d/(z-w)^3 + J/(z-w)^2 + T/(z-w) with rank d = c/3.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .space import NS, SpaceSpec, SpaceError, boson, fermion
from .state import State, make_state, vacuum
from .fields import nth_product, translate

HALF = Fraction(1, 2)


@dataclass
class StructureSpec:
    kind: str  # Virasoro | N1 | N2 | N4 | Topological
    space: SpaceSpec
    vectors: dict
    claimed_c: Fraction  # central charge, or rank d for Topological
    twist: str | None = None  # A | B on Topological structures


@dataclass
class Report:
    """Structured verification report: one record per relation."""

    checks: list = field(default_factory=list)

    def add(self, rid, lhs: State, rhs: State):
        self.checks.append({"id": rid, "ok": lhs == rhs, "lhs": lhs, "rhs": rhs})

    @property
    def passed(self):
        return all(c["ok"] for c in self.checks)

    @property
    def failures(self):
        return [c for c in self.checks if not c["ok"]]

    def failed_ids(self):
        return [c["id"] for c in self.failures]


def _fermion_indices(space):
    """Creation indices playing the roles (phi_{-1/2}, phi_{-3/2}, psi_{-1/2}, psi_{-3/2}).

    In the R sector the Proposition's substitution rule shifts them to
    (phi_0, phi_{-1}, psi_{-1}, psi_{-2}).
    """
    if space.sector == NS:
        return -HALF, -3 * HALF, -HALF, -3 * HALF
    return Fraction(0), Fraction(-1), Fraction(-1), Fraction(-2)


def conformal_boson(space) -> StructureSpec:
    """nu_B = 1/2 sum a^i_{-1}a^i_{-1} (orthonormal) or sum b^i_{-1}c^i_{-1}; c = dim T."""
    if space.polarized:
        nu = make_state(space, *[(1, [boson(space, i, -1, 0), boson(space, i, -1, 1)])
                                 for i in range(1, space.pairs + 1)])
    else:
        nu = make_state(space, *[(HALF, [boson(space, i, -1), boson(space, i, -1)])
                                 for i in range(1, space.dim + 1)])
    return StructureSpec("Virasoro", space, {"nu": nu}, Fraction(space.dim))


def conformal_fermion(space) -> StructureSpec:
    """nu_F = 1/2 sum phi^i_{-3/2}phi^i_{-1/2}; c = dim T / 2 (orthonormal NS)."""
    if space.polarized or space.sector != NS:
        raise SpaceError("nu_F needs an orthonormal NS space")
    nu = make_state(space, *[(HALF, [fermion(space, i, -3 * HALF), fermion(space, i, -HALF)])
                             for i in range(1, space.dim + 1)])
    return StructureSpec("Virasoro", space, {"nu": nu}, Fraction(space.dim, 2))


def polarized_fermion_conformal(space, lam) -> StructureSpec:
    """nu_lambda on the polarized fermionic sector; c = -(6 lam^2 - 6 lam + 1) dim T."""
    if not space.polarized:
        raise SpaceError("nu_lambda needs a polarized space")
    lam = Fraction(lam)
    iphi, iphi3, ipsi, ipsi3 = _fermion_indices(space)
    nu = make_state(
        space,
        *[(1 - lam, [fermion(space, i, iphi3, 0), fermion(space, i, ipsi, 1)])
          for i in range(1, space.pairs + 1)],
        *[(lam, [fermion(space, i, ipsi3, 1), fermion(space, i, iphi, 0)])
          for i in range(1, space.pairs + 1)])
    c = -(6 * lam * lam - 6 * lam + 1) * space.dim
    return StructureSpec("Virasoro", space, {"nu": nu}, c)


def n1_structure(space) -> StructureSpec:
    """tau = sum a^i_{-1}phi^i_{-1/2}; c = (3/2) dim T (orthonormal NS)."""
    if space.polarized or space.sector != NS:
        raise SpaceError("the N=1 construction needs an orthonormal NS space")
    nu = conformal_boson(space).vectors["nu"] + conformal_fermion(space).vectors["nu"]
    tau = make_state(space, *[(1, [boson(space, i, -1), fermion(space, i, -HALF)])
                              for i in range(1, space.dim + 1)])
    return StructureSpec("N1", space, {"nu": nu, "tau": tau}, Fraction(3 * space.dim, 2))


def n2_structure(space) -> StructureSpec:
    """The polarized N=2 vectors (NS or R); c = (3/2) dim T."""
    if not space.polarized:
        raise SpaceError("the N=2 construction needs a polarized space")
    iphi, iphi3, ipsi, ipsi3 = _fermion_indices(space)
    rng = range(1, space.pairs + 1)
    taup = make_state(space, *[(1, [boson(space, i, -1, 0), fermion(space, i, ipsi, 1)]) for i in rng])
    taum = make_state(space, *[(1, [boson(space, i, -1, 1), fermion(space, i, iphi, 0)]) for i in rng])
    j = make_state(space, *[(1, [fermion(space, i, ipsi, 1), fermion(space, i, iphi, 0)]) for i in rng])
    nu = make_state(
        space,
        *[(1, [boson(space, i, -1, 0), boson(space, i, -1, 1)]) for i in rng],
        *[(HALF, [fermion(space, i, iphi3, 0), fermion(space, i, ipsi, 1)]) for i in rng],
        *[(HALF, [fermion(space, i, ipsi3, 1), fermion(space, i, iphi, 0)]) for i in rng])
    return StructureSpec("N2", space, {"nu": nu, "tau+": taup, "tau-": taum, "j": j},
                         Fraction(3 * space.dim, 2))


def n4_structure(space) -> StructureSpec:
    """The quaternionic N=4 vector set; c = (3/2) dim T."""
    if not space.quaternionic:
        raise SpaceError("the N=4 construction needs a quaternionic space")
    base = n2_structure(space)
    iphi, _, ipsi, _ = _fermion_indices(space)
    rng = range(1, space.pairs // 2 + 1)
    ttp = make_state(space,
                     *[(1, [boson(space, 2 * i - 1, -1, 1), fermion(space, 2 * i, ipsi, 1)]) for i in rng],
                     *[(-1, [boson(space, 2 * i, -1, 1), fermion(space, 2 * i - 1, ipsi, 1)]) for i in rng])
    ttm = make_state(space,
                     *[(1, [boson(space, 2 * i - 1, -1, 0), fermion(space, 2 * i, iphi, 0)]) for i in rng],
                     *[(-1, [boson(space, 2 * i, -1, 0), fermion(space, 2 * i - 1, iphi, 0)]) for i in rng])
    jpp = make_state(space, *[(1, [fermion(space, 2 * i, ipsi, 1), fermion(space, 2 * i - 1, ipsi, 1)])
                              for i in rng])
    jmm = make_state(space, *[(1, [fermion(space, 2 * i, iphi, 0), fermion(space, 2 * i - 1, iphi, 0)])
                              for i in rng])
    vectors = dict(base.vectors)
    vectors.update({"taut+": ttp, "taut-": ttm, "j++": jpp, "j--": jmm})
    return StructureSpec("N4", space, vectors, base.claimed_c)


def _zero_like(v: State) -> State:
    return State()


def _check_virasoro(rep, space, nu, c, prefix="LL"):
    P = lambda a, b, n: nth_product(space, a, b, n)
    vac = vacuum(space)
    rep.add(f"{prefix}.0", P(nu, nu, 0), translate(space, nu))
    rep.add(f"{prefix}.1", P(nu, nu, 1), 2 * nu)
    rep.add(f"{prefix}.2", P(nu, nu, 2), State())
    rep.add(f"{prefix}.3", P(nu, nu, 3), Fraction(c, 2) * vac)
    rep.add(f"{prefix}.4", P(nu, nu, 4), State())


def _check_primary(rep, space, nu, a, weight2_, name, central=None):
    """L(z)a(w) poles of a primary of the given twice-weight."""
    P = lambda x, y, n: nth_product(space, x, y, n)
    rep.add(f"L{name}.0", P(nu, a, 0), translate(space, a))
    rep.add(f"L{name}.1", P(nu, a, 1), Fraction(weight2_, 2) * a)
    rep.add(f"L{name}.2", P(nu, a, 2),
            central if central is not None else State())
    rep.add(f"L{name}.3", P(nu, a, 3), State())


def verify_virasoro(struct: StructureSpec) -> Report:
    rep = Report()
    _check_virasoro(rep, struct.space, struct.vectors["nu"], struct.claimed_c)
    return rep


def verify_n1(struct: StructureSpec) -> Report:
    space, c = struct.space, struct.claimed_c
    nu, tau = struct.vectors["nu"], struct.vectors["tau"]
    P = lambda a, b, n: nth_product(space, a, b, n)
    rep = Report()
    _check_virasoro(rep, space, nu, c)
    _check_primary(rep, space, nu, tau, 3, "G")
    rep.add("GG.0", P(tau, tau, 0), 2 * nu)
    rep.add("GG.1", P(tau, tau, 1), State())
    rep.add("GG.2", P(tau, tau, 2), Fraction(2 * c, 3) * vacuum(space))
    rep.add("GG.3", P(tau, tau, 3), State())
    return rep


def verify_n2(struct: StructureSpec) -> Report:
    space, c = struct.space, struct.claimed_c
    nu, tp, tm, j = (struct.vectors[k] for k in ("nu", "tau+", "tau-", "j"))
    P = lambda a, b, n: nth_product(space, a, b, n)
    vac = vacuum(space)
    Tj = translate(space, j)
    rep = Report()
    _check_virasoro(rep, space, nu, c)
    _check_primary(rep, space, nu, tp, 3, "G+")
    _check_primary(rep, space, nu, tm, 3, "G-")
    _check_primary(rep, space, nu, j, 2, "J")
    rep.add("JJ.0", P(j, j, 0), State())
    rep.add("JJ.1", P(j, j, 1), Fraction(c, 3) * vac)
    rep.add("JJ.2", P(j, j, 2), State())
    rep.add("JG+.0", P(j, tp, 0), tp)
    rep.add("JG-.0", P(j, tm, 0), -1 * tm)
    rep.add("JG+.1", P(j, tp, 1), State())
    rep.add("JG-.1", P(j, tm, 1), State())
    for n in range(0, 3):
        rep.add(f"G+G+.{n}", P(tp, tp, n), State())
        rep.add(f"G-G-.{n}", P(tm, tm, n), State())
    rep.add("G-G+.0", P(tm, tp, 0), nu - HALF * Tj)
    rep.add("G-G+.1", P(tm, tp, 1), -1 * j)
    rep.add("G-G+.2", P(tm, tp, 2), Fraction(c, 3) * vac)
    rep.add("G-G+.3", P(tm, tp, 3), State())
    rep.add("G+G-.0", P(tp, tm, 0), nu + HALF * Tj)
    rep.add("G+G-.1", P(tp, tm, 1), j)
    rep.add("G+G-.2", P(tp, tm, 2), Fraction(c, 3) * vac)
    rep.add("G+G-.3", P(tp, tm, 3), State())
    return rep


def verify_n4(struct: StructureSpec) -> Report:
    space, c = struct.space, struct.claimed_c
    v = struct.vectors
    nu, tp, tm, j = v["nu"], v["tau+"], v["tau-"], v["j"]
    ttp, ttm, jpp, jmm = v["taut+"], v["taut-"], v["j++"], v["j--"]
    P = lambda a, b, n: nth_product(space, a, b, n)
    T = lambda s: translate(space, s)
    vac = vacuum(space)
    rep = verify_n2(struct)
    _check_primary(rep, space, nu, ttp, 3, "Gt+")
    _check_primary(rep, space, nu, ttm, 3, "Gt-")
    _check_primary(rep, space, nu, jpp, 2, "J++")
    _check_primary(rep, space, nu, jmm, 2, "J--")
    rep.add("JGt+.0", P(j, ttp, 0), ttp)
    rep.add("JGt-.0", P(j, ttm, 0), -1 * ttm)
    rep.add("JJ++.0", P(j, jpp, 0), 2 * jpp)
    rep.add("JJ--.0", P(j, jmm, 0), -2 * jmm)
    rep.add("JJ++.1", P(j, jpp, 1), State())
    rep.add("JJ--.1", P(j, jmm, 1), State())
    # SU(2) currents; central term is the realized -(c/6)
    rep.add("J--J++.1", P(jmm, jpp, 1), Fraction(-c, 6) * vac)
    rep.add("J--J++.0", P(jmm, jpp, 0), j)
    for n in (0, 1):
        rep.add(f"J++J++.{n}", P(jpp, jpp, n), State())
        rep.add(f"J--J--.{n}", P(jmm, jmm, n), State())
    rep.add("J--G+.0", P(jmm, tp, 0), ttm)
    rep.add("J--G+.1", P(jmm, tp, 1), State())
    rep.add("J++Gt-.0", P(jpp, ttm, 0), -1 * tp)
    rep.add("J++G-.0", P(jpp, tm, 0), ttp)
    rep.add("J--Gt+.0", P(jmm, ttp, 0), -1 * tm)
    rep.add("J--G-.0", P(jmm, tm, 0), State())
    rep.add("J++G+.0", P(jpp, tp, 0), State())
    rep.add("J++Gt+.0", P(jpp, ttp, 0), State())
    rep.add("J--Gt-.0", P(jmm, ttm, 0), State())
    for n in range(0, 3):
        rep.add(f"G+Gt-.{n}", P(tp, ttm, n), State())
        rep.add(f"G-Gt+.{n}", P(tm, ttp, n), State())
        rep.add(f"Gt+Gt+.{n}", P(ttp, ttp, n), State())
        rep.add(f"Gt-Gt-.{n}", P(ttm, ttm, n), State())
    # mixed tilde supercurrents; central term is the realized c/3
    rep.add("Gt+Gt-.mix0", P(ttp, ttm, 0), nu + HALF * T(j))
    rep.add("Gt+Gt-.mix1", P(ttp, ttm, 1), j)
    rep.add("Gt+Gt-.mix2", P(ttp, ttm, 2), Fraction(c, 3) * vac)
    rep.add("G+Gt+.1", P(tp, ttp, 1), -2 * jpp)
    rep.add("G+Gt+.0", P(tp, ttp, 0), -1 * T(jpp))
    rep.add("G-Gt-.1", P(tm, ttm, 1), -2 * jmm)
    rep.add("G-Gt-.0", P(tm, ttm, 0), -1 * T(jmm))
    return rep


def n1_from_n2(struct: StructureSpec, a) -> StructureSpec:
    """tau = a tau+ + (1/a) tau- is an N=1 superconformal vector."""
    a = Fraction(a)
    if a == 0:
        raise ValueError("a must be nonzero")
    tau = a * struct.vectors["tau+"] + Fraction(1, a) * struct.vectors["tau-"]
    return StructureSpec("N1", struct.space, {"nu": struct.vectors["nu"], "tau": tau},
                         struct.claimed_c)


def twist(struct: StructureSpec, which: str) -> StructureSpec:
    """A/B twist of an N=2 structure into a topological one of rank d = c/3."""
    if struct.kind not in ("N2", "N4"):
        raise ValueError("can only twist an N=2 structure")
    space = struct.space
    nu, tp, tm, j = (struct.vectors[k] for k in ("nu", "tau+", "tau-", "j"))
    Tj = translate(space, j)
    if which == "A":
        vectors = {"T": nu + HALF * Tj, "J": j, "Q": tp, "G": tm}
    elif which == "B":
        vectors = {"T": nu - HALF * Tj, "J": -1 * j, "Q": tm, "G": tp}
    else:
        raise ValueError("twist must be A or B")
    return StructureSpec("Topological", space, vectors, Fraction(struct.claimed_c, 3),
                         twist=which)


def untwist(struct: StructureSpec, which: str) -> StructureSpec:
    """Inverse of twist: recover the N=2 vectors from a topological structure."""
    if struct.kind != "Topological":
        raise ValueError("can only untwist a topological structure")
    space = struct.space
    t, jt, q, g = (struct.vectors[k] for k in ("T", "J", "Q", "G"))
    # L = T - (1/2) d J_top for both twists: the J_top sign flip carries
    # the d J term along with it
    nu = t - HALF * translate(space, jt)
    if which == "A":
        j, tp, tm = jt, q, g
    elif which == "B":
        j, tp, tm = -1 * jt, g, q
    else:
        raise ValueError("twist must be A or B")
    return StructureSpec("N2", space, {"nu": nu, "tau+": tp, "tau-": tm, "j": j},
                         3 * struct.claimed_c)


def verify_topological(struct: StructureSpec, d=None) -> Report:
    """Check the eleven topological OPE families plus Q0^2 = 0 and T = [Q0, G]."""
    space = struct.space
    if d is None:
        d = struct.claimed_c
    d = Fraction(d)
    t, jt, q, g = (struct.vectors[k] for k in ("T", "J", "Q", "G"))
    P = lambda a, b, n: nth_product(space, a, b, n)
    T = lambda s: translate(space, s)
    vac = vacuum(space)
    rep = Report()
    _check_virasoro(rep, space, t, 0, prefix="TT")
    rep.add("JJ.1", P(jt, jt, 1), d * vac)
    rep.add("JJ.0", P(jt, jt, 0), State())
    rep.add("TJ.0", P(t, jt, 0), T(jt))
    rep.add("TJ.1", P(t, jt, 1), jt)
    rep.add("TJ.2", P(t, jt, 2), -d * vac)
    rep.add("TJ.3", P(t, jt, 3), State())
    for n in range(0, 3):
        rep.add(f"GG.{n}", P(g, g, n), State())
        rep.add(f"QQ.{n}", P(q, q, n), State())
    rep.add("TG.0", P(t, g, 0), T(g))
    rep.add("TG.1", P(t, g, 1), 2 * g)
    rep.add("TG.2", P(t, g, 2), State())
    rep.add("TQ.0", P(t, q, 0), T(q))
    rep.add("TQ.1", P(t, q, 1), q)
    rep.add("TQ.2", P(t, q, 2), State())
    rep.add("JG.0", P(jt, g, 0), -1 * g)
    rep.add("JG.1", P(jt, g, 1), State())
    rep.add("JQ.0", P(jt, q, 0), q)
    rep.add("JQ.1", P(jt, q, 1), State())
    rep.add("QG.0", P(q, g, 0), t)
    rep.add("QG.1", P(q, g, 1), jt)
    rep.add("QG.2", P(q, g, 2), d * vac)
    rep.add("QG.3", P(q, g, 3), State())
    # operator identities on a small probe set: Q0^2 = 0 and T_n = [Q0, G_n]
    probes = [vac, q, g, jt, t]
    q0 = lambda s: P(q, s, 0)
    for i, p in enumerate(probes):
        rep.add(f"Q0sq.{i}", q0(q0(p)), State())
        for n in (-1, 0, 1):
            lhs = P(t, p, n + 1)
            rhs = q0(P(g, p, n + 1)) + P(g, q0(p), n + 1)
            rep.add(f"TQG.{i}.{n}", lhs, rhs)
    return rep
