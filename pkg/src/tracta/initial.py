"""Initial matroids of matroids over tropical extensions.

A direction u lives in (Gamma + {inf})^E.  For fully finite (toric) u the
initial matroid keeps the base parts of the Plucker entries on the
minimisers of |P(I)| - sum_{i in I} u_i.  For general u the coordinates
with u_i = inf are contracted away and re-added as coloops; the resulting
Plucker vector is recovered from the initial circuits by basis-exchange
solving, since the direct contraction formula is unusable in practice.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import gamma as G
from . import matroids as M
from . import tracts as T
from .errors import IntegrityError, SchemaError
from .matroids import CircuitSet, PluckerVector, TractVector

DirectionU = tuple  # n GammaExt coordinates


def z_set(u: DirectionU) -> tuple:
    return tuple(i for i, g in enumerate(u) if g is G.INF)


def finite_part(u: DirectionU) -> tuple:
    return tuple(g for g in u if g is not G.INF)


def _base_tract(P: PluckerVector) -> T.TractDescriptor:
    if not P.tract.is_extension():
        raise SchemaError(f"initial matroids need an extension tract, got {P.tract}")
    return P.tract.base


def plucker_moduli(P: PluckerVector) -> dict:
    return {B: p[1] for B, p in P.entries}


def toric_initial(P: PluckerVector, u: DirectionU) -> PluckerVector:
    """Base-tract matroid of the u-minimising Plucker entries (theta parts)."""
    base = _base_tract(P)
    if len(u) != P.n or any(g is G.INF for g in u):
        raise SchemaError("toric initial matroids need a fully finite u")
    weights = {}
    for B, p in P.entries:
        w = p[1]
        for i in B:
            w = G.g_sub(w, u[i])
        weights[B] = w
    m = G.g_min(weights.values())
    ents = tuple((B, p[0]) for B, p in P.entries if G.g_eq(weights[B], m))
    return PluckerVector(base, P.n, P.r, ents)


def initial_circuit(C: TractVector, u: DirectionU) -> TractVector:
    """theta parts of C on the finite minimisers of |C_i| + u_i, zero elsewhere."""
    base = C.tract.base
    shifted = [G.INF if c is None else G.g_add(c[1], u[i])
               for i, c in enumerate(C.coords)]
    idx = set(G.argmin_set(shifted)) if C.n else set()
    coords = tuple(C.coords[i][0] if i in idx else None for i in range(C.n))
    return TractVector(base, coords)


def initial_circuits(P: PluckerVector, u: DirectionU) -> CircuitSet:
    """MinSupp of the initial circuits of all canonical circuits of P."""
    base = _base_tract(P)
    vecs = M.min_supp([initial_circuit(C, u) for C in M.circuits(P)])
    return M.build_circuit_set(base, P.n, vecs)


def initial_rank(P: PluckerVector, u: DirectionU) -> int:
    Z = z_set(u)
    return P.r - M.rank_of_subset(M.underlying_bases(P), Z) + len(Z)


def initial(P: PluckerVector, u: DirectionU) -> PluckerVector:
    """The initial matroid for arbitrary u, as a Plucker vector over the base.

    Toric u reduces to toric_initial.  Otherwise the circuits are computed
    via the initial-circuit description and the Plucker vector is re-solved
    from them; the rank law r' = r - rank(Z_u) + |Z_u| is asserted.
    """
    if len(u) != P.n:
        raise SchemaError("direction length mismatch")
    if not z_set(u):
        return toric_initial(P, u)
    r2 = initial_rank(P, u)
    C = initial_circuits(P, u)
    Q = M.reconstruct_plucker(C, r2)
    if Q.r != r2:
        raise IntegrityError("initial matroid rank law violated")
    return Q


def initial_circuits_of(P: PluckerVector, u: DirectionU) -> CircuitSet:
    """Circuits of the initial matroid, checked along both routes.

    Computes circuits(initial(P, u)) and MinSupp({C^u}) independently and
    raises IntegrityError on mismatch (a bug, or input not a matroid).
    """
    direct = initial_circuits(P, u)
    via_plucker = M.circuits(initial(P, u))
    if not M.circuit_sets_equal(direct, via_plucker):
        raise IntegrityError("initial circuit identity failed: MinSupp({C^u}) "
                             "differs from circuits(initial(P,u))")
    return direct


def initial_dual_check(P: PluckerVector, u: DirectionU) -> bool:
    """Toric duality law (M^u)* = (M*)^{-u}, checked entrywise."""
    if z_set(u):
        raise SchemaError("the duality law is checked for toric u only")
    lhs = M.dual(toric_initial(P, u))
    rhs = toric_initial(M.dual(P), tuple(G.g_neg(g) for g in u))
    return M.plucker_equivalent(lhs, rhs)


# ---------------------------------------------------------------------------
# the witness direction from the weak-matroid characterisation proof


def _omega(gammas: list, gk: G.GammaKind):
    total = 0
    for g in gammas:
        comps = g if isinstance(g, tuple) else (g,)
        total += sum(abs(c) for c in comps)
    big = 1 + 4 * total
    if gk.kind == "lex":
        from fractions import Fraction
        return (Fraction(big),) + (Fraction(0),) * (gk.width - 1)
    if gk.kind == "int":
        import math
        return math.ceil(big)
    return big


def witness_u(P: PluckerVector, I, J) -> DirectionU:
    """The direction from the proof that a failing three-term relation
    survives into some toric initial matroid.

    Requires |J \\ I| = 3 and that the relation P_{I,J} actually fails;
    returns u with the asserted postcondition that the initial matroid
    fails the same relation.  Omega starts at the proof's bound and doubles
    if needed (the proof only requires `sufficiently large').
    """
    base = _base_tract(P)
    gk = P.tract.gamma
    I, J = tuple(sorted(I)), tuple(sorted(J))
    diff = [j for j in J if j not in I]
    if len(diff) != 3:
        raise SchemaError("witness construction needs a three-term relation")
    if M.relation_holds(P, P, I, J):
        raise SchemaError("relation holds; nothing to witness")

    moduli = plucker_moduli(P)

    def gamma_B(B):
        g = moduli.get(tuple(sorted(B)))
        return gk.zero() if g is None else g

    # j0: finite minimiser of |P(I+j)| + |P(J-j)|
    def pair_mod(j):
        a = moduli.get(M.subset_add(I, j), G.INF)
        b = moduli.get(M.subset_remove(J, j), G.INF)
        return G.g_add(a, b)

    mods = [pair_mod(j) for j in diff]
    idx = G.argmin_set(mods)
    if not idx:
        raise IntegrityError("failing relation with all terms infinite")
    j0 = diff[idx[0]]
    j1, j2 = [j for j in diff if j != j0]
    (i_elt,) = [i for i in I if i not in J]

    u_special = {
        i_elt: G.g_sub(G.g_add(gamma_B(M.subset_add(I, j1)),
                               gamma_B(M.subset_add(I, j2))),
                       gamma_B(M.subset_remove(J, j0))),
        j0: gamma_B(M.subset_add(I, j0)),
        j1: gamma_B(M.subset_add(I, j1)),
        j2: gamma_B(M.subset_add(I, j2)),
    }
    omega = _omega([gamma_B(B) for B in P.support()] + list(u_special.values()), gk)
    both = set(I) & set(J)
    for _ in range(8):
        u = []
        for s in range(P.n):
            if s in u_special:
                u.append(u_special[s])
            elif s in both:
                u.append(omega)
            else:
                u.append(G.g_neg(omega))
        u = tuple(u)
        Q = toric_initial(P, u)
        if not M.relation_holds(Q, Q, I, J):
            return u
        omega = G.g_scale(omega, 2)
    raise IntegrityError("witness direction failed to break the relation")


# ---------------------------------------------------------------------------
# Theorem-A style verification harness


@dataclass
class ThmAReport:
    weak: bool
    strong: bool
    failing_weak: Optional[tuple]
    failing_strong: Optional[tuple]
    initials: list = field(default_factory=list)  # (u, weak, strong)
    witness: Optional[tuple] = None  # (I, J, u, initial_fails)
    verdicts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.verdicts.values())


def verify_thmA(P: PluckerVector, extra_u: Sequence[DirectionU]) -> ThmAReport:
    """Sampled two-directional check of the initial-matroid characterisation.

    (a) if P is weak, every sampled toric initial must be weak;
    (b) if P fails some three-term relation, the proof's witness direction
        must produce an initial matroid failing the same relation;
    (c) for perfect base tracts, weak and strong verdicts must agree on P
        and on every sampled initial.
    """
    rep = M.matroid_report(P)
    out = ThmAReport(rep.weak, rep.strong, rep.failing_weak, rep.failing_strong)
    perfect = T.is_perfect(_base_tract(P))
    ok_a = True
    ok_c = not perfect or (rep.weak == rep.strong)
    for u in extra_u:
        Q = toric_initial(P, u)
        qr = M.matroid_report(Q)
        out.initials.append((u, qr.weak, qr.strong))
        if rep.weak and not qr.weak:
            ok_a = False
        if perfect and qr.weak != qr.strong:
            ok_c = False
    out.verdicts["weak_implies_initials_weak"] = ok_a
    if rep.failing_weak is not None:
        I, J = rep.failing_weak
        u = witness_u(P, I, J)
        Q = toric_initial(P, u)
        fails = not M.relation_holds(Q, Q, I, J)
        out.witness = (I, J, u, fails)
        out.verdicts["witness_breaks_initial"] = fails
    out.verdicts["perfectness_advisory"] = ok_c
    return out


def integer_box(n: int, lo: int, hi: int):
    """All integer directions in [lo, hi]^n (toric grid sampling)."""
    return itertools.product(range(lo, hi + 1), repeat=n)
