"""Enriched tropical linear spaces: the four membership characterisations.

Membership of a point X in the covector space of an extension matroid can
be decided four ways: (A) strip the infinite coordinates and test the
finite rest against the contraction; (B) orthogonality to all circuits;
(C) theta(X) a covector of the initial matroid at u = |X|; (D) membership
in the span of the fundamental cocircuits of every underlying basis.
Grids are only an enumeration device; the membership tests themselves are
exact and grid-free.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from . import gamma as G
from . import initial as IN
from . import matroids as M
from . import tracts as T
from .errors import SchemaError, check_guard
from .matroids import CircuitSet, PluckerVector, TractVector


@dataclass(frozen=True)
class SampleGrid:
    """Per-coordinate finite element lists (payloads; None is the zero)."""

    tract: T.TractDescriptor
    per_coord: tuple  # tuple of tuples of payloads

    @property
    def n(self):
        return len(self.per_coord)

    def size(self) -> int:
        total = 1
        for c in self.per_coord:
            total *= len(c)
        return total

    def points(self) -> Iterable[TractVector]:
        check_guard(self.size(), "grid enumeration")
        for combo in itertools.product(*self.per_coord):
            yield TractVector(self.tract, combo)


def make_grid(tract: T.TractDescriptor, n: int, gammas: Sequence,
              units: Optional[Sequence] = None,
              include_zero: bool = True) -> SampleGrid:
    """Grid of extension points: units x finite gammas, plus the zero (inf).

    `units` defaults to the full unit set of a finite base tract; infinite
    bases must supply a finite sample.
    """
    if not tract.is_extension():
        raise SchemaError("grids enumerate extension tracts")
    if units is None:
        units = T.finite_units(tract.base)
        if units is None:
            raise SchemaError(f"base {tract.base} is infinite: supply a unit sample")
    cells = []
    for g in gammas:
        if g is G.INF:
            continue
        tract.gamma.validate(g)
        for s in units:
            cells.append((s, g))
    if include_zero or any(g is G.INF for g in gammas):
        cells.append(None)
    col = tuple(cells)
    return SampleGrid(tract, (col,) * n)


# ---------------------------------------------------------------------------
# cached matroid data


@lru_cache(maxsize=None)
def _circuits(P: PluckerVector) -> CircuitSet:
    return M.circuits(P)


@lru_cache(maxsize=None)
def _contracted(P: PluckerVector, A: tuple) -> CircuitSet:
    return M.contract(_circuits(P), A)


@lru_cache(maxsize=None)
def _initial_circuits(P: PluckerVector, u: tuple) -> CircuitSet:
    return IN.initial_circuits(P, u)


@lru_cache(maxsize=None)
def _fundamental_family(P: PluckerVector, B: tuple) -> tuple:
    return tuple(M.fundamental_cocircuits(P, B))


def modulus_direction(X: TractVector) -> tuple:
    return tuple(G.INF if c is None else c[1] for c in X.coords)


def theta_vector(X: TractVector) -> TractVector:
    base = X.tract.base
    return TractVector(base, tuple(None if c is None else c[0] for c in X.coords))


# ---------------------------------------------------------------------------
# the four characterisations


def member_charA(P: PluckerVector, X: TractVector) -> bool:
    """Finite part of X a fully-finite covector of the contraction at its zeros."""
    A = tuple(i for i, c in enumerate(X.coords) if c is None)
    if len(A) == P.n:
        return True
    keep = [i for i in range(P.n) if i not in A]
    return M.is_covector(_contracted(P, A), X.restrict(keep))


def member_charB(P: PluckerVector, X: TractVector) -> bool:
    """Orthogonality to every circuit."""
    return M.is_covector(_circuits(P), X)


def member_charC(P: PluckerVector, X: TractVector) -> bool:
    """theta(X) a covector of the initial matroid at u = |X|."""
    u = modulus_direction(X)
    return M.is_covector(_initial_circuits(P, u), theta_vector(X))


def default_scalar_domain(P: PluckerVector, gammas) -> Optional[list]:
    """{zero} + units x finite grid gammas; None when the base is infinite."""
    if not P.tract.is_extension():
        raise SchemaError("scalar domains are built for extension tracts")
    units = T.finite_units(P.tract.base)
    if units is None:
        return None
    dom = [T.TractElement.zero(P.tract)]
    for g in gammas:
        if g is G.INF:
            continue
        for s in units:
            dom.append(T.TractElement(P.tract, (s, g)))
    return dom


def member_charD(P: PluckerVector, X: TractVector,
                 scalar_domain: Sequence[T.TractElement]) -> bool:
    """Span membership over the fundamental cocircuits of every basis."""
    for B in M.underlying_bases(P):
        gens = _fundamental_family(P, B)
        if not M.span_contains(gens, X, scalar_domain):
            return False
    return True


# ---------------------------------------------------------------------------
# specialisations


def is_loopless(C: CircuitSet) -> bool:
    return all(len(v.support()) > 1 for v in C)


def member_loopless_K(P: PluckerVector, X: TractVector) -> bool:
    """Krasner-base specialisation: membership iff the initial matroid is loopless."""
    if P.tract.base != T.KRASNER:
        raise SchemaError("loopless specialisation is for Krasner-base matroids")
    return is_loopless(_initial_circuits(P, modulus_direction(X)))


def _strictly_conformal(Y: TractVector, Z: TractVector) -> bool:
    # no opposite nonzero products and at least one positive product
    seen_pos = False
    for a, b in zip(Y.coords, Z.coords):
        if a is None or b is None:
            continue
        if a * b == -1:
            return False
        seen_pos = True
    return seen_pos


def member_nonconformal_S(P: PluckerVector, X: TractVector) -> bool:
    """Sign-base specialisation: sgn(X) non-conformal with every initial circuit."""
    if P.tract.base != T.SIGN:
        raise SchemaError("conformality specialisation is for sign-base matroids")
    sgn = theta_vector(X)
    for C in _initial_circuits(P, modulus_direction(X)):
        if _strictly_conformal(sgn, C) or _strictly_conformal(sgn, C.neg()):
            return False
    return True


# ---------------------------------------------------------------------------
# enumeration


@dataclass
class PointRecord:
    point: TractVector
    toric: bool
    charA: bool
    charB: bool
    charC: bool
    charD: Optional[bool]  # None when not evaluated (infinite base)

    @property
    def member(self) -> bool:
        return self.charB

    @property
    def agree(self) -> bool:
        votes = {self.charA, self.charB, self.charC}
        if self.charD is not None:
            votes.add(self.charD)
        return len(votes) == 1


def evaluate_point(P: PluckerVector, X: TractVector,
                   scalar_domain=None) -> PointRecord:
    d = None
    if scalar_domain is not None:
        d = member_charD(P, X, scalar_domain)
    return PointRecord(
        point=X,
        toric=all(c is not None for c in X.coords),
        charA=member_charA(P, X),
        charB=member_charB(P, X),
        charC=member_charC(P, X),
        charD=d,
    )


def enumerate_linear_space(P: PluckerVector, grid: SampleGrid,
                           scalar_domain=None) -> list:
    """PointRecords of all grid members, cross-characterisation recorded."""
    out = []
    for X in grid.points():
        rec = evaluate_point(P, X, scalar_domain)
        if rec.member:
            out.append(rec)
    return out


def enumerate_members(P: PluckerVector, grid: SampleGrid) -> list:
    """Members only, by the orthogonality characterisation (fast path)."""
    C = _circuits(P)
    return [X for X in grid.points() if M.is_covector(C, X)]


# ---------------------------------------------------------------------------
# tropical-semiring span for the Krasner base


def tspan_member_K(cocircuits: CircuitSet, X: TractVector) -> bool:
    """X a coordinatewise min of Gamma-shifted cocircuits (Krasner base).

    Decided exactly by min-plus residuation: the principal shift for each
    cocircuit D is max_i(X_i - D_i) (infinite when D is finite where X is
    not), and membership holds iff the principal combination attains X.
    """
    if not (cocircuits.tract.is_extension()
            and cocircuits.tract.base == T.KRASNER):
        raise SchemaError("tspan is defined for Krasner-base cocircuits")
    xs = [G.INF if c is None else c[1] for c in X.coords]
    combos = []
    for D in cocircuits:
        ds = [G.INF if c is None else c[1] for c in D.coords]
        shift = None  # -inf: no constraint yet
        for xi, di in zip(xs, ds):
            if di is G.INF:
                continue
            if xi is G.INF:
                shift = G.INF
                break
            bound = G.g_sub(xi, di)
            if shift is None or G.g_lt(shift, bound):
                shift = bound
        if shift is None or shift is G.INF:
            continue  # shifted to infinity: contributes nothing
        combos.append([G.g_add(shift, di) for di in ds])
    for i, xi in enumerate(xs):
        best = G.g_min(c[i] for c in combos) if combos else G.INF
        if not G.g_eq(best, xi):
            return False
    return True
