"""Enriched valuations on Hahn series and tropicalisation of linear spaces.

val records the leading power, sval additionally the sign of the leading
coefficient, fval the full leading term (coefficient embedded as a constant
series, so the target base tract is the Hahn field itself).  All three are
tract homomorphisms onto tropical extensions with rational value group.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import gamma as G
from . import initial as IN
from . import matroids as M
from . import tracts as T
from .errors import IntegrityError, SchemaError
from .matroids import PluckerVector, TractVector
from .series import ZERO, HahnSeries, determinant, frac

VAL_TARGET = T.extension(T.KRASNER, G.RATIONAL)
SVAL_TARGET = T.extension(T.SIGN, G.RATIONAL)
FVAL_TARGET = T.extension(T.HAHN, G.RATIONAL)


def _is_hahn(d):
    return d == T.HAHN


VAL = T.Hom("val", _is_hahn, lambda d: VAL_TARGET,
            lambda d: (lambda s: (1, s.lp())))
SVAL = T.Hom("sval", _is_hahn, lambda d: SVAL_TARGET,
             lambda d: (lambda s: (1 if s.lc() > 0 else -1, s.lp())))
FVAL = T.Hom("fval", _is_hahn, lambda d: FVAL_TARGET,
             lambda d: (lambda s: (HahnSeries.const(s.lc()), s.lp())))

VALUATIONS = {"val": VAL, "sval": SVAL, "fval": FVAL}


def valuation_of(kind: str) -> T.Hom:
    try:
        return VALUATIONS[kind]
    except KeyError:
        raise SchemaError(f"unknown valuation {kind!r} (want val, sval or fval)")


def valuate(s: HahnSeries, kind: str) -> T.TractElement:
    h = valuation_of(kind)
    tgt = h.target(T.HAHN)
    return T.TractElement(tgt, None if s.is_zero() else h.on_unit(T.HAHN)(s))


# ---------------------------------------------------------------------------
# Plucker extraction


@dataclass(frozen=True)
class SeriesMatrix:
    rows: tuple  # tuple of tuples of HahnSeries

    @property
    def d(self):
        return len(self.rows)

    @property
    def n(self):
        return len(self.rows[0]) if self.rows else 0

    def col_minor(self, cols) -> HahnSeries:
        return determinant([[row[c] for c in cols] for row in self.rows])


def series_matrix(rows) -> SeriesMatrix:
    prepared = []
    width = None
    for row in rows:
        out = tuple(x if isinstance(x, HahnSeries) else HahnSeries.const(frac(x))
                    for x in row)
        if width is None:
            width = len(out)
        elif len(out) != width:
            raise SchemaError("ragged matrix")
        prepared.append(out)
    if width is None or len(prepared) > width:
        raise SchemaError("need a d x n matrix with d <= n")
    return SeriesMatrix(tuple(prepared))


def plucker_from_matrix(A: SeriesMatrix) -> PluckerVector:
    """Exact maximal minors as a Hahn-tract Plucker vector, canonically scaled."""
    ents = []
    for cols in itertools.combinations(range(A.n), A.d):
        det = A.col_minor(cols)
        if not det.is_zero():
            ents.append((cols, det))
    if not ents:
        raise SchemaError("matrix does not have full row rank")
    P = PluckerVector(T.HAHN, A.n, A.d, tuple(sorted(ents)))
    return M.canonical_plucker(P)


def tropicalize_matroid(P: PluckerVector, kind: str) -> PluckerVector:
    if P.tract != T.HAHN:
        raise SchemaError("tropicalisation starts from a Hahn-tract matroid")
    return M.pushforward(P, valuation_of(kind))


def delete_matrix(A: SeriesMatrix, cols) -> SeriesMatrix:
    keep = [j for j in range(A.n) if j not in set(cols)]
    return SeriesMatrix(tuple(tuple(row[j] for j in keep) for row in A.rows))


def contract_matrix(A: SeriesMatrix, e: int) -> SeriesMatrix:
    """Pivot column e out of the row span, division-free.

    Rows other than the pivot row are replaced by A[k][e].row_i - A[i][e].row_k
    (cross-multiplied elimination), then the pivot row and column e are
    dropped.  Row scalings do not change the matroid.
    """
    k = next((i for i in range(A.d) if not A.rows[i][e].is_zero()), None)
    if k is None:
        raise SchemaError(f"column {e} is zero: contraction of a loop")
    piv = A.rows[k][e]
    rows = []
    for i in range(A.d):
        if i == k:
            continue
        fac = A.rows[i][e]
        rows.append(tuple(piv * A.rows[i][j] - fac * A.rows[k][j]
                          for j in range(A.n) if j != e))
    return SeriesMatrix(tuple(rows))


def initial_form(C: TractVector, u) -> TractVector:
    """Coefficient vector of in_u(f_C) for a Hahn circuit C.

    Keeps lc(C_i) on the argmin of lp(C_i) + u_i; checked against
    initial_circuit(fval(C), u), mismatch being an integrity failure.
    """
    if C.tract != T.HAHN:
        raise SchemaError("initial forms need Hahn coordinates")
    shifted = [G.INF if c is None else G.g_add(c.lp(), u[i])
               for i, c in enumerate(C.coords)]
    idx = set(G.argmin_set(shifted))
    coords = tuple(
        HahnSeries.const(C.coords[i].lc()) if i in idx else None for i in range(C.n))
    out = TractVector(T.HAHN, coords)
    fC = M.map_vector(C, FVAL)
    if IN.initial_circuit(fC, tuple(u)) != out:
        raise IntegrityError("initial form disagrees with the fval initial circuit")
    return out


# ---------------------------------------------------------------------------
# tropicalisation check: nu(V*(N)) = V*(nu_*(N)) on sampled data


@dataclass
class TropReport:
    kind: str
    trials: int
    containment_failures: list = field(default_factory=list)
    members_checked: int = 0
    unmatched: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.containment_failures and not self.unmatched


def _random_series(rng: random.Random, max_terms=2) -> HahnSeries:
    pairs = []
    for _ in range(rng.randint(1, max_terms)):
        pairs.append((Fraction(rng.randint(0, 3)), Fraction(rng.randint(-4, 4))))
    return HahnSeries.from_pairs(pairs)


def _combo(A: SeriesMatrix, alphas) -> list:
    out = []
    for j in range(A.n):
        acc = ZERO
        for a, row in zip(alphas, A.rows):
            acc = acc + row[j] * a
        out.append(acc)
    return out


def _lift_candidates(p, kind: str) -> list:
    """Hahn series with the given valuation image (a few representatives)."""
    if p is None:
        return [ZERO]
    if kind == "val":
        g = p[1]
        return [HahnSeries.t(g, c) for c in (1, 2, 3, Fraction(1, 2))]
    if kind == "sval":
        s, g = p
        return [HahnSeries.t(g, s * c) for c in (1, 2, 3, Fraction(1, 2))]
    c, g = p
    return [HahnSeries.t(g, c.lc())]


def _element_of(tgt, p) -> T.TractElement:
    return T.TractElement(tgt, p)


def find_preimage(A: SeriesMatrix, X: TractVector, kind: str) -> Optional[list]:
    """An exact row combination w with valuation image X, or None.

    Solves for the combination through every column pair whose minor is a
    monomial (exactly invertible), lifting the two target coordinates to
    candidate series and verifying all coordinates exactly.
    """
    h = valuation_of(kind)
    tgt = h.target(T.HAHN)
    if A.d != 2:
        raise SchemaError("preimage search implemented for 2-row matrices")
    for cols in itertools.combinations(range(A.n), 2):
        det = A.col_minor(cols)
        if det.is_zero() or not det.is_monomial():
            continue
        inv = det.inverse()
        i1, i2 = cols
        a11, a12 = A.rows[0][i1], A.rows[0][i2]
        a21, a22 = A.rows[1][i1], A.rows[1][i2]
        for s1 in _lift_candidates(X.coords[i1], kind):
            for s2 in _lift_candidates(X.coords[i2], kind):
                alpha = (a22 * s1 - a21 * s2) * inv
                beta = (a11 * s2 - a12 * s1) * inv
                w = _combo(A, (alpha, beta))
                if all(valuate(wj, kind).payload == X.coords[j]
                       for j, wj in enumerate(w)):
                    return w
    return None


def sample_and_check_tropicalisation(A: SeriesMatrix, kind: str, trials: int,
                                     grid, seed: int = 7) -> TropReport:
    """Both directions of the tropicalisation equality on desk-scale data.

    Containment: random exact row combinations must valuate into the
    enriched linear space.  Coverage: every enumerated grid member must
    admit an exact preimage in the row span (generic-scalar search).
    """
    from . import linspace as L

    if trials < 1:
        raise SchemaError("need at least one trial")
    rng = random.Random(seed)
    P = plucker_from_matrix(A)
    PM = tropicalize_matroid(P, kind)
    C = M.circuits(PM)
    rep = TropReport(kind=kind, trials=trials)
    for t in range(trials):
        alphas = [_random_series(rng) if rng.random() > 0.1 else ZERO
                  for _ in range(A.d)]
        w = _combo(A, alphas)
        Xv = TractVector(PM.tract, tuple(valuate(x, kind).payload for x in w))
        if not M.is_covector(C, Xv):
            rep.containment_failures.append(tuple(str(x) for x in w))
    for X in L.enumerate_members(PM, grid):
        rep.members_checked += 1
        if find_preimage(A, X, kind) is None:
            rep.unmatched.append(X)
    return rep


# ---------------------------------------------------------------------------
# exact rational linear algebra for initial-degeneration checks


def rational_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    mat = [[frac(x) for x in row] for row in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = Fraction(1) / mat[rank][col]
        mat[rank] = [x * inv for x in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def span_equals_kernel(generators: Sequence[Sequence[Fraction]],
                       forms: Sequence[Sequence[Fraction]]) -> bool:
    """Row span of generators == kernel of the linear forms (exact)."""
    gens = [[frac(x) for x in g] for g in generators]
    n = len(gens[0])
    for g in gens:
        for f in forms:
            if sum(a * b for a, b in zip(g, f)) != 0:
                return False
    return rational_rank(gens) == n - rational_rank(list(forms))
