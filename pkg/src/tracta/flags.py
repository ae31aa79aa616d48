"""Flag matroids via Plucker incidence relations, orderings, positroids.

A flag is a rank-nondecreasing sequence of strong matroids on one ground
set in which every later part has every earlier part as a quotient.  Weak
parts are rejected: the quotient definition presumes strong matroids.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import gamma as G
from . import initial as IN
from . import matroids as M
from . import tracts as T
from .errors import IntegrityError, SchemaError
from .matroids import PluckerVector, TractVector


@dataclass(frozen=True)
class FlagSequence:
    parts: tuple  # PluckerVectors, shared tract and n, ranks nondecreasing

    def __post_init__(self):
        if not self.parts:
            raise SchemaError("a flag needs at least one part")
        t0, n0 = self.parts[0].tract, self.parts[0].n
        ranks = [p.r for p in self.parts]
        for p in self.parts:
            if p.tract != t0 or p.n != n0:
                raise SchemaError("flag parts must share tract and ground set")
        if ranks != sorted(ranks):
            raise SchemaError(f"flag ranks must be nondecreasing, got {ranks}")
        for p in self.parts:
            if not M.is_strong_matroid(p):
                raise SchemaError("flag parts must be strong matroids")

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)


def is_quotient(N: PluckerVector, Mlow: PluckerVector) -> bool:
    """Whether Mlow (rank r) is a quotient of N (rank s >= r).

    Checks every incidence relation P^{r,s}_{I,J}; with N = Mlow these
    reduce to the ordinary Plucker relations.
    """
    if Mlow.r > N.r:
        raise SchemaError("quotient needs rank(M) <= rank(N)")
    d, pm, qm = Mlow.tract, Mlow.emap, N.emap
    for I, J, terms in M.relation_table(Mlow.n, Mlow.r, N.r):
        acc = []
        for sgn, B1, B2, _ in terms:
            a = pm.get(B1)
            if a is None:
                continue
            b = qm.get(B2)
            if b is None:
                continue
            prod = T.unit_mul(d, a, b)
            if sgn < 0:
                prod = T.unit_neg(d, prod)
            acc.append(prod)
        if acc and not T.null(d, acc):
            return False
    return True


def is_flag(Ms: FlagSequence) -> bool:
    """All pairs checked, not just consecutive ones."""
    parts = Ms.parts
    for i, j in itertools.combinations(range(len(parts)), 2):
        if not is_quotient(parts[j], parts[i]):
            return False
    return True


def initial_flag(Ms: FlagSequence, u: IN.DirectionU) -> FlagSequence:
    """Componentwise initial matroids; asserts the flag property transfers."""
    out = FlagSequence(tuple(IN.initial(p, u) for p in Ms))
    if is_flag(Ms) and not is_flag(out):
        raise IntegrityError("initial flag of a flag matroid is not a flag")
    return out


def covector_chain_check(Ms: FlagSequence, samples: Sequence[TractVector]) -> bool:
    """Covector sets must form a chain along the flag on every sample."""
    csets = [M.circuits(p) for p in Ms]
    for X in samples:
        for i in range(len(csets) - 1):
            if M.is_covector(csets[i], X) and not M.is_covector(csets[i + 1], X):
                return False
    return True


def flag_separating_witness(Mlow: PluckerVector, N: PluckerVector,
                            grid) -> Optional[TractVector]:
    """A grid point separating a failed quotient through its initial matroids.

    When Mlow is not a quotient of N over a perfect base, some covector of
    Mlow is not a covector of N, and its base part then separates the
    initial matroids at u = |X|.  Searches the supplied grid; None means the
    grid was inconclusive, not that no witness exists.
    """
    from . import linspace as L

    Clow, Chigh = M.circuits(Mlow), M.circuits(N)
    for X in grid.points():
        if M.is_covector(Clow, X) and not M.is_covector(Chigh, X):
            u = L.modulus_direction(X)
            theta = L.theta_vector(X)
            in_low = M.is_covector(IN.initial_circuits(Mlow, u), theta)
            in_high = M.is_covector(IN.initial_circuits(N, u), theta)
            if in_low and not in_high:
                return X
            raise IntegrityError("separating covector did not separate the "
                                 "initial matroids")
    return None


# ---------------------------------------------------------------------------
# orderings on tracts


@dataclass(frozen=True)
class TractOrdering:
    """A distinguished positive part F_{>0} of the units of a tract.

    Finite tracts list the positive payloads explicitly; extensions inherit
    base positivity across every gamma; the Hahn tract is ordered by the
    sign of the leading coefficient.
    """

    tract: T.TractDescriptor
    positives: Optional[tuple] = None  # explicit payloads for finite tracts
    inherited: bool = False

    def is_positive(self, p) -> bool:
        if p is None:
            return False
        d = self.tract
        if self.inherited:
            if not d.is_extension():
                raise SchemaError("inherited orderings need an extension tract")
            return TractOrdering.natural(d.base).is_positive(p[0])
        if self.positives is not None:
            return p in self.positives
        if d.kind == "hahn":
            return p.lc() > 0
        if d.kind == "dyadic":
            return p[0] == 1
        raise SchemaError(f"no ordering data for {d}")

    def is_nonnegative(self, p) -> bool:
        return p is None or self.is_positive(p)

    @staticmethod
    def natural(d: T.TractDescriptor) -> "TractOrdering":
        """The standard ordering where one exists (K and triangle have none)."""
        if d.kind in ("sign", "regular"):
            return TractOrdering(d, positives=(1,))
        if d.kind == "dyadic":
            return TractOrdering(d)
        if d.kind == "hahn":
            return TractOrdering(d)
        if d.is_extension():
            return TractOrdering(d, inherited=True)
        raise SchemaError(f"{d} admits no ordering (-1 = 1)")


@dataclass
class OrderingReport:
    passed: bool = True
    failures: list = field(default_factory=list)

    def fail(self, msg):
        self.passed = False
        self.failures.append(msg)


def verify_ordering(o: TractOrdering, max_len: int,
                    sample_units: Optional[Sequence] = None) -> OrderingReport:
    """Closure under products, sign partition, and no null positive sums.

    Finite tracts are checked exhaustively; infinite ones on the supplied
    payload sample.
    """
    rep = OrderingReport()
    d = o.tract
    units = sample_units
    if units is None:
        units = T.finite_units(d)
        if units is None:
            raise SchemaError("infinite tract: supply sample_units")
    for p in units:
        pos, negp = o.is_positive(p), o.is_positive(T.unit_neg(d, p))
        if pos == negp:
            rep.fail(f"partition: {p!r} and its negative are both "
                     f"{'positive' if pos else 'non-positive'}")
    for p, q in itertools.product(units, repeat=2):
        if o.is_positive(p) and o.is_positive(q):
            if not o.is_positive(T.unit_mul(d, p, q)):
                rep.fail(f"closure: {p!r} * {q!r} not positive")
    positives = [p for p in units if o.is_positive(p)]
    for k in range(1, max_len + 1):
        for combo in itertools.combinations_with_replacement(positives, k):
            if T.null(d, combo):
                rep.fail(f"null positive sum {combo!r}")
    return rep


# ---------------------------------------------------------------------------
# positroids


def is_positroid(P: PluckerVector, o: TractOrdering, strength: str = "strong") -> bool:
    """Matroid at the requested strength with a nonnegative representative.

    Tested on the scaling class: either c.P or -c.P must be entrywise
    nonnegative, c the inverse of the first support entry (negating one row
    of a representing matrix flips all maximal minors).
    """
    if strength not in ("weak", "strong"):
        raise SchemaError("strength must be weak or strong")
    ok = M.is_weak_matroid(P) if strength == "weak" else M.is_strong_matroid(P)
    if not ok:
        return False
    Q = M.canonical_plucker(P)
    for cand in (Q.entries, tuple((B, T.unit_neg(P.tract, p)) for B, p in Q.entries)):
        if all(o.is_positive(p) for _, p in cand):
            return True
    return False


def is_flag_positroid(Ms: FlagSequence, o: TractOrdering) -> bool:
    return is_flag(Ms) and all(is_positroid(p, o, "strong") for p in Ms)
