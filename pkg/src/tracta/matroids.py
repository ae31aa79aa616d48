"""Matroids over tracts: Plucker vectors, relations, circuits, duality, minors.

Ground sets are 0-based internally (JSON I/O is 1-based) and capped at 16
elements; r-subsets are sorted tuples of indices.  A matroid is an
equivalence class of Plucker vectors under unit scaling, so equality of
matroids and of circuits is always decided modulo scaling: representatives
normalise the first nonzero coordinate to the tract identity where the
tract allows exact inversion, and equivalence falls back to
cross-multiplication over the Hahn tract (see scaling_equivalent).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache, cached_property
from typing import Iterable, Optional, Sequence

from . import tracts as T
from .errors import IntegrityError, SchemaError, check_guard
from .tracts import TractDescriptor, TractElement

MAX_GROUND = 16

Subset = tuple  # sorted tuple of 0-based indices


def subsets(n: int, k: int):
    return itertools.combinations(range(n), k)


def subset_add(I: Subset, j: int) -> Subset:
    return tuple(sorted(I + (j,)))


def subset_remove(J: Subset, j: int) -> Subset:
    return tuple(i for i in J if i != j)


def incidence_sign(j: int, I: Subset, J: Subset) -> int:
    """(-1)^l with l = #{j' in J : j < j'} + #{i in I : j < i}."""
    if j not in J:
        raise SchemaError(f"{j} not in {J}")
    l = sum(1 for jp in J if j < jp) + sum(1 for i in I if j < i)
    return -1 if l % 2 else 1


def perm_sign(seq: Sequence[int]) -> int:
    inv = 0
    for a, b in itertools.combinations(seq, 2):
        if a > b:
            inv += 1
    return -1 if inv % 2 else 1


def complement_sign(I: Subset, n: int) -> int:
    """Sign of (I, E \\ I) read as a permutation of the ground set."""
    Ic = tuple(i for i in range(n) if i not in I)
    return perm_sign(I + Ic)


# ---------------------------------------------------------------------------
# vectors and Plucker vectors (coordinates are raw unit payloads, None = zero)


@dataclass(frozen=True)
class TractVector:
    tract: TractDescriptor
    coords: tuple

    @property
    def n(self) -> int:
        return len(self.coords)

    def support(self) -> tuple:
        return tuple(i for i, c in enumerate(self.coords) if c is not None)

    def is_zero(self) -> bool:
        return all(c is None for c in self.coords)

    def element(self, i: int) -> TractElement:
        return TractElement(self.tract, self.coords[i])

    def scale(self, p) -> "TractVector":
        d = self.tract
        return TractVector(d, tuple(
            None if c is None else T.unit_mul(d, p, c) for c in self.coords))

    def neg(self) -> "TractVector":
        d = self.tract
        return TractVector(d, tuple(
            None if c is None else T.unit_neg(d, c) for c in self.coords))

    def restrict(self, keep: Sequence[int]) -> "TractVector":
        return TractVector(self.tract, tuple(self.coords[i] for i in keep))


def vector(tract: TractDescriptor, elems: Iterable) -> TractVector:
    coords = []
    for e in elems:
        if isinstance(e, TractElement):
            if e.tract != tract:
                raise SchemaError("tract mismatch in vector")
            coords.append(e.payload)
        elif e is None:
            coords.append(None)
        else:
            coords.append(T.validate_unit(tract, e))
    return TractVector(tract, tuple(coords))


def normalize_vector(v: TractVector) -> TractVector:
    """Scale so the first nonzero coordinate is the identity (or monic over hahn)."""
    for c in v.coords:
        if c is not None:
            try:
                return v.scale(T.unit_inv(v.tract, c))
            except SchemaError:
                # non-monomial hahn coordinate: normalise its leading term only
                return v.scale(c.__class__(((-c.lp(), 1 / c.lc()),)))
    return v


def scaling_equivalent(v: TractVector, w: TractVector) -> bool:
    """Same scaling class, decided by cross-multiplication (no division)."""
    if v.tract != w.tract or v.n != w.n:
        return False
    sup = v.support()
    if sup != w.support():
        return False
    if not sup:
        return True
    d = v.tract
    k = sup[0]
    vk, wk = v.coords[k], w.coords[k]
    for i in sup:
        if T.unit_mul(d, vk, w.coords[i]) != T.unit_mul(d, wk, v.coords[i]):
            return False
    return True


@dataclass(frozen=True)
class CircuitSet:
    tract: TractDescriptor
    n: int
    vectors: tuple  # canonical TractVectors, sorted by support

    def supports(self) -> tuple:
        return tuple(v.support() for v in self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)


def build_circuit_set(tract, n, vecs: Iterable[TractVector],
                      expect_incomparable: bool = True) -> CircuitSet:
    reps: list[TractVector] = []
    for v in vecs:
        if v.is_zero():
            continue
        nv = normalize_vector(v)
        if not any(scaling_equivalent(nv, r) for r in reps):
            reps.append(nv)
    reps.sort(key=lambda v: (v.support(), str(v.coords)))
    if expect_incomparable:
        sups = [set(v.support()) for v in reps]
        for a, b in itertools.combinations(range(len(sups)), 2):
            if sups[a] < sups[b] or sups[b] < sups[a]:
                raise IntegrityError(
                    f"circuit supports comparable: {sorted(sups[a])} vs {sorted(sups[b])}"
                    " (input was not a matroid)")
    return CircuitSet(tract, n, tuple(reps))


def circuit_sets_equal(a: CircuitSet, b: CircuitSet) -> bool:
    if a.tract != b.tract or a.n != b.n or len(a) != len(b):
        return False
    used = set()
    for v in a.vectors:
        hit = None
        for j, w in enumerate(b.vectors):
            if j not in used and scaling_equivalent(v, w):
                hit = j
                break
        if hit is None:
            return False
        used.add(hit)
    return True


@dataclass(frozen=True)
class PluckerVector:
    """Rank-r function from r-subsets to a tract; the datum of an F-matroid."""

    tract: TractDescriptor
    n: int
    r: int
    entries: tuple  # sorted ((subset, payload), ...) with payload != None

    def __post_init__(self):
        if not (1 <= self.r <= self.n):
            raise SchemaError(f"rank {self.r} out of range for n={self.n}")
        if self.n > MAX_GROUND:
            raise SchemaError(f"ground sets larger than {MAX_GROUND} are unsupported")
        if not self.entries:
            raise SchemaError("the zero Plucker function is not a matroid (GP1)")

    @cached_property
    def emap(self) -> dict:
        return dict(self.entries)

    def ent(self, B: Subset):
        return self.emap.get(B)

    def element(self, B) -> TractElement:
        return TractElement(self.tract, self.emap.get(tuple(sorted(B))))

    def support(self) -> tuple:
        return tuple(B for B, _ in self.entries)


def plucker(tract, n, r, mapping) -> PluckerVector:
    items = []
    for B, p in (mapping.items() if isinstance(mapping, dict) else mapping):
        B = tuple(sorted(B))
        if len(B) != r or len(set(B)) != r or any(not 0 <= i < n for i in B):
            raise SchemaError(f"bad {r}-subset {B} for ground size {n}")
        if isinstance(p, TractElement):
            p = p.payload
        if p is None:
            continue
        items.append((B, T.validate_unit(tract, p)))
    items.sort()
    return PluckerVector(tract, n, r, tuple(items))


def underlying_bases(P: PluckerVector) -> tuple:
    return P.support()


def canonical_plucker(P: PluckerVector) -> PluckerVector:
    first = P.entries[0][1]
    try:
        inv = T.unit_inv(P.tract, first)
    except SchemaError:
        inv = first.__class__(((-first.lp(), 1 / first.lc()),))
    ents = tuple((B, T.unit_mul(P.tract, inv, p)) for B, p in P.entries)
    return PluckerVector(P.tract, P.n, P.r, ents)


def plucker_equivalent(P: PluckerVector, Q: PluckerVector) -> bool:
    """Equality as matroids: same support, entries proportional by one unit."""
    if (P.tract, P.n, P.r) != (Q.tract, Q.n, Q.r):
        return False
    if P.support() != Q.support():
        return False
    d = P.tract
    B0, p0 = P.entries[0]
    q0 = Q.emap[B0]
    for B, p in P.entries:
        if T.unit_mul(d, p0, Q.emap[B]) != T.unit_mul(d, q0, p):
            return False
    return True


# ---------------------------------------------------------------------------
# Plucker (incidence) relations


@lru_cache(maxsize=None)
def relation_table(n: int, r: int, s: int, three_term: bool = False):
    """All incidence relations P^{r,s}_{I,J} as (I, J, ((sign, B1, B2, j), ...)).

    With r == s these are the ordinary Plucker relations; three_term keeps
    only those with |J \\ I| = 3 (the weak axiom GP3').
    """
    out = []
    for I in subsets(n, r - 1):
        Iset = set(I)
        for J in subsets(n, s + 1):
            diff = [j for j in J if j not in Iset]
            if three_term and len(diff) != 3:
                continue
            terms = tuple(
                (incidence_sign(j, I, J), subset_add(I, j), subset_remove(J, j), j)
                for j in diff)
            out.append((I, J, terms))
    return tuple(out)


def relation_terms(P: PluckerVector, Q: PluckerVector, I, J) -> list:
    """Nonzero payload terms of the relation sum, signs applied."""
    d = P.tract
    pm, qm = P.emap, Q.emap
    out = []
    for j in J:
        if j in I:
            continue  # P(I+j) vanishes by the alternating convention
        a = pm.get(subset_add(I, j))
        if a is None:
            continue
        b = qm.get(subset_remove(J, j))
        if b is None:
            continue
        prod = T.unit_mul(d, a, b)
        if incidence_sign(j, I, J) < 0:
            prod = T.unit_neg(d, prod)
        out.append(prod)
    return out


def relation_holds(P: PluckerVector, Q: PluckerVector, I, J) -> bool:
    if P.tract != Q.tract or P.n != Q.n:
        raise SchemaError("relation needs matching tract and ground set")
    I, J = tuple(sorted(I)), tuple(sorted(J))
    if len(I) != P.r - 1 or len(J) != Q.r + 1:
        raise SchemaError(f"relation shape mismatch: |I|={len(I)}, |J|={len(J)}")
    if P.r > Q.r:
        raise SchemaError("incidence relations need rank(P) <= rank(Q)")
    return T.null(P.tract, relation_terms(P, Q, I, J))


def _scan_relations(P: PluckerVector, three_term: bool):
    d = P.tract
    pm = P.emap
    for I, J, terms in relation_table(P.n, P.r, P.r, three_term):
        acc = []
        for sgn, B1, B2, _ in terms:
            a = pm.get(B1)
            if a is None:
                continue
            b = pm.get(B2)
            if b is None:
                continue
            prod = T.unit_mul(d, a, b)
            if sgn < 0:
                prod = T.unit_neg(d, prod)
            acc.append(prod)
        if acc and not T.null(d, acc):
            return (I, J)
    return None


def first_failing_relation(P: PluckerVector, weak_only: bool = False):
    """First (I, J) whose Plucker relation fails, or None."""
    return _scan_relations(P, three_term=weak_only)


def is_weak_matroid(P: PluckerVector) -> bool:
    return first_failing_relation(P, weak_only=True) is None


def is_strong_matroid(P: PluckerVector) -> bool:
    return first_failing_relation(P, weak_only=False) is None


@dataclass(frozen=True)
class MatroidReport:
    weak: bool
    strong: bool
    failing_weak: Optional[tuple]
    failing_strong: Optional[tuple]


def matroid_report(P: PluckerVector) -> MatroidReport:
    fw = first_failing_relation(P, weak_only=True)
    fs = first_failing_relation(P, weak_only=False)
    return MatroidReport(fw is None, fs is None, fw, fs)


# ---------------------------------------------------------------------------
# circuits, duality, orthogonality


@lru_cache(maxsize=None)
def circuits(P: PluckerVector) -> CircuitSet:
    """Canonical F-circuits from the alternating C_tau construction."""
    d = P.tract
    pm = P.emap
    vecs = []
    for tau in subsets(P.n, P.r + 1):
        coords = [None] * P.n
        nonzero = False
        for s, i in enumerate(tau):
            p = pm.get(subset_remove(tau, i))
            if p is None:
                continue
            coords[i] = T.unit_neg(d, p) if s % 2 else p
            nonzero = True
        if nonzero:
            vecs.append(TractVector(d, tuple(coords)))
    return build_circuit_set(d, P.n, vecs)


@lru_cache(maxsize=None)
def dual(P: PluckerVector) -> PluckerVector:
    """Dual Plucker vector P*(I) = sign(I, I^c) . conj(P(I^c))."""
    d = P.tract
    ents = []
    for I in subsets(P.n, P.n - P.r):
        Ic = tuple(i for i in range(P.n) if i not in I)
        p = P.emap.get(Ic)
        if p is None:
            continue
        p = T.unit_conj(d, p)
        if perm_sign(I + Ic) < 0:
            p = T.unit_neg(d, p)
        ents.append((I, p))
    return PluckerVector(d, P.n, P.n - P.r, tuple(sorted(ents)))


def cocircuits(P: PluckerVector) -> CircuitSet:
    return circuits(dual(P))


def inner_product(X: TractVector, Y: TractVector) -> T.FormalSum:
    if X.tract != Y.tract or X.n != Y.n:
        raise SchemaError("inner product needs matching tract and length")
    d = X.tract
    terms = []
    for a, b in zip(X.coords, Y.coords):
        if a is not None and b is not None:
            terms.append(T.unit_mul(d, a, T.unit_conj(d, b)))
    return T.FormalSum(d, tuple(terms))


def is_orthogonal(X: TractVector, Y: TractVector) -> bool:
    return inner_product(X, Y).is_null()


def is_covector(C: CircuitSet, X: TractVector) -> bool:
    """X orthogonal to every circuit (one representative per class suffices)."""
    return all(is_orthogonal(X, c) for c in C)


def min_supp(vecs: Sequence[TractVector]) -> list:
    """Nonzero vectors whose support contains no other's support strictly."""
    vecs = [v for v in vecs if not v.is_zero()]
    sups = [set(v.support()) for v in vecs]
    out = []
    for i, v in enumerate(vecs):
        if not any(sups[j] < sups[i] for j in range(len(vecs)) if j != i):
            out.append(v)
    return out


# ---------------------------------------------------------------------------
# minors (circuit level, ground set re-indexed to the sorted complement)


def _kept(n: int, A) -> list:
    A = set(A)
    return [i for i in range(n) if i not in A]


def delete(C: CircuitSet, A) -> CircuitSet:
    keep = _kept(C.n, A)
    vecs = [v.restrict(keep) for v in C if not (set(v.support()) & set(A))]
    return build_circuit_set(C.tract, len(keep), vecs)


def contract(C: CircuitSet, A) -> CircuitSet:
    keep = _kept(C.n, A)
    vecs = min_supp([v.restrict(keep) for v in C])
    return build_circuit_set(C.tract, len(keep), vecs)


# ---------------------------------------------------------------------------
# loop / coloop extension: new elements occupy `positions` in the larger
# ground set 0..n+|A|-1, old elements keep their relative order


def _old_index_map(n_new: int, positions) -> list:
    pos = set(positions)
    return [i for i in range(n_new) if i not in pos]


def add_loops(P: PluckerVector, positions) -> PluckerVector:
    n_new = P.n + len(positions)
    old = _old_index_map(n_new, positions)
    ents = tuple(sorted((tuple(old[i] for i in B), p) for B, p in P.entries))
    return PluckerVector(P.tract, n_new, P.r, ents)


def add_coloops(P: PluckerVector, positions) -> PluckerVector:
    n_new = P.n + len(positions)
    old = _old_index_map(n_new, positions)
    pos = tuple(sorted(positions))
    ents = tuple(sorted(
        (tuple(sorted(tuple(old[i] for i in B) + pos)), p) for B, p in P.entries))
    return PluckerVector(P.tract, n_new, P.r + len(positions), ents)


# ---------------------------------------------------------------------------
# push-forwards


def pushforward(P: PluckerVector, h: T.Hom) -> PluckerVector:
    if not h.is_homomorphism:
        raise SchemaError(f"{h.name} is not a tract homomorphism")
    if not h.applies(P.tract):
        raise SchemaError(f"{h.name} not applicable to {P.tract}")
    tgt = h.target(P.tract)
    ents = tuple((B, h.map_payload(P.tract, p)) for B, p in P.entries)
    return PluckerVector(tgt, P.n, P.r, ents)


def pushforward_circuits(C: CircuitSet, h: T.Hom) -> CircuitSet:
    if not h.is_homomorphism:
        raise SchemaError(f"{h.name} is not a tract homomorphism")
    tgt = h.target(C.tract)
    vecs = [TractVector(tgt, tuple(h.map_payload(C.tract, c) for c in v.coords))
            for v in C]
    return build_circuit_set(tgt, C.n, vecs)


def map_vector(X: TractVector, h: T.Hom) -> TractVector:
    """Coordinatewise image; also usable for the non-homomorphism theta."""
    tgt = h.target(X.tract)
    return TractVector(tgt, tuple(h.map_payload(X.tract, c) for c in X.coords))


# ---------------------------------------------------------------------------
# fundamental cocircuits and spans


def fundamental_cocircuit(P: PluckerVector, B, j: int) -> TractVector:
    """The unique cocircuit supported in (E \\ B) + j, scaled to identity at j."""
    B = tuple(sorted(B))
    if B not in P.emap:
        raise SchemaError(f"{B} is not a basis of the underlying matroid")
    if j not in B:
        raise SchemaError(f"{j} not in basis {B}")
    allowed = (set(range(P.n)) - set(B)) | {j}
    hits = [D for D in cocircuits(P)
            if j in D.support() and set(D.support()) <= allowed]
    if len(hits) != 1:
        raise IntegrityError(
            f"expected one fundamental cocircuit for (j={j}, B={B}), found {len(hits)}")
    D = hits[0]
    return D.scale(T.unit_inv(P.tract, D.coords[j]))


def fundamental_cocircuits(P: PluckerVector, B) -> list:
    return [fundamental_cocircuit(P, B, j) for j in sorted(B)]


def span_contains(generators: Sequence[TractVector], X: TractVector,
                  scalar_domain: Sequence[TractElement]) -> bool:
    """Exhaustive test that X lies in the span of the generators.

    Searches assignments alpha over scalar_domain^k and checks that
    X_k - sum alpha_i . (gen_i)_k is null in every coordinate.  The domain
    must contain the tract zero.
    """
    d = X.tract
    if not any(s.is_zero() for s in scalar_domain):
        raise SchemaError("scalar domain must contain the tract zero")
    k = len(generators)
    check_guard(len(scalar_domain) ** k, "span search space")
    doms = [s.payload for s in scalar_domain]
    gens = [g.coords for g in generators]
    for alphas in itertools.product(doms, repeat=k):
        ok = True
        for coord in range(X.n):
            terms = []
            if X.coords[coord] is not None:
                terms.append(X.coords[coord])
            for a, g in zip(alphas, gens):
                if a is None or g[coord] is None:
                    continue
                terms.append(T.unit_neg(d, T.unit_mul(d, a, g[coord])))
            if not T.null(d, terms):
                ok = False
                break
        if ok:
            return True
    return False


# ---------------------------------------------------------------------------
# reconstruction of a Plucker vector from a circuit set


def bases_from_circuits(C: CircuitSet, r: int) -> list:
    sups = [set(v.support()) for v in C]
    return [B for B in subsets(C.n, r) if not any(s <= set(B) for s in sups)]


def rank_of_subset(bases: Sequence[Subset], A) -> int:
    A = set(A)
    return max((len(A & set(B)) for B in bases), default=0)


def reconstruct_plucker(C: CircuitSet, r: int) -> PluckerVector:
    """Solve for a Plucker vector with the given circuits, rank r.

    Walks the basis-exchange graph from an arbitrary basis fixing its entry
    to the identity; each step reads the entry ratio off the unique circuit
    inside the union of two adjacent bases.  The result is validated by
    regenerating the circuits.
    """
    d = C.tract
    bases = bases_from_circuits(C, r)
    if not bases:
        raise IntegrityError("no bases: circuit set incompatible with the given rank")
    values = {bases[0]: T.unit_one(d)}
    queue = [bases[0]]
    basis_set = set(bases)
    while queue:
        B = queue.pop()
        for b_out in B:
            for b_in in range(C.n):
                if b_in in B:
                    continue
                B2 = tuple(sorted(set(B) - {b_out} | {b_in}))
                if B2 not in basis_set or B2 in values:
                    continue
                tau = tuple(sorted(set(B) | {b_in}))
                inside = [v for v in C if set(v.support()) <= set(tau)]
                if len(inside) != 1:
                    raise IntegrityError(
                        f"{len(inside)} circuits inside {tau}; expected the "
                        "fundamental circuit")
                D = inside[0]
                # tau \ {b_out} = B2 and tau \ {b_in} = B, so C_tau gives
                # P(B2) = (-1)^{s_a+s_b} P(B) . D[b_out] . inv(D[b_in])
                s_a = tau.index(b_out)
                s_b = tau.index(b_in)
                da, db = D.coords[b_out], D.coords[b_in]
                if da is None or db is None:
                    raise IntegrityError("fundamental circuit missing exchange support")
                ratio = T.unit_mul(d, da, T.unit_inv(d, db))
                val = T.unit_mul(d, values[B], ratio)
                if (s_a + s_b) % 2:
                    val = T.unit_neg(d, val)
                values[B2] = val
                queue.append(B2)
    if len(values) != len(bases):
        raise IntegrityError("basis exchange graph disconnected; not a matroid")
    P = PluckerVector(d, C.n, r, tuple(sorted(values.items())))
    if not circuit_sets_equal(circuits(P), C):
        raise IntegrityError("reconstructed Plucker vector does not regenerate "
                             "the circuits")
    return P
