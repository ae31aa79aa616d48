"""The acceptance suite: one callable per criterion, shared by pytest and
the CLI demo harness.  Every check is exact; randomness is seeded.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import fixtures as F
from . import flags as FL
from . import gamma as G
from . import initial as IN
from . import linspace as L
from . import matroids as M
from . import tracts as T
from . import valuation as V
from .matroids import TractVector
from .series import HahnSeries

Q = Fraction


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"[{mark}] criterion {self.number}: {self.name}{extra}"


def _result(number, name, passed, detail=""):
    return CriterionResult(number, name, bool(passed), detail)


# ---------------------------------------------------------------------------
# helpers


def _canon_set(tract, n, vectors):
    return M.build_circuit_set(tract, n, vectors)


def all_failing_relations(P: M.PluckerVector) -> list:
    out = []
    for I, J, terms in M.relation_table(P.n, P.r, P.r):
        acc = []
        for sgn, B1, B2, _ in terms:
            a = P.emap.get(B1)
            if a is None:
                continue
            b = P.emap.get(B2)
            if b is None:
                continue
            prod = T.unit_mul(P.tract, a, b)
            if sgn < 0:
                prod = T.unit_neg(P.tract, prod)
            acc.append(prod)
        if acc and not T.null(P.tract, acc):
            out.append((I, J))
    return out


def random_series(rng: random.Random, allow_zero=False) -> HahnSeries:
    while True:
        pairs = [(Q(rng.randint(0, 3)), Q(rng.randint(-4, 4)))
                 for _ in range(rng.randint(1, 2))]
        s = HahnSeries.from_pairs(pairs)
        if allow_zero or not s.is_zero():
            return s


def random_series_matrix(rng: random.Random, d: int, n: int) -> V.SeriesMatrix:
    """Random matrix with every maximal minor nonzero (retry until uniform)."""
    while True:
        A = V.series_matrix([[random_series(rng) for _ in range(n)]
                             for _ in range(d)])
        if all(not A.col_minor(c).is_zero()
               for c in itertools.combinations(range(n), d)):
            return A


def random_toric_u(rng: random.Random, n: int, lo=-3, hi=3) -> tuple:
    return tuple(Q(rng.randint(lo, hi)) for _ in range(n))


_FIXTURES: Optional[list] = None


def standard_fixtures() -> list:
    """Extension-tract matroids used by the random property criteria."""
    global _FIXTURES
    if _FIXTURES is None:
        P = F.hahn_plucker()
        _FIXTURES = [
            V.tropicalize_matroid(P, "val"),
            V.tropicalize_matroid(P, "sval"),
            V.tropicalize_matroid(P, "fval"),
            F.positroid_plucker(),
            F.triangle_plucker(),
        ]
    return _FIXTURES


def _int_u(u, P):
    # triangle fixture carries integer gammas; rational fixtures take Fractions
    if P.tract.gamma.kind == "int":
        return tuple(int(g) for g in u)
    return u


# ---------------------------------------------------------------------------
# criteria


def criterion_1() -> CriterionResult:
    P = F.hahn_plucker()
    got = [P.emap.get(B) for B in M.subsets(4, 2)]
    ok = got == F.EXPECTED_PLUCKER
    return _result(1, "Plucker vector of the 2x4 Hahn matrix", ok,
                   "[" + " : ".join(str(x) for x in got) + "]")


def _circuits_match(kind, expected_vectors) -> bool:
    P = V.tropicalize_matroid(F.hahn_plucker(), kind)
    C = M.circuits(P)
    E = _canon_set(P.tract, P.n, expected_vectors)
    return M.circuit_sets_equal(C, E)


def criterion_2() -> CriterionResult:
    ok = _circuits_match("val", F.val_circuit_vectors())
    return _result(2, "valuated circuits of val(P_N)", ok)


def criterion_3() -> CriterionResult:
    ok = _circuits_match("sval", F.sval_circuit_vectors())
    return _result(3, "signed circuits of sval(P_N)", ok)


def _sign_covectors(C: M.CircuitSet) -> set:
    cells = (1, -1, None)
    out = set()
    for coords in itertools.product(cells, repeat=C.n):
        X = TractVector(T.SIGN, coords)
        if M.is_covector(C, X):
            out.add(coords)
    return out


def criterion_4() -> CriterionResult:
    P = V.tropicalize_matroid(F.hahn_plucker(), "sval")
    # ray [1] circuits
    u1 = F.REGION_REPRESENTATIVES[1]
    C1 = IN.initial_circuits(P, u1)
    expect1 = {(None, 1, 1, None), (None, 1, None, -1), (None, None, 1, 1)}
    ok = {v.coords for v in C1} == expect1
    for k, u in F.REGION_REPRESENTATIVES.items():
        got = _sign_covectors(IN.initial_circuits(P, u))
        if got != F.region_covector_patterns(k):
            return _result(4, "seven sval covector families", False,
                           f"region [{k}] disagrees with the plane sign patterns")
        if k in F.SVAL_REGION_FAMILIES and got != F.SVAL_REGION_FAMILIES[k]:
            return _result(4, "seven sval covector families", False,
                           f"region [{k}] disagrees with the printed family")
    # Krasner side of ray [1]
    PV = V.tropicalize_matroid(F.hahn_plucker(), "val")
    kc = IN.initial_circuits(PV, u1)
    ok = ok and set(kc.supports()) == F.RAY1_K_CIRCUIT_SUPPORTS
    return _result(4, "ray [1] initial matroid and the seven covector families", ok)


def criterion_5() -> CriterionResult:
    P = F.triangle_plucker(delta=-1)
    rep = M.matroid_report(P)
    fails = all_failing_relations(P)
    ok = rep.weak and not rep.strong and fails == [F.TRIANGLE_FAILING]
    if not ok:
        return _result(5, "triangle counterexample", False,
                       f"weak={rep.weak} strong={rep.strong} failing={fails}")
    # every toric initial over the grid is strong; strength depends only on
    # the surviving support, so memoise by it
    seen: dict = {}
    count = 0
    for u in IN.integer_box(6, -2, 2):
        Q0 = IN.toric_initial(P, u)
        key = Q0.support()
        if key not in seen:
            seen[key] = M.is_strong_matroid(Q0)
        if not seen[key]:
            return _result(5, "triangle counterexample", False,
                           f"initial at u={u} not strong")
        count += 1
    return _result(5, "triangle counterexample (weak, not strong, initials strong)",
                   True, f"{count} initials, {len(seen)} distinct supports")


def criterion_6() -> CriterionResult:
    rng = random.Random(601)
    trials = 0
    for n in (4, 5):
        for _ in range(15):
            A = random_series_matrix(rng, 2, n)
            P = V.tropicalize_matroid(V.plucker_from_matrix(A), "sval")
            if not M.is_strong_matroid(P):
                return _result(6, "Theorem A harness", False,
                               f"sval matroid not strong (n={n})")
            # break one three-term relation by sinking one entry's modulus
            I = (rng.randrange(n),)
            J = tuple(sorted(rng.sample([j for j in range(n) if j not in I], 3)))
            j0 = J[0]
            Bstar = M.subset_add(I, j0)
            s, g = P.emap[Bstar]
            ents = dict(P.entries)
            ents[Bstar] = (s, g - 10)
            P2 = M.plucker(P.tract, P.n, P.r, ents)
            if M.relation_holds(P2, P2, I, J):
                return _result(6, "Theorem A harness", False,
                               "mutation failed to break the relation")
            u = IN.witness_u(P2, I, J)
            Q2 = IN.toric_initial(P2, u)
            if M.relation_holds(Q2, Q2, I, J):
                return _result(6, "Theorem A harness", False,
                               "witness initial satisfied the broken relation")
            trials += 1
    return _result(6, "Theorem A harness (30 random matroids + witnesses)",
                   True, f"{trials} trials")


def criterion_7() -> CriterionResult:
    rng = random.Random(701)
    pairs = 0
    for P in standard_fixtures():
        if not M.plucker_equivalent(M.dual(M.dual(P)), P):
            return _result(7, "duality properties", False, "dual(dual) != id")
        for _ in range(20):
            u = _int_u(random_toric_u(rng, P.n), P)
            if not IN.initial_dual_check(P, u):
                return _result(7, "duality properties", False,
                               f"(M^u)* != (M*)^(-u) at u={u}")
            pairs += 1
    return _result(7, "duality: dual(dual)=id and (M^u)*=(M*)^(-u)",
                   True, f"{pairs} pairs")


def criterion_8() -> CriterionResult:
    rng = random.Random(801)
    runs = 0
    for P in standard_fixtures():
        for _ in range(20):
            u = _int_u(random_toric_u(rng, P.n), P)
            IN.initial_circuits_of(P, u)  # raises IntegrityError on mismatch
            runs += 1
    return _result(8, "initial-circuit identity on 100 random toric u",
                   True, f"{runs} runs")


def _grid_gammas():
    return [Q(-1), Q(0), Q(1), G.INF]


def criterion_9() -> CriterionResult:
    P = F.hahn_plucker()
    for kind in ("val", "sval"):
        PM = V.tropicalize_matroid(P, kind)
        grid = L.make_grid(PM.tract, 4, _grid_gammas())
        dom = L.default_scalar_domain(PM, _grid_gammas())
        coc = M.cocircuits(PM)
        for X in grid.points():
            rec = L.evaluate_point(PM, X, scalar_domain=dom)
            if not rec.agree:
                return _result(9, "Theorem D agreement", False,
                               f"{kind}: characterisations disagree at {X.coords}")
            if kind == "val":
                mods = L.modulus_direction(X)
                if rec.member != F.in_seven_regions(mods):
                    return _result(9, "Theorem D agreement", False,
                                   f"seven-region mismatch at {mods}")
                if rec.member != L.member_loopless_K(PM, X):
                    return _result(9, "Theorem D agreement", False,
                                   f"loopless mismatch at {mods}")
                if rec.member != L.tspan_member_K(coc, X):
                    return _result(9, "Theorem D agreement", False,
                                   f"tspan mismatch at {mods}")
            else:
                if rec.member != L.member_nonconformal_S(PM, X):
                    return _result(9, "Theorem D agreement", False,
                                   f"conformality mismatch at {X.coords}")
    return _result(9, "Theorem D characterisations agree on the grids", True,
                   "val: 256 points, sval: 2401 points")


def _random_quotient_pair(rng: random.Random):
    """Rank (2,3) subspace pair on five elements over the Hahn tract."""
    while True:
        A3 = random_series_matrix(rng, 3, 5)
        lam = [Q(rng.randint(-3, 3)) for _ in range(6)]
        r1 = [A3.rows[0][j].scale(lam[0]) + A3.rows[1][j].scale(lam[1])
              + A3.rows[2][j].scale(lam[2]) for j in range(5)]
        r2 = [A3.rows[0][j].scale(lam[3]) + A3.rows[1][j].scale(lam[4])
              + A3.rows[2][j].scale(lam[5]) for j in range(5)]
        A2 = V.series_matrix([r1, r2])
        try:
            P2 = V.plucker_from_matrix(A2)
        except Exception:
            continue
        if P2.r != 2 or len(P2.entries) < 3:
            continue
        P3 = V.plucker_from_matrix(A3)
        return A3, A2, P3, P2


def _matrix_minor_plucker(A: V.SeriesMatrix, P: M.PluckerVector, e: int,
                          op: str) -> Optional[M.PluckerVector]:
    """Plucker vector of a one-element minor, computed from the realisation.

    Cross-checks the circuit-level minor of the matroid against the matrix
    route before returning.
    """
    try:
        A2 = V.delete_matrix(A, (e,)) if op == "delete" else V.contract_matrix(A, e)
        P2 = V.plucker_from_matrix(A2)
    except Exception:
        return None
    C_matrix = M.circuits(P2)
    C_circ = (M.delete if op == "delete" else M.contract)(M.circuits(P), (e,))
    if not M.circuit_sets_equal(C_matrix, C_circ):
        raise M.IntegrityError(f"{op} circuits disagree with the matrix minor")
    return P2


def criterion_10() -> CriterionResult:
    rng = random.Random(1001)
    P1, P2 = F.rank1_plucker(), F.hahn_plucker()
    base_flag = FL.FlagSequence((P1, P2))
    if not FL.is_flag(base_flag):
        return _result(10, "flag harness", False, "Hahn rank-(1,2) flag rejected")
    flags = {"hahn": base_flag}
    for kind in ("val", "sval", "fval"):
        Fk = FL.FlagSequence(tuple(V.tropicalize_matroid(p, kind) for p in base_flag))
        if not FL.is_flag(Fk):
            return _result(10, "flag harness", False, f"{kind} push-forward not a flag")
        flags[kind] = Fk
    inf = G.INF
    u_grid = [
        (Q(0), Q(0), Q(0), Q(0)), (Q(1), Q(0), Q(-1), Q(2)),
        (inf, Q(0), Q(0), Q(0)), (Q(0), inf, Q(1), Q(0)),
        (inf, inf, Q(0), Q(0)), (Q(2), Q(-1), Q(0), inf),
    ]
    for kind in ("val", "sval", "fval"):
        for u in u_grid:
            Fu = FL.initial_flag(flags[kind], u)  # asserts the flag property
            if not FL.is_flag(Fu):
                return _result(10, "flag harness", False,
                               f"initial flag failed for {kind} at u={u}")
    # quotient preservation under minors and loop/coloop extension
    checked = 0
    while checked < 50:
        A3, A2, P3, P2q = _random_quotient_pair(rng)
        if not FL.is_quotient(P3, P2q):
            return _result(10, "flag harness", False, "random pair not a quotient")
        e = rng.randrange(5)
        dn = _matrix_minor_plucker(A3, P3, e, "delete")
        dm = _matrix_minor_plucker(A2, P2q, e, "delete")
        if dn is not None and dm is not None and dm.r <= dn.r:
            if not FL.is_quotient(dn, dm):
                return _result(10, "flag harness", False,
                               f"deletion broke a quotient at e={e}")
        cn = _matrix_minor_plucker(A3, P3, e, "contract")
        cm = _matrix_minor_plucker(A2, P2q, e, "contract")
        if cn is not None and cm is not None and cm.r <= cn.r:
            if not FL.is_quotient(cn, cm):
                return _result(10, "flag harness", False,
                               f"contraction broke a quotient at e={e}")
        if not FL.is_quotient(M.add_loops(P3, (5,)), M.add_loops(P2q, (5,))):
            return _result(10, "flag harness", False, "loop extension broke a quotient")
        if not FL.is_quotient(M.add_coloops(P3, (5,)), M.add_coloops(P2q, (5,))):
            return _result(10, "flag harness", False, "coloop extension broke a quotient")
        checked += 1
    return _result(10, "flag harness (flags, initials, quotient preservation)",
                   True, f"{checked} random instances")


def criterion_11() -> CriterionResult:
    P = F.positroid_plucker()
    o = FL.TractOrdering.natural(P.tract)
    if not FL.is_positroid(P, o, "strong"):
        return _result(11, "positroid harness", False, "fixture not a positroid")
    base_o = FL.TractOrdering.natural(T.SIGN)
    rng = random.Random(1101)
    seen: dict = {}
    for _ in range(60):
        u = random_toric_u(rng, 4, -2, 2)
        Q0 = IN.toric_initial(P, u)
        key = Q0.entries
        if key not in seen:
            seen[key] = FL.is_positroid(Q0, base_o, "strong")
        if not seen[key]:
            return _result(11, "positroid harness", False,
                           f"initial at u={u} not an S-positroid")
    bad = F.mixed_sign_plucker()
    if not M.is_strong_matroid(bad):
        return _result(11, "positroid harness", False, "sign-flipped fixture not a matroid")
    if FL.is_positroid(bad, o, "strong"):
        return _result(11, "positroid harness", False,
                       "sign-flipped fixture passed positivity")
    return _result(11, "positroid harness (Theorem C closure + negative control)",
                   True, f"{len(seen)} distinct initials")


def criterion_12() -> CriterionResult:
    A = F.HAHN_MATRIX
    gam = _grid_gammas()
    fval_units = [HahnSeries.const(c) for c in (1, -1, 2, -2)]
    for kind, units in (("val", None), ("sval", None), ("fval", fval_units)):
        PM = V.tropicalize_matroid(F.hahn_plucker(), kind)
        grid = L.make_grid(PM.tract, 4, gam, units=units)
        rep = V.sample_and_check_tropicalisation(A, kind, trials=500, grid=grid)
        if not rep.ok:
            return _result(12, "tropicalisation", False,
                           f"{kind}: {len(rep.containment_failures)} containment "
                           f"failures, {len(rep.unmatched)} unmatched of "
                           f"{rep.members_checked}")
    # fval initial degenerations across the seven regions
    circuits_h = F.hahn_circuit_vectors()
    for k, u in F.REGION_REPRESENTATIVES.items():
        forms = []
        for C in circuits_h:
            f = V.initial_form(C, u)
            forms.append([Q(0) if c is None else c.lc() for c in f.coords])
        if not V.span_equals_kernel(F.FVAL_REGION_SPANS[k], forms):
            return _result(12, "tropicalisation", False,
                           f"initial degeneration mismatch on region [{k}]")
    return _result(12, "tropicalisation (containment, coverage, degenerations)", True)


def criterion_13() -> CriterionResult:
    rng = random.Random(1301)
    for _ in range(1000):
        a, b = random_series(rng), random_series(rng)
        for kind in ("val", "sval", "fval"):
            va, vb = V.valuate(a, kind), V.valuate(b, kind)
            if V.valuate(a * b, kind) != va * vb:
                return _result(13, "valuation homomorphism suite", False,
                               f"{kind}: multiplicativity failed on {a}, {b}")
            vs = V.valuate(a + b, kind)
            if not T.formal_sum(va.tract, [va, vb, -vs]).is_null():
                return _result(13, "valuation homomorphism suite", False,
                               f"{kind}: hyperaddition containment failed on {a}, {b}")
    return _result(13, "valuation homomorphism suite (1000 pairs x 3 maps)", True)


CRITERIA: list[Callable[[], CriterionResult]] = [
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
    criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
    criterion_11, criterion_12, criterion_13,
]


def run_all(echo=print) -> bool:
    ok = True
    for fn in CRITERIA:
        res = fn()
        echo(res.line())
        ok = ok and res.passed
    return ok
