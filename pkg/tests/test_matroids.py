import itertools
import random
from fractions import Fraction as Q

import pytest

from tracta import fixtures as F
from tracta import gamma as G
from tracta import matroids as M
from tracta import tracts as T
from tracta import valuation as V
from tracta.errors import IntegrityError, SchemaError
from tracta.series import HahnSeries, ONE

SZ = T.extension(T.SIGN, G.RATIONAL)
KZ = T.extension(T.KRASNER, G.RATIONAL)


def u24_krasner():
    return M.plucker(T.KRASNER, 4, 2, {B: 1 for B in M.subsets(4, 2)})


class TestIncidenceSign:
    def test_smallest_of_J(self):
        # l = 3 + 2 = 5
        assert M.incidence_sign(0, (4, 5), (0, 1, 2, 3)) == -1

    def test_largest_of_J(self):
        assert M.incidence_sign(3, (1, 2), (0, 1, 2, 3)) == 1

    def test_j_not_in_J(self):
        with pytest.raises(SchemaError):
            M.incidence_sign(9, (0,), (1, 2, 3))

    def test_alternating_identity_on_fields(self):
        # the sign convention must make the classical Plucker identity vanish
        rng = random.Random(5)

        def det(rows, cols):
            cols = list(cols)
            n = len(cols)
            if n == 1:
                return rows[0][cols[0]]
            return sum((-1) ** k * rows[0][cols[k]]
                       * det(rows[1:], cols[:k] + cols[k + 1:])
                       for k in range(n))

        for d, n in ((2, 4), (3, 6)):
            A = [[Q(rng.randint(-6, 6)) for _ in range(n)] for _ in range(d)]
            for I in M.subsets(n, d - 1):
                for J in M.subsets(n, d + 1):
                    total = Q(0)
                    for j in J:
                        if j in I:
                            continue
                        total += (M.incidence_sign(j, I, J)
                                  * det(A, sorted(I + (j,)))
                                  * det(A, [x for x in J if x != j]))
                    assert total == 0


class TestRelations:
    def test_uniform_krasner(self):
        P = u24_krasner()
        for I in M.subsets(4, 1):
            for J in M.subsets(4, 3):
                assert M.relation_holds(P, P, I, J)
        assert M.is_weak_matroid(P) and M.is_strong_matroid(P)

    def test_triangle_failure(self):
        P = F.triangle_plucker()
        assert not M.relation_holds(P, P, (4, 5), (0, 1, 2, 3))
        rep = M.matroid_report(P)
        assert rep.weak and not rep.strong
        assert rep.failing_strong == ((4, 5), (0, 1, 2, 3))

    def test_hahn_fixture_strong(self):
        P = F.hahn_plucker()
        assert M.is_strong_matroid(P)
        PS = V.tropicalize_matroid(P, "sval")
        assert M.is_weak_matroid(PS) and M.is_strong_matroid(PS)

    def test_matrix_oracle_vs_strongness(self):
        # Plucker vectors of matrices are strong; a perturbed entry breaks it
        rng = random.Random(11)
        from tracta.acceptance import random_series_matrix

        for n in (4, 5):
            A = random_series_matrix(rng, 2, n)
            assert M.is_strong_matroid(V.plucker_from_matrix(A))
        P = F.hahn_plucker()
        ents = dict(P.entries)
        ents[(0, 1)] = HahnSeries.from_pairs([(0, 1), (1, 7)])
        assert not M.is_strong_matroid(M.plucker(T.HAHN, 4, 2, ents))


class TestCircuits:
    def test_hahn_circuits_match_ideal_generators(self):
        C = M.circuits(F.hahn_plucker())
        E = M.build_circuit_set(T.HAHN, 4, F.hahn_circuit_vectors())
        assert M.circuit_sets_equal(C, E)
        assert C.supports() == ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))

    def test_u12_single_circuit(self):
        P = M.plucker(T.KRASNER, 2, 1, {(0,): 1, (1,): 1})
        assert [v.coords for v in M.circuits(P)] == [(1, 1)]

    def test_supports_equal_underlying_circuits(self):
        # independent oracle: minimal dependent sets from the bases
        for P in (F.hahn_plucker(), F.triangle_plucker(),
                  V.tropicalize_matroid(F.hahn_plucker(), "sval")):
            bases = [set(B) for B in M.underlying_bases(P)]
            dependent = []
            for k in range(1, P.r + 2):
                for S in M.subsets(P.n, k):
                    if not any(set(S) <= B for B in bases):
                        dependent.append(set(S))
            minimal = {tuple(sorted(S)) for S in dependent
                       if not any(D < S for D in dependent)}
            assert set(M.circuits(P).supports()) == minimal

    def test_incomparability_enforced(self):
        v1 = M.vector(T.KRASNER, [1, 1, None])
        v2 = M.vector(T.KRASNER, [1, 1, 1])
        with pytest.raises(IntegrityError):
            M.build_circuit_set(T.KRASNER, 3, [v1, v2])


class TestDuality:
    def test_double_dual_identity(self):
        for P in (F.hahn_plucker(), F.triangle_plucker(), u24_krasner()):
            assert M.plucker_equivalent(M.dual(M.dual(P)), P)

    def test_underlying_complement(self):
        P = F.triangle_plucker()
        bases = set(M.underlying_bases(P))
        dbases = set(M.underlying_bases(M.dual(P)))
        comp = {tuple(i for i in range(6) if i not in B) for B in bases}
        assert dbases == comp

    def test_dual_circuits_orthogonal_to_primal(self):
        P = F.hahn_plucker()
        for C in M.circuits(P):
            for D in M.cocircuits(P):
                assert M.is_orthogonal(C, D)


class TestInnerProduct:
    def test_exact_cancellation(self):
        X = M.vector(T.HAHN, [HahnSeries.const(c) if c else None
                              for c in (2, 1, 1, 0)])
        Y = M.vector(T.HAHN, [HahnSeries.const(c) if c else None
                              for c in (1, -1, -1, 5)])
        assert M.is_orthogonal(X, Y)

    def test_sign_orthogonality(self):
        X = M.vector(T.SIGN, [1, 1, None])
        Y = M.vector(T.SIGN, [1, -1, None])
        assert M.is_orthogonal(X, Y)

    def test_extension_min_singleton(self):
        X = M.vector(SZ, [(1, Q(0)), (1, Q(0)), (-1, Q(0))])
        Y = M.vector(SZ, [(1, Q(0)), (-1, Q(1)), (1, Q(3))])
        assert not M.is_orthogonal(X, Y)


class TestCovectors:
    def test_single_circuit_regions(self):
        P = F.one_circuit_signed()
        C = M.circuits(P)
        assert M.is_covector(C, M.vector(SZ, [(-1, Q(2)), (1, Q(0)), (1, Q(0))]))
        assert not M.is_covector(C, M.vector(SZ, [(-1, Q(0)), (-1, Q(0)), (1, Q(0))]))

    def test_zero_vector_always(self):
        C = M.circuits(F.hahn_plucker())
        assert M.is_covector(C, M.TractVector(T.HAHN, (None,) * 4))


class TestMinSupp:
    def test_drops_dominated(self):
        a = M.vector(T.KRASNER, [1, 1, None])
        b = M.vector(T.KRASNER, [1, 1, 1])
        assert M.min_supp([a, b]) == [a]

    def test_empty(self):
        assert M.min_supp([]) == []

    def test_composed_vector_dropped(self):
        P = u24_krasner()
        C = list(M.circuits(P))
        composed = M.vector(T.KRASNER, [1, 1, 1, 1])
        assert set(map(id, M.min_supp(C + [composed]))) == set(map(id, C))


class TestMinors:
    def test_contract_matches_matrix_pivot(self):
        C = M.circuits(F.hahn_plucker())
        Cc = M.contract(C, (3,))
        P2 = V.plucker_from_matrix(V.contract_matrix(F.HAHN_MATRIX, 3))
        assert M.circuit_sets_equal(Cc, M.circuits(P2))
        assert Cc.supports() == ((0, 1), (0, 2), (1, 2))

    def test_delete_matches_matrix(self):
        C = M.circuits(F.hahn_plucker())
        Cd = M.delete(C, (0,))
        P2 = V.plucker_from_matrix(V.delete_matrix(F.HAHN_MATRIX, (0,)))
        assert M.circuit_sets_equal(Cd, M.circuits(P2))

    def test_delete_nothing(self):
        C = M.circuits(F.hahn_plucker())
        assert M.circuit_sets_equal(M.delete(C, ()), C)

    def test_contract_everything(self):
        C = M.circuits(F.hahn_plucker())
        assert len(M.contract(C, (0, 1, 2, 3))) == 0

    def test_minor_duality(self):
        # (M \ A)* = M* / A and (M / A)* = M* \ A at the circuit level
        P = F.hahn_plucker()
        A = (1,)
        del_star = M.circuits(M.dual(V.plucker_from_matrix(
            V.delete_matrix(F.HAHN_MATRIX, A))))
        assert M.circuit_sets_equal(del_star, M.contract(M.cocircuits(P), A))
        con_star = M.circuits(M.dual(V.plucker_from_matrix(
            V.contract_matrix(F.HAHN_MATRIX, 1))))
        assert M.circuit_sets_equal(con_star, M.delete(M.cocircuits(P), A))


class TestLoopsColoops:
    def test_loop_circuits(self):
        P = V.tropicalize_matroid(F.hahn_plucker(), "sval")
        Pl = M.add_loops(P, (4,))
        C = M.circuits(Pl)
        old = {v.coords + (None,) for v in M.circuits(P)}
        chi = tuple(None if i != 4 else (1, Q(0)) for i in range(5))
        assert {v.coords for v in C} == old | {chi}

    def test_coloop_circuits(self):
        P = V.tropicalize_matroid(F.hahn_plucker(), "sval")
        Pc = M.add_coloops(P, (0,))
        assert Pc.r == P.r + 1
        C = M.circuits(Pc)
        old = {(None,) + v.coords for v in M.circuits(P)}
        assert {v.coords for v in C} == old

    def test_loop_coloop_duality(self):
        P = V.tropicalize_matroid(F.hahn_plucker(), "val")
        lhs = M.dual(M.add_loops(P, (2,)))
        rhs = M.add_coloops(M.dual(P), (2,))
        assert M.plucker_equivalent(lhs, rhs)

    def test_overlap_rejected(self):
        P = F.hahn_plucker()
        entries_before = P.entries
        Pl = M.add_loops(P, (4,))
        assert Pl.n == 5 and P.entries == entries_before


class TestPushforward:
    def test_trivial_support(self):
        P = F.hahn_plucker()
        PK = M.pushforward(P, T.TRIVIAL_TO_K)
        assert M.underlying_bases(PK) == M.underlying_bases(P)

    def test_modulus_of_signed_is_valuated(self):
        PS = V.tropicalize_matroid(F.hahn_plucker(), "sval")
        PM = M.pushforward(PS, T.MODULUS)
        PV = V.tropicalize_matroid(F.hahn_plucker(), "val")
        assert M.plucker_equivalent(PM, PV)

    def test_circuits_commute(self):
        PS = V.tropicalize_matroid(F.hahn_plucker(), "sval")
        lhs = M.circuits(M.pushforward(PS, T.MODULUS))
        rhs = M.pushforward_circuits(M.circuits(PS), T.MODULUS)
        assert M.circuit_sets_equal(lhs, rhs)

    def test_theta_pushforward_rejected(self):
        PS = V.tropicalize_matroid(F.hahn_plucker(), "sval")
        with pytest.raises(SchemaError):
            M.pushforward(PS, T.THETA)


class TestFundamentalCocircuits:
    def test_uniform(self):
        P = M.plucker(T.KRASNER, 3, 2, {B: 1 for B in M.subsets(3, 2)})
        assert M.fundamental_cocircuit(P, (0, 1), 0).coords == (1, None, 1)

    def test_hahn_row(self):
        D = M.fundamental_cocircuit(F.hahn_plucker(), (0, 1), 0)
        assert [None if c is None else c for c in D.coords] == [
            ONE, None, HahnSeries.const(-2), HahnSeries.const(2)]
        for C in M.circuits(F.hahn_plucker()):
            assert M.is_orthogonal(D, C)

    def test_bad_pivot(self):
        with pytest.raises(SchemaError):
            M.fundamental_cocircuit(F.hahn_plucker(), (0, 1), 3)


class TestSpan:
    def test_single_generator(self):
        P = V.tropicalize_matroid(F.hahn_plucker(), "val")
        D = M.fundamental_cocircuit(P, (0, 1), 0)
        dom = [T.TractElement.zero(P.tract), T.TractElement.one(P.tract)]
        assert M.span_contains([D], D, dom)

    def test_krasner_plane(self):
        e1 = M.vector(T.KRASNER, [1, None])
        e2 = M.vector(T.KRASNER, [None, 1])
        dom = [T.TractElement.zero(T.KRASNER), T.TractElement.one(T.KRASNER)]
        assert M.span_contains([e1, e2], M.vector(T.KRASNER, [1, 1]), dom)

    def test_domain_needs_zero(self):
        e1 = M.vector(T.KRASNER, [1, None])
        with pytest.raises(SchemaError):
            M.span_contains([e1], e1, [T.TractElement.one(T.KRASNER)])


class TestGuards:
    def test_ground_set_cap(self):
        with pytest.raises(SchemaError):
            M.plucker(T.KRASNER, 17, 1, {(0,): 1})

    def test_zero_function_rejected(self):
        with pytest.raises(SchemaError):
            M.plucker(T.KRASNER, 3, 2, {})
