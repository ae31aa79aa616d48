from fractions import Fraction as Q

import pytest

from tracta import fixtures as F
from tracta import gamma as G
from tracta import linspace as L
from tracta import matroids as M
from tracta import tracts as T
from tracta import valuation as V
from tracta.errors import GuardExceeded, SchemaError

INF = G.INF
GAMMAS = [Q(-1), Q(0), Q(1), INF]


def sval_pn():
    return V.tropicalize_matroid(F.hahn_plucker(), "sval")


def val_pn():
    return V.tropicalize_matroid(F.hahn_plucker(), "val")


def sv(*coords):
    return M.TractVector(F.SR, tuple(
        None if c is None else (c[0], Q(c[1])) for c in coords))


class TestCharB:
    def test_ray1_member(self):
        assert L.member_charB(sval_pn(), sv((1, 1), (1, 0), (-1, 0), (1, 0)))

    def test_all_plus_origin_not_member(self):
        assert not L.member_charB(sval_pn(), sv((1, 0), (1, 0), (1, 0), (1, 0)))

    def test_all_infinite_member(self):
        assert L.member_charB(sval_pn(), sv(None, None, None, None))


class TestCharA:
    def test_contraction_path(self):
        X = sv(None, (1, 0), (-1, 0), (1, 0))
        assert L.member_charA(sval_pn(), X)
        assert L.member_charB(sval_pn(), X)

    def test_toric_reduces_to_charB(self):
        X = sv((1, 1), (1, 0), (-1, 0), (1, 0))
        assert L.member_charA(sval_pn(), X) == L.member_charB(sval_pn(), X)

    def test_all_zero_set(self):
        assert L.member_charA(sval_pn(), sv(None, None, None, None))


class TestSpecialisations:
    def test_loopless_matches_charC_on_grid(self):
        P = val_pn()
        grid = L.make_grid(P.tract, 4, GAMMAS)
        for X in grid.points():
            assert L.member_charC(P, X) == L.member_loopless_K(P, X)

    def test_conformality_matches_charC_on_sample(self):
        P = sval_pn()
        pts = [sv((1, 0), (1, 0), (-1, 0), (1, 0)),
               sv((1, 0), (-1, 0), (1, 0), (-1, 0)),
               sv((1, 1), (1, 0), (1, 0), (1, 0)),
               sv(None, (1, 0), (-1, 0), (1, 0))]
        for X in pts:
            assert L.member_charC(P, X) == L.member_nonconformal_S(P, X)


class TestOneCircuitFixture:
    def test_grid_matches_region_analysis(self):
        P = F.one_circuit_signed()
        grid = L.make_grid(P.tract, 3, GAMMAS)
        count = 0
        for X in grid.points():
            member = L.member_charB(P, X)
            assert member == F.one_circuit_regions(X)
            count += member
        assert count > 0

    def test_free_matroid_everything_member(self):
        KZ = T.extension(T.KRASNER, G.RATIONAL)
        P = M.plucker(KZ, 2, 2, {(0, 1): (1, Q(0))})
        grid = L.make_grid(P.tract, 2, GAMMAS)
        assert all(L.member_charB(P, X) for X in grid.points())


class TestCharD:
    def test_agrees_with_charB_on_val_grid(self):
        P = val_pn()
        grid = L.make_grid(P.tract, 4, GAMMAS)
        dom = L.default_scalar_domain(P, GAMMAS)
        for X in grid.points():
            assert L.member_charD(P, X, dom) == L.member_charB(P, X)

    def test_scaled_cocircuit_inside(self):
        P = val_pn()
        dom = L.default_scalar_domain(P, GAMMAS)
        B = M.underlying_bases(P)[0]
        D = M.fundamental_cocircuit(P, B, B[0])
        assert L.member_charD(P, D, dom)

    def test_infinite_base_not_evaluated(self):
        Pf = V.tropicalize_matroid(F.hahn_plucker(), "fval")
        assert L.default_scalar_domain(Pf, GAMMAS) is None


class TestTspan:
    def test_cocircuit_is_member(self):
        P = val_pn()
        coc = M.cocircuits(P)
        assert L.tspan_member_K(coc, coc.vectors[0])

    def test_grid_agreement(self):
        P = val_pn()
        coc = M.cocircuits(P)
        grid = L.make_grid(P.tract, 4, GAMMAS)
        for X in grid.points():
            assert L.tspan_member_K(coc, X) == L.member_charB(P, X)

    def test_non_krasner_rejected(self):
        P = sval_pn()
        with pytest.raises(SchemaError):
            L.tspan_member_K(M.cocircuits(P), sv(None, None, None, None))


class TestEnumeration:
    def test_records_partition_and_agree(self):
        P = sval_pn()
        grid = L.make_grid(P.tract, 4, [Q(0), Q(1), INF])
        dom = L.default_scalar_domain(P, [Q(0), Q(1)])
        records = L.enumerate_linear_space(P, grid, scalar_domain=dom)
        assert records and all(r.agree for r in records)
        assert any(r.toric for r in records) and any(not r.toric for r in records)

    def test_guard(self):
        P = sval_pn()
        grid = L.make_grid(P.tract, 4, [Q(i) for i in range(-40, 40)])
        import tracta.errors
        old = tracta.errors.DEFAULT_GUARD
        tracta.errors.DEFAULT_GUARD = 10_000
        try:
            with pytest.raises(GuardExceeded):
                list(grid.points())
        finally:
            tracta.errors.DEFAULT_GUARD = old


def test_duality_of_spaces():
    # every grid member of L_M is orthogonal to every grid member of L_{M*}
    P = val_pn()
    Pd = M.dual(P)
    grid = L.make_grid(P.tract, 4, [Q(0), Q(1), INF])
    members = L.enumerate_members(P, grid)
    dual_members = L.enumerate_members(Pd, grid)
    assert members and dual_members
    for X in members:
        for Y in dual_members:
            assert M.is_orthogonal(X, Y)
