from fractions import Fraction as Q

import pytest

from tracta import fixtures as F
from tracta import gamma as G
from tracta import jsonio as J
from tracta import matroids as M
from tracta import tracts as T
from tracta import valuation as V
from tracta.errors import SchemaError
from tracta.series import HahnSeries

SZ = T.extension(T.SIGN, G.INT)


class TestRoundTrips:
    @pytest.mark.parametrize("d,p", [
        (T.KRASNER, 1), (T.KRASNER, None),
        (T.SIGN, -1), (T.SIGN, None),
        (T.TRIANGLE, Q(3, 2)),
        (T.DYADIC, (-1, 3)), (T.DYADIC, None),
        (T.HAHN, HahnSeries.from_pairs([(Q(1, 2), 2), (1, -1)])),
        (T.HAHN, None),
        (SZ, (-1, 4)), (SZ, None),
    ])
    def test_element(self, d, p):
        assert J.decode_element(d, J.encode_element(d, p)) == p

    @pytest.mark.parametrize("gk,v", [
        (G.INT, 3), (G.INT, G.INF),
        (G.RATIONAL, Q(-5, 7)),
        (G.lex(2), (Q(1), Q(-2, 3))),
    ])
    def test_gamma(self, gk, v):
        out = J.decode_gamma(gk, J.encode_gamma(v))
        assert (out is G.INF) if v is G.INF else out == v

    @pytest.mark.parametrize("d", [
        T.KRASNER, T.SIGN, T.HAHN, SZ,
        T.extension(T.TRIANGLE, G.lex(2)),
    ])
    def test_tract(self, d):
        assert J.decode_tract(J.encode_tract(d)) == d

    def test_plucker(self):
        for P in (F.hahn_plucker(), F.triangle_plucker(),
                  V.tropicalize_matroid(F.hahn_plucker(), "sval")):
            assert J.decode_plucker(J.encode_plucker(P)) == P

    def test_circuits(self):
        C = M.circuits(V.tropicalize_matroid(F.hahn_plucker(), "sval"))
        out = J.decode_circuits(J.encode_circuits(C))
        assert M.circuit_sets_equal(out, C)

    def test_flag(self):
        from tracta import flags as FL

        Fs = FL.FlagSequence((F.rank1_plucker(), F.hahn_plucker()))
        assert J.decode_flag(J.encode_flag(Fs)).parts == Fs.parts

    def test_direction(self):
        u = (Q(1), G.INF, Q(-2))
        out = J.decode_direction(G.RATIONAL, J.encode_direction(G.RATIONAL, u))
        assert out[0] == u[0] and out[1] is G.INF and out[2] == u[2]


class TestMinusVariants:
    def test_unicode_minus_accepted(self):
        assert J.decode_element(T.SIGN, "−") == -1
        assert J.decode_element(T.SIGN, "-") == -1


class TestSchemaErrors:
    def test_bad_sign(self):
        with pytest.raises(SchemaError):
            J.decode_element(T.SIGN, "2")

    def test_bad_tract(self):
        with pytest.raises(SchemaError):
            J.decode_tract({"kind": "phase"})

    def test_bad_rational(self):
        with pytest.raises(SchemaError):
            J.decode_gamma(G.RATIONAL, "1.5x")

    def test_zero_base_in_extension(self):
        with pytest.raises(SchemaError):
            J.decode_element(SZ, {"base": "0", "gamma": 1})

    def test_int_gamma_rejects_fraction(self):
        with pytest.raises(SchemaError):
            J.decode_gamma(G.INT, "1/2")

    def test_zero_plucker_function(self):
        obj = {"tract": {"kind": "krasner"}, "n": 3, "r": 2, "entries": []}
        with pytest.raises(SchemaError):
            J.decode_plucker(obj)
