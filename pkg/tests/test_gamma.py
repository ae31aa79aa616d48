from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from tracta import gamma as G
from tracta.errors import SchemaError


def test_lex_order():
    a, b, c = (Q(1), Q(0)), (Q(1), Q(5)), (Q(2), Q(-9))
    assert G.g_lt(a, b) and G.g_lt(b, c)


def test_min_with_infinity():
    assert G.g_min([3, G.INF]) == 3
    assert G.g_min([G.INF, G.INF]) is G.INF


def test_rational_add():
    assert G.g_add(Q(1, 2), Q(1, 3)) == Q(5, 6)


def test_neg_infinity_rejected():
    with pytest.raises(SchemaError):
        G.g_neg(G.INF)


def test_argmin_basic():
    assert G.argmin_set([0, 1, 0, G.INF]) == [0, 2]


def test_argmin_all_infinite_is_empty():
    assert G.argmin_set([G.INF, G.INF]) == []


def test_argmin_lex():
    vals = [(Q(1), Q(0)), (Q(1), Q(0)), (Q(2), Q(0))]
    assert G.argmin_set(vals) == [0, 1]


def test_gamma_kind_validation():
    G.INT.validate(3)
    with pytest.raises(SchemaError):
        G.INT.validate(Q(1, 2))
    G.RATIONAL.validate(Q(1, 2))
    G.lex(2).validate((Q(1), Q(2)))
    with pytest.raises(SchemaError):
        G.lex(2).validate((Q(1),))


rats = st.fractions(min_value=-10, max_value=10, max_denominator=12)


@given(rats, rats, rats)
def test_order_translation_invariant(a, b, c):
    if a < b:
        assert G.g_lt(G.g_add(a, c), G.g_add(b, c))


@given(st.lists(st.one_of(rats, st.just(G.INF)), min_size=1, max_size=6), rats)
def test_argmin_shift_invariant(values, c):
    shifted = [G.g_add(v, c) for v in values]
    assert G.argmin_set(values) == G.argmin_set(shifted)
