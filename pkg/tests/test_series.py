from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stpoly.series import (
    DEFAULT_ORDER,
    SeriesError,
    TruncatedSeries,
    compose_series,
    default_order,
    format_series,
    invert_in_Y,
    parse_series,
)

K = 5
coef = st.fractions(min_value=-3, max_value=3, max_denominator=4)


def series(zero_const=False, positive_y=False):
    keys = [(i, j) for i in range(K + 1) for j in range(K + 1 - i)]
    return st.dictionaries(st.sampled_from(keys), coef, max_size=6).map(
        lambda d: _fix(d, zero_const, positive_y))


def _fix(d, zero_const, positive_y):
    d = dict(d)
    if zero_const:
        d.pop((0, 0), None)
    if positive_y:
        d[(0, 1)] = abs(d.get((0, 1), 0)) + 1
    return TruncatedSeries(K, d)


def test_truncation_and_zero_dropping():
    s = TruncatedSeries(2, {(0, 0): 0, (1, 1): 3, (2, 1): 5})
    assert s.coeffs == {(1, 1): F(3)}


def test_parse_and_format():
    s = parse_series("1/3*X + Y - 2*X^2*Y", 4)
    assert s.coeffs == {(1, 0): F(1, 3), (0, 1): F(1), (2, 1): F(-2)}
    assert format_series(s) == "1/3*X + Y - 2*X^2*Y"
    assert format_series(TruncatedSeries.zero(3)) == "0"
    assert parse_series("-X*Y + 1/2", 3).coeffs == {(1, 1): F(-1), (0, 0): F(1, 2)}
    assert parse_series("X*X", 3).coeffs == {(2, 0): F(1)}


@pytest.mark.parametrize("text,msg", [
    ("0.5*X", "floating point forbidden"),
    ("1e3*Y", "floating point forbidden"),
    ("2X", "missing"),
    ("", "empty"),
    ("1/0*X", "zero denominator"),
    ("X^7", "exceeds"),
    ("X +* Y", "malformed"),
])
def test_parse_errors(text, msg):
    with pytest.raises(SeriesError, match=msg):
        parse_series(text, 6)


def test_order_env(monkeypatch):
    assert default_order() == DEFAULT_ORDER == 6
    monkeypatch.setenv("STPOLY_TRUNCATION_ORDER", "3")
    assert default_order() == 3
    assert parse_series("Y").order == 3
    monkeypatch.setenv("STPOLY_TRUNCATION_ORDER", "zero")
    with pytest.raises(SeriesError):
        default_order()


def test_order_mismatch():
    with pytest.raises(SeriesError, match="order mismatch"):
        TruncatedSeries.X(2) + TruncatedSeries.X(3)


def test_compose_known():
    Y, X = TruncatedSeries.Y(4), TruncatedSeries.X(4)
    f = (Y + X) * (Y + X)
    g = Y + X * X
    assert compose_series(f, g) == (g + X) * (g + X)
    with pytest.raises(SeriesError):
        compose_series(f, g + 1)


def test_invert_known():
    Y, X = TruncatedSeries.Y(6), TruncatedSeries.X(6)
    assert invert_in_Y(Y + X * X) == Y - X * X
    assert invert_in_Y(Y.scale(2)) == Y.scale(F(1, 2))
    with pytest.raises(SeriesError):
        invert_in_Y(X)


@given(series(), series(), series())
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == TruncatedSeries.zero(K)


@given(series(), series(zero_const=True), series(zero_const=True))
def test_composition_is_associative(f, g, h):
    assert compose_series(compose_series(f, g), h) == compose_series(f, compose_series(g, h))


@given(series(zero_const=True, positive_y=True))
def test_inverse_both_sides(g):
    h = invert_in_Y(g)
    Y = TruncatedSeries.Y(K)
    assert compose_series(g, h) == Y
    assert compose_series(h, g) == Y


@given(series())
def test_format_parse_roundtrip(s):
    assert parse_series(format_series(s), K) == s
