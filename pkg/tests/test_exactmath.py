from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from birkhoff.errors import InvalidInput
from birkhoff.exactmath import (
    Polynomial,
    TruncatedSeries,
    format_rational,
    poly_interpolate,
    series_mul,
    to_rational,
)

big = st.integers(min_value=-(10**40), max_value=10**40)
nonzero = big.filter(bool)
rationals = st.builds(Fraction, big, nonzero)


def series(order):
    return st.lists(rationals, min_size=order + 1, max_size=order + 1).map(
        lambda cs: TruncatedSeries(order, cs)
    )


def test_format_and_parse():
    assert format_rational(Fraction(11, 6)) == "11/6"
    assert format_rational(Fraction(1)) == "1"
    assert format_rational(Fraction(-1, 30)) == "-1/30"
    assert to_rational("-1/30") == Fraction(-1, 30)
    assert to_rational("4/2") == 2


@pytest.mark.parametrize("bad", [0.5, "0.5", "1e3", "x", "1/0"])
def test_parse_rejects_inexact(bad):
    with pytest.raises(InvalidInput):
        to_rational(bad)


@given(big, nonzero, big, nonzero)
def test_rational_addition_exact(a, b, c, d):
    lhs = (Fraction(a, b) + Fraction(c, d)) * d * b
    assert lhs == a * d + c * b


def test_polynomial_trailing_zeros_trimmed():
    assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert Polynomial([0, 0]).degree == -1


def test_interpolate_line():
    assert poly_interpolate([(0, 1), (1, 2)]) == Polynomial([1, 1])


def test_interpolate_constant():
    assert poly_interpolate([(0, 5)]) == Polynomial([5])


def test_interpolate_b3_counts():
    # counts of 3x3 semi-magic squares for t = 0..4 (DP oracle); t = 5 gives 231
    p = poly_interpolate([(0, 1), (1, 6), (2, 21), (3, 55), (4, 120)])
    assert p.degree == 4
    assert p(5) == 231


def test_interpolate_duplicate_arguments():
    with pytest.raises(InvalidInput):
        poly_interpolate([(1, 1), (1, 2)])
    with pytest.raises(InvalidInput):
        poly_interpolate([])


@given(st.lists(st.tuples(st.integers(-50, 50), rationals), min_size=1, max_size=7,
                unique_by=lambda p: p[0]))
def test_interpolate_reproduces_points(points):
    p = poly_interpolate(points)
    assert p.degree < len(points)
    for x, y in points:
        assert p(x) == y


def test_series_examples():
    a = TruncatedSeries(2, [1, 1])
    b = TruncatedSeries(2, [1, -1])
    assert series_mul(a, b).coeffs == (1, 0, -1)
    h = TruncatedSeries(1, [1, Fraction(1, 2)])
    assert (h * h).coeffs == (1, 1)
    g = TruncatedSeries(2, [1, Fraction(1, 2), Fraction(1, 12)])
    assert (g * g).coeffs == (1, 1, Fraction(5, 12))


def test_series_order_mismatch():
    with pytest.raises(InvalidInput):
        series_mul(TruncatedSeries(1, [1]), TruncatedSeries(2, [1]))


@given(series(4), series(4), series(4))
def test_series_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
