from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from birkhoff.todd import bernoulli, g_series, todd_values, todd_values_fast

small = st.builds(Fraction, st.integers(-30, 30), st.integers(1, 12))
nonzero_small = small.filter(bool)


def td2_printed(x1, x2, x3):
    return (Fraction(1, 12) * (x1**2 + x2**2 + x3**2)
            + Fraction(1, 4) * (x1 * x2 + x2 * x3 + x3 * x1))


def td3_printed(x1, x2, x3):
    return Fraction(1, 24) * (x1 + x2 + x3) * (x1 * x2 + x2 * x3 + x3 * x1)


def test_bernoulli_plus_convention():
    assert [bernoulli(k) for k in range(7)] == [
        1, Fraction(1, 2), Fraction(1, 6), 0, Fraction(-1, 30), 0, Fraction(1, 42)
    ]


def test_g_series_examples():
    assert g_series(1, 2).coeffs == (1, Fraction(1, 2), Fraction(1, 12))
    assert g_series(0, 5).coeffs == (1, 0, 0, 0, 0, 0)
    assert g_series(2, 1).coeffs == (1, 1)


def test_todd_examples():
    assert todd_values([1, 2, 3], 1)[1] == 3
    assert todd_values([1, 1, 1], 2)[2] == 1
    assert todd_values([1, 1, 1], 3)[3] == Fraction(3, 8)
    assert todd_values([5, -7], 0).values == (1,)
    assert todd_values([1, 2], 2)[-1] == 0


@given(small, small, small)
def test_matches_printed_formulas(x1, x2, x3):
    td = todd_values([x1, x2, x3], 3)
    assert td[0] == 1
    assert td[1] == (x1 + x2 + x3) / 2
    assert td[2] == td2_printed(x1, x2, x3)
    assert td[3] == td3_printed(x1, x2, x3)


@given(st.lists(small, min_size=1, max_size=5), st.permutations(range(5)))
def test_symmetric(xs, perm):
    perm = [p for p in perm if p < len(xs)]
    assert todd_values(xs, 5) == todd_values([xs[p] for p in perm], 5)


@given(st.lists(small, min_size=1, max_size=4), nonzero_small)
def test_homogeneous(xs, lam):
    base = todd_values(xs, 6)
    scaled = todd_values([lam * x for x in xs], 6)
    for j in range(7):
        assert scaled[j] == lam**j * base[j]


@given(st.lists(small, min_size=0, max_size=9), st.integers(0, 10))
def test_fast_route_agrees(xs, order):
    assert todd_values_fast(xs, order) == todd_values(xs, order)


def test_fast_route_large_integer_arguments():
    xs = [2**k - 3**k for k in range(1, 17)]
    assert todd_values_fast(xs, 16) == todd_values(xs, 16)
