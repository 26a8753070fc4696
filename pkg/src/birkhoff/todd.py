"""Todd polynomial values at explicit rational arguments.

td_j(xi_1, ..., xi_d) is the tau**j coefficient of
prod_i tau*xi_i / (1 - exp(-tau*xi_i)).  Two routes are provided:
``todd_values`` multiplies the per-argument series directly (O(d * order**2)),
``todd_values_fast`` goes through power sums and exp/log (O(d * order +
order**2)) and is the one used in the hot loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Sequence

from .errors import InvalidInput
from .exactmath import RationalLike, TruncatedSeries, to_rational

_bernoulli: list[Fraction] = [Fraction(1)]


def bernoulli(k: int) -> Fraction:
    """B_k with the B_1 = +1/2 convention, cached."""
    if k < 0:
        raise InvalidInput("Bernoulli index must be >= 0")
    while len(_bernoulli) <= k:
        m = len(_bernoulli)
        # sum_{r<=m} C(m+1, r) B_r^- = 0 gives B_m^-; only B_1 differs in sign
        s = sum(
            comb(m + 1, r) * (Fraction(-1, 2) if r == 1 else _bernoulli[r])
            for r in range(m)
        )
        b = -s / (m + 1)
        _bernoulli.append(-b if m == 1 else b)
    return _bernoulli[k]


def warm_cache(max_index: int) -> None:
    """Fill the Bernoulli/log caches before worker processes fork."""
    bernoulli(max_index)
    _log_coefficients(max_index)


def g_series(xi: RationalLike, order: int) -> TruncatedSeries:
    """Expansion of tau*xi / (1 - exp(-tau*xi)) through tau**order."""
    if order < 0:
        raise InvalidInput("order must be >= 0")
    xi = to_rational(xi)
    return TruncatedSeries(
        order, (bernoulli(k) * xi**k / factorial(k) for k in range(order + 1))
    )


@dataclass(frozen=True)
class ToddValues:
    values: tuple[Fraction, ...]

    def __getitem__(self, j: int) -> Fraction:
        # td with a negative index is zero by convention
        if j < 0:
            return Fraction(0)
        return self.values[j]

    def __len__(self) -> int:
        return len(self.values)


def todd_values(xis: Sequence[RationalLike], order: int) -> ToddValues:
    """td_0 .. td_order of ``xis`` by multiplying the g-series together."""
    acc = TruncatedSeries.one(order)
    for xi in xis:
        acc = acc * g_series(xi, order)
    return ToddValues(acc.coeffs)


@lru_cache(maxsize=None)
def _log_coefficients(order: int) -> tuple[Fraction, ...]:
    """Coefficients of log(x / (1 - exp(-x))) through x**order.

    x/2 at degree 1, then -B_m / (m * m!) for m >= 2 (zero for odd m).
    """
    out = [Fraction(0)] * (order + 1)
    if order >= 1:
        out[1] = Fraction(1, 2)
    for m in range(2, order + 1):
        out[m] = -bernoulli(m) / (m * factorial(m))
    return tuple(out)


def series_exp(f: Sequence, order: int, one=Fraction(1)) -> list:
    """exp of a series with zero constant term: e_m = (1/m) sum k f_k e_{m-k}."""
    e = [one]
    for m in range(1, order + 1):
        acc = 0
        for k in range(1, m + 1):
            if f[k]:
                acc += k * f[k] * e[m - k]
        e.append(acc / m)
    return e


def todd_values_fast(xis: Sequence[RationalLike], order: int) -> ToddValues:
    """Same values as :func:`todd_values`, via power sums.

    log prod g(tau*xi_i) = sum_m logcoef_m * p_m * tau**m with p_m the m-th
    power sum of the arguments.
    """
    if order < 0:
        raise InvalidInput("order must be >= 0")
    xs = [to_rational(x) for x in xis]
    logc = _log_coefficients(order)
    f = [Fraction(0)] * (order + 1)
    powers = [Fraction(1)] * len(xs)
    for m in range(1, order + 1):
        powers = [p * x for p, x in zip(powers, xs)]
        if logc[m]:
            f[m] = logc[m] * sum(powers)
    return ToddValues(tuple(series_exp(f, order)))
