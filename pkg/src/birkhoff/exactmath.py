"""Exact rationals, dense univariate polynomials and truncated power series.

``Rational`` is :class:`fractions.Fraction`: always in lowest terms with a
positive denominator, immutable and hashable.  Nothing in the package uses
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import InvalidInput

Rational = Fraction
RationalLike = Union[int, str, Fraction]

__all__ = [
    "Rational",
    "Polynomial",
    "TruncatedSeries",
    "to_rational",
    "format_rational",
    "poly_interpolate",
    "series_mul",
]


def to_rational(value: RationalLike) -> Fraction:
    """Parse ``"p/q"``, an int, or a Fraction.  Floats are rejected."""
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidInput(f"refusing inexact value {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise InvalidInput(f"not an exact rational: {value!r}")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInput(f"not a rational: {value!r}") from exc
    # gmpy2.mpq and friends
    try:
        return Fraction(int(value.numerator), int(value.denominator))
    except AttributeError:
        raise InvalidInput(f"not a rational: {value!r}") from None


def format_rational(value: Fraction) -> str:
    """Serialize as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial in t; ``coeffs[k]`` is the coefficient of t**k."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[RationalLike]):
        cs = [to_rational(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [Fraction(0)]
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        if self.is_zero():
            return -1
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    def __call__(self, t: RationalLike) -> Fraction:
        t = to_rational(t)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __add__(self, other: Polynomial) -> Polynomial:
        m = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (m - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (m - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    def __mul__(self, other: Polynomial) -> Polynomial:
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    def to_strings(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0 and not self.is_zero():
                continue
            coef = format_rational(c)
            if k == 0:
                parts.append(coef)
            else:
                mono = "t" if k == 1 else f"t^{k}"
                parts.append(mono if c == 1 else f"{coef}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_interpolate(points: Sequence[tuple[int, RationalLike]]) -> Polynomial:
    """Unique polynomial of degree < len(points) through ``points``.

    Newton divided differences, exact.
    """
    if not points:
        raise InvalidInput("need at least one point")
    xs = [int(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise InvalidInput("interpolation arguments must be distinct")
    table = [to_rational(y) for _, y in points]
    m = len(xs)
    newton = [table[0]]
    for level in range(1, m):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(m - level)
        ]
        newton.append(table[0])
    # expand sum newton[k] * prod_{i<k} (t - xs[i]) by Horner from the top
    result = Polynomial([newton[-1]])
    for k in range(m - 2, -1, -1):
        result = result * Polynomial([-xs[k], 1]) + Polynomial([newton[k]])
    return result


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series in tau, exact modulo tau**(order + 1)."""

    order: int
    coeffs: tuple[Fraction, ...]

    def __init__(self, order: int, coeffs: Iterable[RationalLike] = ()):
        if order < 0:
            raise InvalidInput("order must be nonnegative")
        cs = [to_rational(c) for c in coeffs][: order + 1]
        cs += [Fraction(0)] * (order + 1 - len(cs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls(order, [1])

    def _check(self, other: TruncatedSeries) -> None:
        if self.order != other.order:
            raise InvalidInput(
                f"series orders differ: {self.order} != {other.order}"
            )

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries(
            self.order, (a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        return series_mul(self, other)

    def scale(self, factor: RationalLike) -> TruncatedSeries:
        f = to_rational(factor)
        return TruncatedSeries(self.order, (f * c for c in self.coeffs))

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    a._check(b)
    order = a.order
    out = [Fraction(0)] * (order + 1)
    for i, x in enumerate(a.coeffs):
        if not x:
            continue
        for j in range(order + 1 - i):
            y = b.coeffs[j]
            if y:
                out[i + j] += x * y
    return TruncatedSeries(order, out)
