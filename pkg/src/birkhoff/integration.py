"""Exact integrals of powers of linear forms over B_n and its faces.

    integral_P <y, x>**p dx
        = (-1)**d * p! / (p + d)! * sum_i sign_i * <y, a_i>**(p+d) / prod_j <y, b_ij>

in the lattice-relative measure on the affine span of P.  We report the
integral against the *normalized* measure (d! times that), in which the
integral of 1 is the normalized volume returned by ``ehrhart.volume``.

When some <y, b> vanishes the form is replaced by y + eps*c with c the
generic vector; every term becomes a Laurent series in eps, the negative
powers cancel in the sum, and the eps**0 coefficient is the answer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .combinatorics import Matrix
from .ehrhart import GenericVector, generic_vector
from .errors import InternalInconsistency, InvalidInput
from .exactmath import RationalLike, TruncatedSeries, to_rational
from .mgf import ConeTerm


@dataclass(frozen=True)
class LinearForm:
    y: tuple[tuple[Fraction, ...], ...]

    def __init__(self, y: Sequence[Sequence[RationalLike]]):
        rows = tuple(tuple(to_rational(v) for v in row) for row in y)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise InvalidInput("linear form must be a square matrix")
        if all(v == 0 for r in rows for v in r):
            raise InvalidInput("linear form is identically zero")
        object.__setattr__(self, "y", rows)

    @property
    def n(self) -> int:
        return len(self.y)

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> LinearForm:
        """The coordinate function x_ij (1-based)."""
        return cls([[1 if (r, s) == (i - 1, j - 1) else 0 for s in range(n)] for r in range(n)])

    @classmethod
    def from_json(cls, text: str) -> LinearForm:
        obj = json.loads(text)
        form = cls(obj["y"])
        if "n" in obj and int(obj["n"]) != form.n:
            raise InvalidInput("'n' does not match the size of 'y'")
        return form

    def dot(self, M: Matrix) -> Fraction:
        return sum(
            (a * b for ra, rb in zip(self.y, M) for a, b in zip(ra, rb) if b),
            Fraction(0),
        )

    def at_vertex(self, sigma: Sequence[int]) -> Fraction:
        return sum((self.y[i][s - 1] for i, s in enumerate(sigma)), Fraction(0))


def _prefactor(d: int, p: int) -> Fraction:
    # normalized measure: d! * (-1)**d * p! / (p+d)!
    return Fraction((-1) ** d * factorial(d) * factorial(p), factorial(p + d))


def _perturbed_term(
    y: LinearForm, c: GenericVector, term: ConeTerm, power: int
) -> tuple[int, TruncatedSeries]:
    """(pole order m, series s) with term(y + eps*c) = eps**-m * s(eps)."""
    a0 = y.at_vertex(term.vertex)
    a1 = sum(c.c[i][s - 1] for i, s in enumerate(term.vertex))
    betas = [(y.dot(b), c.dot(b)) for b in term.rays]
    m = sum(1 for beta, _ in betas if beta == 0)
    order = m
    # (a0 + eps*a1)**power, truncated
    numer = TruncatedSeries.one(order)
    base = TruncatedSeries(order, [a0, a1])
    for _ in range(power):
        numer = numer * base
    scale = Fraction(1)
    for beta, gamma in betas:
        if beta == 0:
            scale /= gamma
        else:
            # 1 / (beta + eps*gamma) = (1/beta) * sum (-gamma/beta)**k eps**k
            r = Fraction(-gamma) / beta
            inv = TruncatedSeries(order, (r**k / beta for k in range(order + 1)))
            numer = numer * inv
    return m, numer.scale(term.sign * scale)


def integrate_power(
    terms: Iterable[ConeTerm],
    dimension: int,
    y: LinearForm,
    p: int,
    force_perturbation: bool = False,
) -> Fraction:
    """Integral of <y, x>**p over the polytope, normalized measure."""
    if p < 0:
        raise InvalidInput("power must be nonnegative")
    terms = list(terms)
    if not terms:
        raise InvalidInput("empty term stream")
    if any(len(t.rays) != dimension for t in terms):
        raise InvalidInput("every term must have exactly `dimension` rays")
    n = len(terms[0].vertex)
    if y.n != n:
        raise InvalidInput("linear form has the wrong size")
    power = p + dimension
    degenerate = force_perturbation or any(
        y.dot(b) == 0 for t in terms for b in t.rays
    )
    if not degenerate:
        total = Fraction(0)
        for t in terms:
            denom = Fraction(1)
            for b in t.rays:
                denom *= y.dot(b)
            total += t.sign * y.at_vertex(t.vertex) ** power / denom
        return _prefactor(dimension, p) * total

    c = generic_vector(n)
    laurent: dict[int, Fraction] = {}
    for t in terms:
        m, s = _perturbed_term(y, c, t, power)
        for k, coef in enumerate(s.coeffs):
            if coef:
                laurent[k - m] = laurent.get(k - m, Fraction(0)) + coef
    leftover = {k: v for k, v in laurent.items() if k < 0 and v != 0}
    if leftover:
        raise InternalInconsistency(f"poles did not cancel: {leftover}")
    return _prefactor(dimension, p) * laurent.get(0, Fraction(0))
