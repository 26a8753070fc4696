"""Brute-force ground truth for semi-magic squares with forbidden entries.

Deliberately independent of the generating-function code: it only shares
the exact polynomial interpolation from ``exactmath``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import BudgetExceeded, InvalidInput
from .exactmath import Polynomial, poly_interpolate

MAX_N = 5
MAX_T = 12
MAX_POINTS = 10**5

Position = tuple[int, int]


def _check(n: int, t: int, zeros: Iterable[Sequence[int]]) -> frozenset[Position]:
    if n < 1:
        raise InvalidInput("n must be >= 1")
    if t < 0:
        raise InvalidInput("t must be nonnegative")
    if n > MAX_N or t > MAX_T:
        raise BudgetExceeded(f"oracle limited to n <= {MAX_N}, t <= {MAX_T}")
    zs = frozenset((int(i), int(j)) for i, j in zeros)
    if any(not (1 <= i <= n and 1 <= j <= n) for i, j in zs):
        raise InvalidInput("zero position outside the matrix")
    return zs


def _column_fillings(residual: tuple[int, ...], t: int, allowed: Sequence[bool]):
    """Vectors v with sum t, v_i <= residual_i, v_i = 0 where not allowed."""
    n = len(residual)
    out = [0] * n

    def rec(i: int, left: int):
        if i == n:
            if left == 0:
                yield tuple(out)
            return
        top = min(left, residual[i]) if allowed[i] else 0
        for v in range(top + 1):
            out[i] = v
            yield from rec(i + 1, left - v)
        out[i] = 0

    return rec(0, t)


def count_semimagic(n: int, t: int, zeros: Iterable[Sequence[int]] = ()) -> int:
    """Number of n x n nonnegative integer matrices with line sums t.

    Column-by-column DP over the vector of remaining row sums.
    """
    zs = _check(n, t, zeros)
    states = {tuple([t] * n): 1}
    for j in range(1, n + 1):
        allowed = [(i, j) not in zs for i in range(1, n + 1)]
        nxt: dict[tuple[int, ...], int] = {}
        for residual, ways in states.items():
            for col in _column_fillings(residual, t, allowed):
                key = tuple(r - v for r, v in zip(residual, col))
                nxt[key] = nxt.get(key, 0) + ways
        states = nxt
    return states.get(tuple([0] * n), 0)


def enumerate_points(
    n: int, t: int, zeros: Iterable[Sequence[int]] = ()
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Each lattice point of the dilated face, as a tuple of rows."""
    zs = _check(n, t, zeros)
    if count_semimagic(n, t, zs) > MAX_POINTS:
        raise BudgetExceeded(f"more than {MAX_POINTS} lattice points")
    rows: list[tuple[int, ...]] = []

    def rec(i: int, colres: tuple[int, ...]):
        if i == n:
            if not any(colres):
                yield tuple(rows)
            return
        allowed = [(i + 1, j) not in zs for j in range(1, n + 1)]
        for row in _column_fillings(colres, t, allowed):
            rows.append(row)
            yield from rec(i + 1, tuple(r - v for r, v in zip(colres, row)))
            rows.pop()

    yield from rec(0, tuple([t] * n))


@dataclass
class CountTable:
    n: int
    zeros: frozenset[Position]
    counts: dict[int, int] = field(default_factory=dict)

    def fill(self, ts: Iterable[int]) -> CountTable:
        for t in ts:
            if t not in self.counts:
                self.counts[t] = count_semimagic(self.n, t, self.zeros)
        return self


def oracle_ehrhart(
    n: int, zeros: Iterable[Sequence[int]] = (), dimension: int | None = None
) -> Polynomial:
    """Interpolate DP counts at t = 0..dimension."""
    if dimension is None:
        dimension = (n - 1) ** 2 - len(frozenset(map(tuple, zeros)))
    if dimension + 1 > MAX_T + 1:
        raise BudgetExceeded(f"dimension {dimension} needs t up to {dimension}")
    table = CountTable(n, frozenset(tuple(z) for z in zeros)).fill(range(dimension + 1))
    return poly_interpolate([(t, Fraction(v)) for t, v in sorted(table.counts.items())])
