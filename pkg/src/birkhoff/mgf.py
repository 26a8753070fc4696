"""The lattice-point generating function of t*B_n as a stream of cone terms.

f(tB_n, z) = sum over vertices sigma and root-arborescences T of
    z^(t*sigma) * prod_{e not in T} 1 / (1 - z^(W^{T,e} sigma)).

Faces are handled by substituting z_ij = s**lambda_ij on the zero pattern
and letting s -> 0, which drops or shortens individual terms.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Mapping, Sequence

from .combinatorics import (
    Arborescence,
    Matrix,
    all_permutations,
    enumerate_arborescences,
    permute_columns,
    ray_matrix,
)
from .errors import EmptyFace, InvalidInput, PoleEncountered
from .exactmath import RationalLike, to_rational

Position = tuple[int, int]
# a ray in sparse form: ((row, col, value), ...), 0-based
SparseRay = tuple[tuple[int, int, int], ...]


@dataclass(frozen=True)
class ConeTerm:
    """sign * z^(t*vertex) * prod_b 1/(1 - z^b) for a unimodular cone."""

    sign: int
    vertex: tuple[int, ...]
    rays: tuple[Matrix, ...]

    def vertex_matrix(self) -> Matrix:
        n = len(self.vertex)
        return tuple(
            tuple(1 if self.vertex[i] == j + 1 else 0 for j in range(n))
            for i in range(n)
        )

    def to_json(self) -> dict:
        return {
            "sign": self.sign,
            "vertex": list(self.vertex),
            "rays": [[x for row in b for x in row] for b in self.rays],
        }


@dataclass(frozen=True)
class ZeroPattern:
    """Entries (row, col), 1-based, forced to zero; selects a face of B_n."""

    n: int
    zeros: frozenset[Position]

    def __init__(self, n: int, zeros: Iterable[Sequence[int]] = ()):
        if n < 2:
            raise InvalidInput(f"n must be >= 2, got {n}")
        zs = []
        for pos in zeros:
            i, j = (int(x) for x in pos)
            if not (1 <= i <= n and 1 <= j <= n):
                raise InvalidInput(f"zero position {(i, j)} outside {n}x{n}")
            zs.append((i, j))
        if len(set(zs)) != len(zs):
            raise InvalidInput("repeated zero position")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "zeros", frozenset(zs))

    @classmethod
    def cry(cls, n: int) -> ZeroPattern:
        """Chan-Robbins-Yuen face: zeros wherever row - col >= 2."""
        return cls(
            n,
            [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i - j >= 2],
        )

    def sorted(self) -> list[Position]:
        return sorted(self.zeros)

    def allows(self, sigma: Sequence[int]) -> bool:
        return all((i, s) not in self.zeros for i, s in enumerate(sigma, start=1))

    def is_empty_face(self) -> bool:
        return not any(self.allows(s) for s in all_permutations(self.n))

    def __len__(self) -> int:
        return len(self.zeros)

    def __str__(self) -> str:
        return ";".join(f"{i},{j}" for i, j in self.sorted())


def default_weights(pattern: ZeroPattern) -> dict[Position, int]:
    """lambda = 2**k at the k-th zero in row-major order.

    A {-1,0,1} combination of distinct powers of two vanishes only when
    every coefficient does, so mu(b) == 0 exactly when b is zero on Z.
    """
    return {pos: 2**k for k, pos in enumerate(pattern.sorted())}


def _check_weights(pattern: ZeroPattern, weights: Mapping[Position, int]) -> None:
    if set(weights) != set(pattern.zeros):
        raise InvalidInput("face weights must cover exactly the zero positions")
    if any(int(w) <= 0 for w in weights.values()):
        raise InvalidInput("face weights must be positive")


def _check_root(n: int, root: int) -> None:
    if not 1 <= root <= n:
        raise InvalidInput(f"root {root} outside [1, {n}]")


@lru_cache(maxsize=16)
def tree_table(n: int, root: int) -> tuple[tuple[Arborescence, tuple[Matrix, ...]], ...]:
    """Every root-arborescence with its cycle matrices, in enumeration order."""
    return tuple(
        (T, tuple(ray_matrix(T, e) for e in T.off_tree_edges()))
        for T in enumerate_arborescences(n, root)
    )


@lru_cache(maxsize=16)
def sparse_tree_table(n: int, root: int) -> tuple[tuple[SparseRay, ...], ...]:
    """Same as :func:`tree_table` but each ray as its nonzero entries."""
    return tuple(
        tuple(
            tuple(
                (i, j, W[i][j]) for i in range(n) for j in range(n) if W[i][j]
            )
            for W in rays
        )
        for _, rays in tree_table(n, root)
    )


def term_count(n: int) -> int:
    return factorial(n) * n ** (n - 2)


def birkhoff_terms(n: int, root: int = 1) -> Iterator[ConeTerm]:
    """All n! * n**(n-2) terms: sigma lexicographic outside, trees inside."""
    _check_root(n, root)
    table = tree_table(n, root)
    for sigma in all_permutations(n):
        for _, rays in table:
            yield ConeTerm(1, sigma, tuple(permute_columns(W, sigma) for W in rays))


def _mu(b: Matrix, weights: Mapping[Position, int]) -> int:
    return sum(w * b[i - 1][j - 1] for (i, j), w in weights.items())


def face_terms(
    n: int,
    root: int,
    pattern: ZeroPattern,
    weights: Mapping[Position, int] | None = None,
) -> Iterator[ConeTerm]:
    """The s -> 0 limit of the term stream under z_ij = s**lambda_ij on Z.

    Vertices meeting Z vanish; a term with any ray of negative weight
    vanishes; rays of positive weight become the factor 1 and are dropped.
    """
    _check_root(n, root)
    if pattern.n != n:
        raise InvalidInput("zero pattern size does not match n")
    if weights is None:
        weights = default_weights(pattern)
    _check_weights(pattern, weights)
    if pattern.is_empty_face():
        raise EmptyFace(f"zero pattern {pattern} leaves no permutation")
    if not pattern.zeros:
        yield from birkhoff_terms(n, root)
        return
    table = tree_table(n, root)
    for sigma in all_permutations(n):
        if not pattern.allows(sigma):
            continue
        for _, rays in table:
            kept = []
            for W in rays:
                b = permute_columns(W, sigma)
                mu = _mu(b, weights)
                if mu < 0:
                    break
                if mu == 0:
                    kept.append(b)
            else:
                yield ConeTerm(1, sigma, tuple(kept))


def sparse_face_terms(
    n: int,
    root: int,
    pattern: ZeroPattern | None = None,
    weights: Mapping[Position, int] | None = None,
    vertices: Sequence[tuple[int, ...]] | None = None,
) -> Iterator[tuple[tuple[int, ...], list[SparseRay]]]:
    """Fast variant of :func:`face_terms` yielding (sigma, sparse rays).

    Rays are already column-permuted.  ``vertices`` restricts the stream to
    a slice of S_n so workers can split the work.
    """
    _check_root(n, root)
    if pattern is None:
        pattern = ZeroPattern(n)
    if weights is None:
        weights = default_weights(pattern)
    _check_weights(pattern, weights)
    lam = [[0] * n for _ in range(n)]
    for (i, j), w in weights.items():
        lam[i - 1][j - 1] = int(w)
    table = sparse_tree_table(n, root)
    if vertices is None:
        vertices = list(all_permutations(n))
    face = bool(pattern.zeros)
    for sigma in vertices:
        if face and not pattern.allows(sigma):
            continue
        col = [s - 1 for s in sigma]
        for rays in table:
            kept = []
            for ray in rays:
                b = tuple((i, col[j], v) for i, j, v in ray)
                if face:
                    mu = sum(v * lam[i][j] for i, j, v in b)
                    if mu < 0:
                        break
                    if mu > 0:
                        continue
                kept.append(b)
            else:
                yield sigma, kept


def _monomial(z: Sequence[Sequence[Fraction]], M: Matrix) -> Fraction:
    val = Fraction(1)
    for zrow, mrow in zip(z, M):
        for zij, m in zip(zrow, mrow):
            if m:
                if zij == 0 and m < 0:
                    raise PoleEncountered("zero coordinate with negative exponent")
                val *= zij**m
    return val


def evaluate_mgf(
    terms: Iterable[ConeTerm], t: int, z: Sequence[Sequence[RationalLike]]
) -> Fraction:
    """Sum of the rational-function terms at the point z.

    Raises PoleEncountered when some 1 - z^b vanishes; retry with another z.
    """
    if t < 0:
        raise InvalidInput("t must be nonnegative")
    zq = [[to_rational(x) for x in row] for row in z]
    total = Fraction(0)
    for term in terms:
        if len(zq) != len(term.vertex):
            raise InvalidInput("evaluation point has the wrong size")
        value = Fraction(term.sign)
        for i, s in enumerate(term.vertex):
            value *= zq[i][s - 1] ** t
        for b in term.rays:
            denom = 1 - _monomial(zq, b)
            if denom == 0:
                raise PoleEncountered(f"1 - z^b vanishes for ray {b}")
            value /= denom
        total += value
    return total


def terms_to_json(terms: Iterable[ConeTerm]) -> str:
    return json.dumps([t.to_json() for t in terms])


def terms_from_json(text: str) -> list[ConeTerm]:
    out = []
    for obj in json.loads(text):
        n = len(obj["vertex"])
        rays = tuple(
            tuple(tuple(flat[r * n : (r + 1) * n]) for r in range(n))
            for flat in obj["rays"]
        )
        out.append(ConeTerm(int(obj["sign"]), tuple(obj["vertex"]), rays))
    return out
