"""Lattice-point counts, Ehrhart polynomials and volumes from cone terms.

For a unimodular cone term z^a / prod_j (1 - z^{b_j}) with K rays, put
z = exp(-tau * c).  With alpha = <c, a> and xi_j = <c, b_j> the tau**0
coefficient is

    sum_k (-alpha)**k / k! * td_{K-k}(xi) / prod_j xi_j ,

which follows from 1/(1 - e^x) = -(1/x) * g(-x), g(x) = x / (1 - e^-x).
Substituting exp(+tau * c) instead would flip the sign of every odd-degree
Ehrhart coefficient; count(B_3, 1) == 6 and e(0) == 1 pin the choice and
are asserted at runtime.  Replacing alpha by t*alpha gives the dilation,
hence the t**k coefficient is (-alpha)**k / k! * td_{K-k}(xi) / prod xi.

The hot loop runs on gmpy2 rationals; public results are Fractions.
"""

from __future__ import annotations

import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Mapping, Sequence

import gmpy2
from gmpy2 import mpq

from .combinatorics import Matrix, all_permutations
from .errors import EmptyFace, InternalInconsistency, InvalidInput
from .exactmath import Polynomial
from .mgf import ConeTerm, Position, ZeroPattern, default_weights, sparse_face_terms
from .todd import _log_coefficients, warm_cache

log = logging.getLogger(__name__)

PROGRESS_EVERY = 10_000


@dataclass(frozen=True)
class GenericVector:
    """c(i, j) = 2**((i-1)*n + (j-1)); <c, b> != 0 for every nonzero {-1,0,1} b."""

    c: Matrix

    @property
    def n(self) -> int:
        return len(self.c)

    def dot(self, M: Sequence[Sequence[int]]) -> int:
        return sum(a * b for ra, rb in zip(self.c, M) for a, b in zip(ra, rb) if b)


def generic_vector(n: int) -> GenericVector:
    if n < 2:
        raise InvalidInput(f"n must be >= 2, got {n}")
    return GenericVector(
        tuple(tuple(2 ** (i * n + j) for j in range(n)) for i in range(n))
    )


@dataclass(frozen=True)
class EhrhartResult:
    polynomial: Polynomial
    dimension: int
    term_count: int

    @property
    def lead_coefficient(self) -> Fraction:
        return self.polynomial.coeffs[self.dimension]

    @property
    def normalized_volume(self) -> Fraction:
        return factorial(self.dimension) * self.lead_coefficient


class _Kernel:
    """Per-term Todd expansion with cached inverse factorials."""

    def __init__(self, max_order: int):
        warm_cache(max_order)
        self.logc = [mpq(x.numerator, x.denominator) for x in _log_coefficients(max_order)]
        self.inv_fact = [mpq(1, factorial(k)) for k in range(max_order + 1)]

    def todd(self, xis: Sequence[int]) -> list:
        K = len(xis)
        logc = self.logc
        f = [0] * (K + 1)
        powers = list(xis)
        for m in range(1, K + 1):
            if m > 1:
                powers = [p * x for p, x in zip(powers, xis)]
            if logc[m]:
                f[m] = logc[m] * sum(powers)
        e = [mpq(1)]
        for m in range(1, K + 1):
            acc = mpq(0)
            for k in range(1, m + 1):
                if f[k]:
                    acc += k * f[k] * e[m - k]
            e.append(acc / m)
        return e

    def coefficients(self, alpha: int, xis: Sequence[int]) -> list:
        """t**k contributions, k = 0..K, of one term."""
        K = len(xis)
        td = self.todd(xis)
        prod = 1
        for x in xis:
            prod *= x
        out = []
        a_pow = 1
        for k in range(K + 1):
            out.append(a_pow * self.inv_fact[k] * td[K - k] / prod)
            a_pow *= -alpha
        return out


def _inner(c: Matrix, M: Matrix) -> int:
    return sum(a * b for ra, rb in zip(c, M) for a, b in zip(ra, rb) if b)


def _vertex_weight(c: Matrix, vertex: Sequence[int]) -> int:
    return sum(c[i][s - 1] for i, s in enumerate(vertex))


def _term_data(term: ConeTerm, c: GenericVector) -> tuple[int, list[int]]:
    xis = [_inner(c.c, b) for b in term.rays]
    if any(x == 0 for x in xis):
        raise InvalidInput("generic vector is orthogonal to a ray")
    return _vertex_weight(c.c, term.vertex), xis


def _accumulate(
    data: Iterable[tuple[int, Sequence[int]]],
    kernel_order: int,
    progress: Callable[[int], None] | None = None,
) -> tuple[list, int]:
    kernel = _Kernel(kernel_order)
    acc: list = []
    count = 0
    for alpha, xis in data:
        contrib = kernel.coefficients(alpha, xis)
        if len(contrib) > len(acc):
            acc.extend(mpq(0) for _ in range(len(contrib) - len(acc)))
        for k, v in enumerate(contrib):
            acc[k] += v
        count += 1
        if progress is not None and count % PROGRESS_EVERY == 0:
            progress(count)
    return acc, count


def _to_fraction(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def _finish(acc: list, count: int, dimension: int | None) -> EhrhartResult:
    if not count:
        raise EmptyFace("term stream is empty")
    max_k = len(acc) - 1
    if dimension is None:
        dimension = max_k
    elif max_k > dimension:
        raise InvalidInput(f"a term has {max_k} rays but dimension is {dimension}")
    coeffs = [_to_fraction(x) for x in acc]
    coeffs += [Fraction(0)] * (dimension + 1 - len(coeffs))
    if coeffs[0] != 1:
        raise InternalInconsistency(f"e(0) = {coeffs[0]}, expected 1")
    poly = Polynomial(coeffs)
    if poly.degree != dimension or poly.leading_coefficient <= 0:
        raise InternalInconsistency(
            f"degree {poly.degree} / leading {poly.leading_coefficient} "
            f"inconsistent with dimension {dimension}"
        )
    return EhrhartResult(poly, dimension, count)


def ehrhart_polynomial(
    terms: Iterable[ConeTerm], dimension: int | None, c: GenericVector
) -> EhrhartResult:
    """Ehrhart polynomial of the polytope (or face) whose terms are given.

    ``dimension`` may be None, in which case the largest ray count is used.
    """
    data = (_term_data(term, c) for term in terms)
    order = dimension if dimension is not None else (c.n - 1) ** 2
    acc, count = _accumulate(data, order)
    return _finish(acc, count, dimension)


def count_lattice_points(terms: Iterable[ConeTerm], t: int, c: GenericVector) -> int:
    """|tP cap Z^N| from the term stream, checked to be a nonnegative integer."""
    if t < 0:
        raise InvalidInput("t must be nonnegative")
    kernel = _Kernel((c.n - 1) ** 2)
    total = mpq(0)
    for term in terms:
        alpha, xis = _term_data(term, c)
        for v in kernel.coefficients(t * alpha, xis):
            total += v
    if total.denominator != 1 or total < 0:
        raise InternalInconsistency(f"lattice-point count came out as {total}")
    return int(total)


def volume(terms: Iterable[ConeTerm], dimension: int, c: GenericVector) -> Fraction:
    """Normalized volume dimension! * (leading Ehrhart coefficient).

    Only terms with the full ray count contribute, and td_0 = 1, so no
    Todd expansion is needed.
    """
    total = mpq(0)
    for term in terms:
        if len(term.rays) != dimension:
            continue
        alpha, xis = _term_data(term, c)
        prod = 1
        for x in xis:
            prod *= x
        total += mpq((-alpha) ** dimension, prod)
    if total <= 0:
        raise InternalInconsistency(f"volume came out as {total}")
    return _to_fraction(total)


# --- parallel face computations -----------------------------------------


def _sparse_data(n, root, pattern, weights, vertices, c):
    for sigma, rays in sparse_face_terms(n, root, pattern, weights, vertices):
        alpha = sum(c[i][s - 1] for i, s in enumerate(sigma))
        xis = [sum(v * c[i][j] for i, j, v in b) for b in rays]
        yield alpha, xis


def _chunk_job(args):
    n, root, zeros, weights, vertices, mode = args
    pattern = ZeroPattern(n, zeros)
    c = generic_vector(n).c
    data = _sparse_data(n, root, pattern, weights, vertices, c)
    if mode == "volume":
        return _volume_chunk(data, (n - 1) ** 2)
    acc, count = _accumulate(data, (n - 1) ** 2)
    return [(int(x.numerator), int(x.denominator)) for x in acc], count


def _volume_chunk(data, full_dim):
    sums: dict[int, mpq] = {}
    count = 0
    for alpha, xis in data:
        K = len(xis)
        prod = 1
        for x in xis:
            prod *= x
        sums[K] = sums.get(K, mpq(0)) + mpq((-alpha) ** K, prod)
        count += 1
    return {K: (int(v.numerator), int(v.denominator)) for K, v in sums.items()}, count


def _chunks(vertices: list, pieces: int) -> list[list]:
    size = max(1, -(-len(vertices) // pieces))
    return [vertices[i : i + size] for i in range(0, len(vertices), size)]


def expected_dimension(pattern: ZeroPattern) -> int:
    return (pattern.n - 1) ** 2 - len(pattern)


def _progress_printer(label: str, total_vertices: int):
    start = time.monotonic()

    def report(done_terms: int, done_vertices: int | None = None) -> None:
        rate = done_terms / max(time.monotonic() - start, 1e-9)
        extra = f", {done_vertices}/{total_vertices} vertices" if done_vertices else ""
        print(f"[{label}] {done_terms} terms, {rate:.0f} terms/s{extra}", file=sys.stderr)

    return report


def face_ehrhart(
    n: int,
    pattern: ZeroPattern | None = None,
    root: int = 1,
    threads: int = 1,
    weights: Mapping[Position, int] | None = None,
    progress: bool = False,
) -> EhrhartResult:
    """Ehrhart polynomial of B_n or of the face cut out by ``pattern``.

    Work is split by vertex into deterministic chunks; chunk results are
    added in chunk order, so the output does not depend on ``threads``.
    """
    return _run_face(n, pattern, root, threads, weights, progress, "ehrhart")


def face_volume(
    n: int,
    pattern: ZeroPattern | None = None,
    root: int = 1,
    threads: int = 1,
    weights: Mapping[Position, int] | None = None,
    progress: bool = False,
) -> tuple[Fraction, int, int]:
    """(normalized volume, dimension, term count) without Todd expansion."""
    return _run_face(n, pattern, root, threads, weights, progress, "volume")


def _run_face(n, pattern, root, threads, weights, progress, mode):
    if n < 2:
        raise InvalidInput(f"n must be >= 2, got {n}")
    if not 1 <= root <= n:
        raise InvalidInput(f"root {root} outside [1, {n}]")
    if threads < 1:
        raise InvalidInput("threads must be >= 1")
    if pattern is None:
        pattern = ZeroPattern(n)
    if pattern.n != n:
        raise InvalidInput("zero pattern size does not match n")
    if weights is None:
        weights = default_weights(pattern)
    vertices = [s for s in all_permutations(n) if pattern.allows(s)]
    if not vertices:
        raise EmptyFace(f"zero pattern {pattern} leaves no permutation")
    warm_cache((n - 1) ** 2)
    zeros = tuple(pattern.sorted())
    weights = dict(weights)
    # a fixed number of chunks keeps the reduction order independent of threads
    chunks = _chunks(vertices, min(len(vertices), 64))
    jobs = [(n, root, zeros, weights, ch, mode) for ch in chunks]
    report = _progress_printer(f"{mode} n={n}", len(vertices)) if progress else None

    results = []
    done_terms = done_vertices = 0
    if threads == 1:
        mapped = map(_chunk_job, jobs)
    else:
        pool = ProcessPoolExecutor(max_workers=threads)
        mapped = pool.map(_chunk_job, jobs)
    try:
        for ch, res in zip(chunks, mapped):
            results.append(res)
            done_terms += res[1]
            done_vertices += len(ch)
            if report and (done_terms // PROGRESS_EVERY) > (
                (done_terms - res[1]) // PROGRESS_EVERY
            ):
                report(done_terms, done_vertices)
    finally:
        if threads != 1:
            pool.shutdown()

    count = sum(r[1] for r in results)
    if mode == "volume":
        sums: dict[int, mpq] = {}
        for part, _ in results:
            for K, (p, q) in part.items():
                sums[K] = sums.get(K, mpq(0)) + mpq(p, q)
        dim = max(sums)
        _check_dimension(pattern, dim)
        vol = sums[dim]
        if vol <= 0:
            raise InternalInconsistency(f"volume came out as {vol}")
        return _to_fraction(vol), dim, count

    acc: list = []
    for part, _ in results:
        if len(part) > len(acc):
            acc.extend(mpq(0) for _ in range(len(part) - len(acc)))
        for k, (p, q) in enumerate(part):
            acc[k] += mpq(p, q)
    _check_dimension(pattern, len(acc) - 1)
    return _finish(acc, count, None)


def _check_dimension(pattern: ZeroPattern, dim: int) -> None:
    expected = expected_dimension(pattern)
    if dim != expected:
        log.warning(
            "face dimension %d differs from (n-1)^2 - |Z| = %d; using %d",
            dim, expected, dim,
        )
