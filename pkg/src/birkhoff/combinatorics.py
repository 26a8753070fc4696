"""Permutations, arborescences of the complete digraph, and cycle matrices.

Vertices, edges and matrix positions are 1-based in the public API, as in
the usual [n] = {1, ..., n} notation.  Matrices are tuples of row tuples and
are therefore indexed 0-based in Python: ``W[i - 1][j - 1]`` is entry (i, j).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterator, Sequence

from .errors import InvalidInput

Matrix = tuple[tuple[int, ...], ...]
Edge = tuple[int, int]


@dataclass(frozen=True)
class Arborescence:
    """Spanning tree of [n] with every edge directed away from ``root``.

    ``parent[v - 1]`` is the parent of v, and ``None`` for the root.
    """

    root: int
    parent: tuple[int | None, ...]

    @property
    def n(self) -> int:
        return len(self.parent)

    @property
    def edges(self) -> frozenset[Edge]:
        return frozenset(
            (p, v) for v, p in enumerate(self.parent, start=1) if p is not None
        )

    def path_from_root(self, v: int) -> list[Edge]:
        """Edges (parent, child) on the root -> v path, root end first."""
        path = []
        while v != self.root:
            p = self.parent[v - 1]
            path.append((p, v))
            v = p
        path.reverse()
        return path

    def off_tree_edges(self) -> list[Edge]:
        """All directed edges (s, t), s != t, not in the tree, lexicographic."""
        n, edges = self.n, self.edges
        return [
            (s, t)
            for s in range(1, n + 1)
            for t in range(1, n + 1)
            if s != t and (s, t) not in edges
        ]


def _reaches_root(parent: list, v: int, root: int) -> bool | None:
    """True if v reaches the root, False on a cycle, None if undecided yet."""
    seen = set()
    while v != root:
        if v in seen:
            return False
        seen.add(v)
        p = parent[v - 1]
        if p is None:
            return None
        v = p
    return True


def enumerate_arborescences(n: int, root: int) -> Iterator[Arborescence]:
    """Yield every ``root``-arborescence on [n] exactly once.

    Parents are assigned vertex by vertex in increasing order, trying
    candidate parents in increasing order and pruning as soon as a cycle
    closes, so the output order is lexicographic in the parent tuple.
    There are n**(n - 2) of them.
    """
    if n < 2:
        raise InvalidInput(f"n must be >= 2, got {n}")
    if not 1 <= root <= n:
        raise InvalidInput(f"root {root} outside [1, {n}]")
    others = [v for v in range(1, n + 1) if v != root]
    parent: list[int | None] = [None] * n

    def grow(idx: int) -> Iterator[Arborescence]:
        if idx == len(others):
            yield Arborescence(root, tuple(parent))
            return
        v = others[idx]
        for p in range(1, n + 1):
            if p == v:
                continue
            parent[v - 1] = p
            if _reaches_root(parent, v, root) is not False:
                yield from grow(idx + 1)
        parent[v - 1] = None

    yield from grow(0)


def _edge_weight(n: int, e: Edge, into: list[list[int]], sign: int) -> None:
    s, t = e
    into[s - 1][t - 1] += sign
    into[t - 1][t - 1] -= sign


def ray_matrix(tree: Arborescence, e: Edge) -> Matrix:
    """The cycle matrix W^{T,e} of the off-tree edge e = (s, t).

    Computed as w(path to s) - w(path to t) + w(e), where w((u, v)) has
    +1 at (u, v) and -1 at (v, v).  The shared part of the two root paths
    cancels, leaving exactly the signed cycle of T + e.
    """
    n = tree.n
    s, t = e
    if s == t or not (1 <= s <= n and 1 <= t <= n):
        raise InvalidInput(f"bad edge {e} for n={n}")
    if e in tree.edges:
        raise InvalidInput(f"edge {e} is already in the arborescence")
    W = [[0] * n for _ in range(n)]
    for f in tree.path_from_root(s):
        _edge_weight(n, f, W, +1)
    for f in tree.path_from_root(t):
        _edge_weight(n, f, W, -1)
    _edge_weight(n, e, W, +1)
    return tuple(tuple(row) for row in W)


def dual_rays(n: int) -> dict[Edge, Matrix]:
    """The (n-1)x(n-1) matrices M_ij for every ordered pair i != j."""
    if n < 2:
        raise InvalidInput(f"n must be >= 2, got {n}")
    m = n - 1
    rays = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            M = [[0] * m for _ in range(m)]
            if j == n:
                M[i - 1] = [-1] * m
            elif i == n:
                for r in range(m):
                    M[r][j - 1] = -1
            else:
                M[i - 1][j - 1] = 1
            rays[(i, j)] = tuple(tuple(row) for row in M)
    return rays


def permutation_matrix(sigma: Sequence[int]) -> Matrix:
    n = len(sigma)
    return tuple(
        tuple(1 if sigma[i] == j + 1 else 0 for j in range(n)) for i in range(n)
    )


def check_permutation(sigma: Sequence[int]) -> tuple[int, ...]:
    sigma = tuple(int(x) for x in sigma)
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise InvalidInput(f"not a permutation of [n]: {sigma}")
    return sigma


def all_permutations(n: int) -> Iterator[tuple[int, ...]]:
    """S_n as image tuples, in lexicographic order."""
    return permutations(range(1, n + 1))


def permute_columns(W: Matrix, sigma: Sequence[int]) -> Matrix:
    """Matrix product W * sigma: column j of W moves to column sigma(j)."""
    n = len(W)
    if len(sigma) != n:
        raise InvalidInput("dimension mismatch between matrix and permutation")
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        row = W[i]
        for j in range(n):
            out[i][sigma[j] - 1] = row[j]
    return tuple(tuple(r) for r in out)


def truncate(W: Matrix) -> Matrix:
    """Drop the last row and column."""
    return tuple(row[:-1] for row in W[:-1])


def inner(A: Sequence[Sequence], B: Sequence[Sequence]):
    return sum(a * b for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def determinant(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    M = [list(r) for r in rows]
    n = len(M)
    if any(len(r) != n for r in M):
        raise InvalidInput("matrix is not square")
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if M[r][k] != 0), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1] if n else 1


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals."""
    M = [[Fraction(x) for x in r] for r in rows]
    rk, cols = 0, len(M[0]) if M else 0
    for c in range(cols):
        piv = next((r for r in range(rk, len(M)) if M[r][c] != 0), None)
        if piv is None:
            continue
        M[rk], M[piv] = M[piv], M[rk]
        for r in range(len(M)):
            if r != rk and M[r][c] != 0:
                f = M[r][c] / M[rk][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[rk])]
        rk += 1
    return rk
