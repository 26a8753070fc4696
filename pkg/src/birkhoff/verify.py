"""Self-checks run by ``birkhoff verify``: structural and numerical invariants."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Callable, Iterator

from .combinatorics import (
    determinant,
    dual_rays,
    enumerate_arborescences,
    inner,
    ray_matrix,
    truncate,
)
from .ehrhart import face_ehrhart
from .mgf import ZeroPattern, birkhoff_terms, evaluate_mgf
from .oracle import count_semimagic, enumerate_points

Check = tuple[str, bool, str]


def check_arborescence_count(n: int) -> Check:
    counts = {root: sum(1 for _ in enumerate_arborescences(n, root)) for root in range(1, n + 1)}
    ok = all(c == n ** (n - 2) for c in counts.values())
    return "arborescence count n^(n-2)", ok, f"{counts[1]} per root"


def check_ray_matrices(n: int) -> Check:
    bad = 0
    total = 0
    for root in range(1, n + 1):
        for T in enumerate_arborescences(n, root):
            for e in T.off_tree_edges():
                W = ray_matrix(T, e)
                total += 1
                entries_ok = all(x in (-1, 0, 1) for row in W for x in row)
                sums_ok = all(sum(row) == 0 for row in W) and all(
                    sum(W[i][j] for i in range(n)) == 0 for j in range(n)
                )
                if not (entries_ok and sums_ok and any(any(r) for r in W)):
                    bad += 1
    return "cycle matrices lie in V_n", bad == 0, f"{total} matrices, {bad} bad"


def check_duality(n: int) -> Check:
    M = dual_rays(n)
    bad = 0
    for root in range(1, n + 1):
        for T in enumerate_arborescences(n, root):
            off = T.off_tree_edges()
            for e in off:
                Wbar = truncate(ray_matrix(T, e))
                for ij in off:
                    if inner(Wbar, M[ij]) != (1 if ij == e else 0):
                        bad += 1
    return "duality <phi(W), M> = delta", bad == 0, f"{bad} violations"


def check_unimodularity(n: int) -> Check:
    M = dual_rays(n)
    dets = set()
    for T in enumerate_arborescences(n, n):
        rows = [[x for r in M[ij] for x in r] for ij in T.off_tree_edges()]
        dets.add(abs(determinant(rows)))
    return "dual cones unimodular", dets == {1}, f"|det| values {sorted(dets)}"


def check_root_independence(n: int) -> Check:
    a = face_ehrhart(n, root=1).polynomial
    b = face_ehrhart(n, root=n).polynomial
    return "root independence", a == b, f"roots 1 and {n}"


def _random_point(rng: random.Random, n: int) -> list[list[Fraction]]:
    return [[Fraction(rng.randint(2, 40), rng.randint(1, 9)) for _ in range(n)] for _ in range(n)]


def check_brion(n: int, samples: int = 5, seed: int = 0) -> Check:
    rng = random.Random(seed)
    terms = list(birkhoff_terms(n, 1))
    bad = 0
    for t in (1, 2):
        points = list(enumerate_points(n, t))
        for _ in range(samples):
            z = _random_point(rng, n)
            direct = Fraction(0)
            for P in points:
                v = Fraction(1)
                for zr, pr in zip(z, P):
                    for zij, m in zip(zr, pr):
                        v *= zij**m
                direct += v
            if evaluate_mgf(terms, t, z) != direct:
                bad += 1
    return "Brion identity", bad == 0, f"{2 * samples} points, {bad} mismatches"


def check_oracle(n: int) -> Check:
    poly = face_ehrhart(n).polynomial
    top = {2: 3, 3: 6, 4: 9, 5: 2}.get(n, 1)
    bad = [t for t in range(top + 1) if poly(t) != count_semimagic(n, t)]
    return "formula vs DP oracle", not bad, f"t = 0..{top}, mismatches at {bad}"


def check_face_oracle(n: int) -> Check:
    pattern = ZeroPattern(n, [(1, 1)])
    poly = face_ehrhart(n, pattern).polynomial
    top = min(poly.degree + 1, 6)
    bad = [t for t in range(top + 1) if poly(t) != count_semimagic(n, t, pattern.zeros)]
    return "facet vs DP oracle", not bad, f"t = 0..{top}, mismatches at {bad}"


def run_checks(n: int) -> Iterator[Check]:
    checks: list[Callable[[int], Check]] = [
        check_arborescence_count,
        check_ray_matrices,
        check_duality,
    ]
    if n <= 4:
        checks.append(check_unimodularity)
    if n <= 4:
        checks.append(check_root_independence)
    if n <= 3:
        checks.append(check_brion)
    if n <= 5:
        checks.append(check_oracle)
    if 3 <= n <= 4:
        checks.append(check_face_oracle)
    for check in checks:
        yield check(n)
