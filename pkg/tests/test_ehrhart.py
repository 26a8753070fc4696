from fractions import Fraction
from math import factorial

import pytest

from birkhoff.ehrhart import (
    count_lattice_points,
    ehrhart_polynomial,
    face_ehrhart,
    face_volume,
    generic_vector,
    volume,
)
from birkhoff.errors import EmptyFace
from birkhoff.exactmath import poly_interpolate
from birkhoff.mgf import ZeroPattern, birkhoff_terms, face_terms
from birkhoff.oracle import count_semimagic

from paper_values import CRY, FACET


def strings(poly):
    return poly.to_strings()


def test_generic_vector():
    assert generic_vector(2).c == ((1, 2), (4, 8))
    assert generic_vector(3).c[1][2] == 32


def test_generic_vector_nonvanishing_n3():
    c = generic_vector(3)
    values = [c.dot(b) for t in birkhoff_terms(3, 1) for b in t.rays]
    assert len(values) == 72
    assert all(values)


def test_counts_b3():
    terms = list(birkhoff_terms(3, 3))
    c = generic_vector(3)
    assert count_lattice_points(terms, 1, c) == 6
    assert count_lattice_points(terms, 2, c) == 21
    assert count_lattice_points(terms, 0, c) == 1


def test_count_facet():
    terms = list(face_terms(3, 1, ZeroPattern(3, [(1, 1)])))
    assert count_lattice_points(terms, 1, generic_vector(3)) == 4


def test_facet_b3_from_terms():
    terms = face_terms(3, 1, ZeroPattern(3, [(1, 1)]))
    res = ehrhart_polynomial(terms, 3, generic_vector(3))
    assert strings(res.polynomial) == FACET[3] == ["1", "11/6", "1", "1/6"]


def test_cry4_from_terms():
    terms = face_terms(4, 1, ZeroPattern.cry(4))
    res = ehrhart_polynomial(terms, 6, generic_vector(4))
    assert strings(res.polynomial) == CRY[4]


def test_b3_against_oracle():
    oracle = poly_interpolate([(t, count_semimagic(3, t)) for t in range(5)])
    res = ehrhart_polynomial(birkhoff_terms(3, 1), 4, generic_vector(3))
    assert res.polynomial == oracle
    assert res.dimension == 4
    assert res.normalized_volume == factorial(4) * oracle.leading_coefficient == 3


@pytest.mark.parametrize("n", [3, 4])
def test_count_matches_polynomial(n):
    terms = list(birkhoff_terms(n, 1))
    c = generic_vector(n)
    poly = ehrhart_polynomial(terms, (n - 1) ** 2, c).polynomial
    for t in range(6):
        assert count_lattice_points(terms, t, c) == poly(t)


@pytest.mark.parametrize("n", [3, 4])
def test_root_independence(n):
    a = ehrhart_polynomial(birkhoff_terms(n, 1), None, generic_vector(n))
    b = ehrhart_polynomial(birkhoff_terms(n, n), None, generic_vector(n))
    assert a.polynomial.coeffs == b.polynomial.coeffs


@pytest.mark.parametrize("n", [3, 4])
def test_reciprocity_zeros(n):
    poly = face_ehrhart(n).polynomial
    oracle = poly_interpolate([(t, count_semimagic(n, t)) for t in range((n - 1) ** 2 + 1)])
    for t in range(1, n):
        assert poly(-t) == 0
        assert oracle(-t) == 0


def test_volumes():
    assert volume(birkhoff_terms(2, 1), 1, generic_vector(2)) == 1
    assert volume(birkhoff_terms(3, 1), 4, generic_vector(3)) == 3
    assert volume(face_terms(5, 1, ZeroPattern.cry(5)), 10, generic_vector(5)) == 10
    assert factorial(10) * Fraction(1, 362880) == 10


def test_fast_path_matches_term_path():
    Z = ZeroPattern(4, [(1, 2), (3, 3)])
    slow = ehrhart_polynomial(face_terms(4, 2, Z), None, generic_vector(4))
    fast = face_ehrhart(4, Z, root=2)
    assert slow.polynomial == fast.polynomial
    assert slow.term_count == fast.term_count
    vol, dim, _ = face_volume(4, Z, root=2)
    assert dim == fast.dimension and vol == fast.normalized_volume


@pytest.mark.parametrize(
    "zeros",
    [[(1, 1)], [(1, 1), (2, 2)], [(1, 2), (2, 1)], [(3, 1), (4, 1), (4, 2)], [(1, 1), (1, 2)]],
)
def test_faces_against_oracle(zeros):
    Z = ZeroPattern(4, zeros)
    res = face_ehrhart(4, Z)
    assert res.polynomial(0) == 1
    for t in range(res.dimension + 2):
        assert res.polynomial(t) == count_semimagic(4, t, Z.zeros)


def test_dependent_zero_pattern_dimension():
    # zeros (1,1),(1,2) force x13 = t: the face is B_2-like in the other rows
    Z = ZeroPattern(3, [(1, 1), (1, 2)])
    res = face_ehrhart(3, Z)
    assert res.dimension == 1
    assert [res.polynomial(t) for t in range(4)] == [count_semimagic(3, t, Z.zeros) for t in range(4)]


def test_empty_face_rejected():
    with pytest.raises(EmptyFace):
        face_ehrhart(3, ZeroPattern(3, [(2, 1), (2, 2), (2, 3)]))


@pytest.mark.parametrize("threads", [2, 3])
def test_thread_count_does_not_change_result(threads):
    assert face_ehrhart(4, threads=threads).polynomial == face_ehrhart(4).polynomial


@pytest.mark.parametrize("n", [3, 4, 5])
def test_facet_table(n):
    assert strings(face_ehrhart(n, ZeroPattern(n, [(1, 1)])).polynomial) == FACET[n]


@pytest.mark.parametrize("pos", [(2, 3), (4, 4), (3, 1)])
def test_every_facet_is_alike(pos):
    assert strings(face_ehrhart(4, ZeroPattern(4, [pos])).polynomial) == FACET[4]


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_cry_table(n):
    res = face_ehrhart(n, ZeroPattern.cry(n))
    assert strings(res.polynomial) == CRY[n]
    assert res.dimension == (n - 1) ** 2 - (n - 1) * (n - 2) // 2


@pytest.mark.slow
def test_cry7_table():
    res = face_ehrhart(7, ZeroPattern.cry(7))
    assert strings(res.polynomial) == CRY[7]
    assert res.normalized_volume == 5880


@pytest.mark.slow
def test_facet6_table():
    assert strings(face_ehrhart(6, ZeroPattern(6, [(1, 1)])).polynomial) == FACET[6]
