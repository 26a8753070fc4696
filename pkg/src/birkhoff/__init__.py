"""Exact Ehrhart polynomials, volumes and integrals for Birkhoff polytopes.

The lattice points of t*B_n are encoded as a sum of unimodular cone terms
indexed by a vertex permutation and a spanning arborescence; everything
else (counts, Ehrhart polynomials of B_n and of its faces, volumes,
integrals of powers of linear forms) is read off that sum exactly.
"""

from .combinatorics import (
    Arborescence,
    dual_rays,
    enumerate_arborescences,
    permute_columns,
    ray_matrix,
)
from .ehrhart import (
    EhrhartResult,
    GenericVector,
    count_lattice_points,
    ehrhart_polynomial,
    face_ehrhart,
    face_volume,
    generic_vector,
    volume,
)
from .errors import (
    BirkhoffError,
    BudgetExceeded,
    EmptyFace,
    InternalInconsistency,
    InvalidInput,
    PoleEncountered,
)
from .exactmath import Polynomial, Rational, TruncatedSeries, poly_interpolate, series_mul
from .integration import LinearForm, integrate_power
from .mgf import ConeTerm, ZeroPattern, birkhoff_terms, evaluate_mgf, face_terms
from .oracle import count_semimagic, enumerate_points, oracle_ehrhart
from .todd import ToddValues, g_series, todd_values, todd_values_fast

__version__ = "0.1.0"
