"""Exact powers of Stirling matrices and the higher order Bell, Fubini and
Eulerian families derived from them."""

from .exact_series import EgfSeries, SeriesError, compose, sigma
from .higher_bell import (
    IntPolynomial,
    NumericApprox,
    bell_eval,
    bell_number,
    bell_polynomial,
    cesaro_integral,
    dobinski_sum,
)
from .higher_eulerian import EulerianMatrix, eulerian_matrix, eulerian_polynomial
from .higher_fubini import fubini_geometric_sum, fubini_number, fubini_polynomial
from .stirling_core import (
    StirlingPowerMatrix,
    entry,
    matrix_power,
    stirling1_signed_triangle,
    stirling2_triangle,
    stirling_power_via_bell,
)
from .stirling_transform import eigensequence, stirling_transform

__version__ = "0.1.0"
