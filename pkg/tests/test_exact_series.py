from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import invert_lower_triangular, matpow, stirling2_recurrence
from stirling_powers import exact_series as es
from stirling_powers.stirling_core import matrix_power


def test_exp_minus_one():
    assert es.exp_minus_one(0).coeffs == (0,)
    assert list(es.exp_minus_one(3).coeffs) == [0, 1, F(1, 2), F(1, 6)]
    assert es.exp_minus_one(4).egf() == [0, 1, 1, 1, 1]


def test_log1p():
    assert list(es.log1p(3).coeffs) == [0, 1, F(-1, 2), F(1, 3)]
    assert es.log1p(4).egf() == [0, 1, -1, 2, -6]
    assert es.compose(es.exp_minus_one(10), es.log1p(10)) == es.identity(10)


def test_egf_accessor_roundtrip():
    f = es.EgfSeries.from_egf([1, 1, 2, 5, 15])
    assert f.egf() == [1, 1, 2, 5, 15]
    assert f.egf(4) == 15
    assert f[4] == F(15, 24)


def test_invalid_construction():
    with pytest.raises(es.SeriesError):
        es.EgfSeries(3, (1, 2))
    with pytest.raises(es.SeriesError):
        es.EgfSeries(-1, ())


def test_compose_identity_inner():
    f = es.EgfSeries.from_coeffs([F(k - 3, k + 1) for k in range(9)])
    assert es.compose(f, es.identity(8)) == f


def test_compose_exp_minus_one_twice_gives_bell_numbers():
    outer = es.exp_minus_one(5)
    assert es.compose(outer, outer).egf() == [0, 1, 2, 5, 15, 52]


def test_compose_log1p_twice_matches_inverse_of_squared_matrix():
    # oracle: column 1 of the exact inverse of S^2, S from the textbook recurrence
    s = stirling2_recurrence(5)
    inverse = invert_lower_triangular(matpow(s, 2))
    expected = [row[1] for row in inverse]
    assert expected == [0, 1, -2, 7, -35, 228]
    assert es.compose(es.log1p(5), es.log1p(5)).egf() == expected


def test_compose_errors():
    with pytest.raises(es.SeriesError, match="zero constant term"):
        es.compose(es.exp_minus_one(3), es.one(3))
    with pytest.raises(es.SeriesError):
        es.compose(es.exp_minus_one(3), es.exp_minus_one(4))


def test_sigma_small_cases():
    assert es.sigma(0, 4).coeffs == (0, 1, 0, 0, 0)
    assert es.sigma(2, 5).egf() == [0, 1, 2, 5, 15, 52]
    assert es.sigma(1, 6) == es.exp_minus_one(6)
    assert es.sigma(-1, 6) == es.log1p(6)


@pytest.mark.parametrize("p", [1, 2, 3])
def test_sigma_inverse_pair(p):
    assert es.compose(es.sigma(p, 8), es.sigma(-p, 8)) == es.identity(8)


@pytest.mark.parametrize("p", range(-4, 5))
@pytest.mark.parametrize("order", [0, 1, 7, 20])
def test_sigma_round_trip(p, order):
    assert es.compose(es.sigma(p, order), es.sigma(-p, order)) == es.identity(order)


@pytest.mark.parametrize("a", range(-2, 3))
@pytest.mark.parametrize("b", range(-2, 3))
def test_sigma_semigroup(a, b):
    n = 12
    assert es.compose(es.sigma(a, n), es.sigma(b, n)) == es.sigma(a + b, n)


def test_series_pow():
    f = es.exp_minus_one(4)
    assert es.series_pow(f, 0) == es.one(4)
    # S(n, 2), n = 0..4, from the textbook recurrence
    s = stirling2_recurrence(4)
    expected = [s[n][2] for n in range(5)]
    assert expected == [0, 0, 1, 3, 7]
    assert [c / 2 for c in es.series_pow(f, 2).egf()] == expected


def test_series_pow_matches_brute_force_matrix_square():
    s = stirling2_recurrence(5)
    square = matpow(s, 2)
    col = [c / factorial(2) for c in es.series_pow(es.sigma(2, 5), 2).egf()]
    assert col == [row[2] for row in square]


@pytest.mark.parametrize("p", range(-3, 4))
def test_column_generating_functions(p):
    n = 15
    mat = matrix_power(p, n)
    sig = es.sigma(p, n)
    for m in range(n + 1):
        col = es.series_scale(es.series_pow(sig, m), F(1, factorial(m))).egf()
        assert col == mat.column(m), (p, m)


def test_series_exp():
    assert es.series_exp(es.zero(4)) == es.one(4)
    assert es.series_exp(es.sigma(1, 5)).egf() == [1, 1, 2, 5, 15, 52]
    assert es.series_exp(es.sigma(2, 5)).egf() == [1, 1, 3, 12, 60, 358]
    with pytest.raises(es.SeriesError):
        es.series_exp(es.one(3))


def test_ring_operations():
    f = es.EgfSeries.from_coeffs([1, F(2, 3), -5, 7])
    assert es.series_mul(f, es.one(3)) == f
    assert es.series_add(f, es.negate(f)) == es.zero(3)
    assert list(es.series_mul(es.exp_minus_one(3), es.exp_minus_one(3)).coeffs) == [0, 0, 1, 1]
    assert f - f == es.zero(3)
    assert 2 * f == f + f
    with pytest.raises(es.SeriesError):
        es.series_add(f, es.one(4))
    with pytest.raises(es.SeriesError):
        es.series_mul(f, es.one(2))


def test_reciprocal():
    assert es.series_reciprocal(es.EgfSeries.from_coeffs([1, 0, 0])).coeffs == (1, 0, 0)
    fubini = es.series_reciprocal(1 - es.sigma(1, 5))
    assert fubini.egf() == [1, 1, 3, 13, 75, 541]
    f = 1 + es.sigma(2, 8)
    assert f * es.series_reciprocal(f) == es.one(8)
    with pytest.raises(es.SeriesError, match="not invertible"):
        es.series_reciprocal(es.exp_minus_one(3))


def test_scale_argument():
    f = es.EgfSeries.from_coeffs([3, 1, 4, 1, 5])
    assert es.scale_argument(f, 1) == f
    assert list(es.scale_argument(es.exp_minus_one(3), 2).coeffs) == [0, 2, 2, F(4, 3)]
    assert es.scale_argument(f, 0).coeffs == (3, 0, 0, 0, 0)


def test_derivative_and_truncate():
    f = es.exp_minus_one(4)
    assert es.derivative(f) == 1 + es.exp_minus_one(3)
    assert f.truncate(2).coeffs == (0, 1, F(1, 2))
    with pytest.raises(es.SeriesError):
        f.truncate(5)


def test_string_roundtrip():
    f = es.EgfSeries.from_coeffs([F(-1, 3), 0, F(22, 7)])
    assert es.to_strings(f) == ["-1/3", "0/1", "22/7"]
    assert es.from_strings(es.to_strings(f)) == f


small_series = st.lists(st.integers(-5, 5), min_size=2, max_size=9).map(
    lambda cs: es.EgfSeries.from_coeffs([0] + cs)
)


@given(small_series)
@settings(max_examples=40, deadline=None)
def test_exp_log_inverse(f):
    assert es.series_log(es.series_exp(f)) == f
    assert es.series_exp(es.series_log(1 + f)) == 1 + f


@given(small_series)
@settings(max_examples=40, deadline=None)
def test_compose_with_exp_minus_one_and_log1p(f):
    n = f.order
    assert es.compose(es.compose(f, es.exp_minus_one(n)), es.log1p(n)) == f


@given(small_series, small_series)
@settings(max_examples=30, deadline=None)
def test_mul_commutes_and_reciprocal(f, g):
    g = g.truncate(min(f.order, g.order))
    f = f.truncate(g.order)
    assert f * g == g * f
    h = 1 + f
    assert h * es.series_reciprocal(h) == es.one(h.order)
