import pytest

from oracles import (
    count_partitions,
    count_permutations_by_cycles,
    invert_lower_triangular,
    matpow,
    stirling2_recurrence,
)
from stirling_powers.stirling_core import (
    entry,
    identity_matrix,
    matrix_power,
    stirling1_signed_triangle,
    stirling2_triangle,
    stirling_power_via_bell,
)


def test_stirling2_against_partition_enumeration():
    assert count_partitions(4, 2) == 7
    tri = stirling2_triangle(7)
    assert tri[4, 2] == 7
    for n in range(8):
        for m in range(n + 1):
            assert tri[n, m] == count_partitions(n, m)


def test_stirling2_diagonal_and_row_sums():
    tri = stirling2_triangle(20)
    assert all(tri[n, n] == 1 for n in range(21))
    assert [sum(tri.row(n)) for n in range(1, 8)] == [1, 2, 5, 15, 52, 203, 877]


def test_stirling1_signed():
    tri = stirling1_signed_triangle(7)
    assert tri[3, 2] == -3
    assert count_permutations_by_cycles(4, 2) == 11
    assert tri[4, 2] == 11
    for n in range(8):
        for m in range(n + 1):
            assert tri[n, m] == (-1) ** (n - m) * count_permutations_by_cycles(n, m)


def test_first_and_second_kind_are_inverse():
    n = 30
    assert (stirling2_triangle(n) @ stirling1_signed_triangle(n)).rows == identity_matrix(n).rows
    assert (stirling1_signed_triangle(n) @ stirling2_triangle(n)).rows == identity_matrix(n).rows


def test_matrix_power_basics():
    assert matrix_power(0, 5).rows == identity_matrix(5).rows
    assert matrix_power(1, 6) == stirling2_triangle(6)
    assert matrix_power(2, 7).column(1)[1:] == [1, 2, 5, 15, 52, 203, 877]
    assert matrix_power(3, 7).column(1)[1:] == [1, 3, 12, 60, 358, 2471, 19302]
    assert matrix_power(-3, 4).power == -3


@pytest.mark.parametrize("p", range(-4, 5))
def test_matrix_power_structure(p):
    mat = matrix_power(p, 12)
    assert all(mat[n, n] == 1 for n in range(13))
    assert all(mat[n, m] == 0 for n in range(13) for m in range(n + 1, 13))
    assert mat.row(1) == (0, 1)
    if p != 0:
        assert all(mat[n, 0] == 0 for n in range(1, 13))


@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_positive_powers_match_naive_powering(p):
    s = stirling2_recurrence(9)
    assert matrix_power(p, 9).to_square() == matpow(s, p)


@pytest.mark.parametrize("p", [1, 2, 3])
def test_negative_powers_match_exact_inverse(p):
    s = stirling2_recurrence(9)
    assert matrix_power(-p, 9).to_square() == invert_lower_triangular(matpow(s, p))


@pytest.mark.parametrize("p", [1, 2, 3])
def test_inverse_law(p):
    n = 30
    assert (matrix_power(p, n) @ matrix_power(-p, n)).rows == identity_matrix(n).rows


@pytest.mark.parametrize("a", range(-2, 3))
@pytest.mark.parametrize("b", range(-2, 3))
def test_semigroup_law(a, b):
    n = 15
    assert matrix_power(a, n) @ matrix_power(b, n) == matrix_power(a + b, n)


def test_entry():
    assert entry(1, 4, 2) == 7
    assert entry(-1, 3, 2) == -3
    assert entry(2, 3, 1) == 5
    with pytest.raises(ValueError, match="above diagonal"):
        entry(1, 2, 3)


def test_explicit_formula_examples():
    assert stirling_power_via_bell(1, 4, 2) == 7
    assert stirling_power_via_bell(2, 3, 1) == entry(2, 3, 1) == 5
    assert all(stirling_power_via_bell(3, n, n) == 1 for n in range(10))
    with pytest.raises(ValueError):
        stirling_power_via_bell(0, 3, 1)


@pytest.mark.parametrize("p", [1, 2, 3])
def test_explicit_formula_equals_matrix(p):
    for n in range(13):
        mat = matrix_power(p, n)
        for m in range(n + 1):
            assert stirling_power_via_bell(p, n, m) == mat[n, m], (p, n, m)


@pytest.mark.parametrize("p", range(0, 5))
def test_column_one_is_previous_bell_row(p):
    # S^{p+1}_{n,1} = sum_k S^p_{n,k}
    mat_next = matrix_power(p + 1, 10)
    mat = matrix_power(p, 10)
    for n in range(1, 11):
        assert mat_next[n, 1] == sum(mat.row(n))


def test_apply_and_square():
    mat = matrix_power(1, 3)
    assert mat.apply([1, 1, 1, 1]) == [1, 1, 2, 5]
    assert mat.to_square()[0] == [1, 0, 0, 0]


def test_size_mismatch():
    with pytest.raises(ValueError):
        matrix_power(1, 3) @ matrix_power(1, 4)
    with pytest.raises(ValueError):
        matrix_power(1, -1)
