"""Higher order Eulerian triangles.

The triangle for order p is built from the explicit inversion

    A^p_{n,m} = sum_k k! S^p_{n,k} C(n-k, m) (-1)^(n-k-m)

and the remaining relations with the Stirling and Fubini families are
exposed as boolean checks.  For p = 1 this is the classical Eulerian
triangle (row 3 is 1, 4, 1); for p >= 2 nothing is assumed about signs or
support.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from . import exact_series as es
from .higher_bell import IntPolynomial
from .higher_fubini import fubini_polynomial
from .stirling_core import matrix_power


@dataclass(frozen=True)
class EulerianMatrix:
    order_p: int
    size: int
    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, index: tuple[int, int]) -> int:
        n, m = index
        return self.rows[n][m] if m <= n else 0

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n]

    def to_square(self) -> list[list[int]]:
        width = self.size + 1
        return [list(r) + [0] * (width - len(r)) for r in self.rows]


def _check_p(p: int) -> None:
    if p < 1:
        raise ValueError(f"Eulerian triangles are defined for p >= 1, got {p}")


def eulerian_matrix(p: int, n_max: int) -> EulerianMatrix:
    _check_p(p)
    s = matrix_power(p, n_max)
    rows = []
    for n in range(n_max + 1):
        row = []
        for m in range(n + 1):
            row.append(sum(
                factorial(k) * s[n, k] * comb(n - k, m) * (-1) ** (n - k - m)
                for k in range(n - m + 1)
            ))
        rows.append(tuple(row))
    return EulerianMatrix(p, n_max, tuple(rows))


def eulerian_polynomial(p: int, n: int) -> IntPolynomial:
    return IntPolynomial(eulerian_matrix(p, n).row(n))


def check_identity_1(p: int, n_max: int) -> bool:
    """``m! S^p_{n,m} == sum_k A^p_{n,k} C(k, n-m)`` for all m <= n <= n_max."""
    a = eulerian_matrix(p, n_max)
    s = matrix_power(p, n_max)
    return all(
        factorial(m) * s[n, m] == sum(a[n, k] * comb(k, n - m) for k in range(n + 1))
        for n in range(n_max + 1)
        for m in range(n + 1)
    )


def check_identity_3(p: int, x, n_max: int) -> bool:
    """``F_n^p(x) == sum_k A^p_{n,k} (x+1)^k x^(n-k)``."""
    x = Fraction(x)
    a = eulerian_matrix(p, n_max)
    return all(
        fubini_polynomial(p, n)(x)
        == sum(a[n, k] * (x + 1) ** k * x ** (n - k) for k in range(n + 1))
        for n in range(n_max + 1)
    )


def check_identity_4(p: int, x, n_max: int) -> bool:
    """``F_n^p(x) == x^n A_n^p((x+1)/x)``."""
    x = Fraction(x)
    if x == 0:
        raise ZeroDivisionError("division by zero in argument transform")
    a = eulerian_matrix(p, n_max)
    y = (x + 1) / x
    return all(
        fubini_polynomial(p, n)(x) == x**n * IntPolynomial(a.row(n))(y)
        for n in range(n_max + 1)
    )


def check_definition(p: int, x, n_max: int) -> bool:
    """``F_n^p(x) / x^n == sum_k A^p_{n,k} ((x+1)/x)^k``, the defining basis change."""
    x = Fraction(x)
    if x == 0:
        raise ZeroDivisionError("division by zero in argument transform")
    a = eulerian_matrix(p, n_max)
    y = (x + 1) / x
    return all(
        fubini_polynomial(p, n)(x) / x**n == sum(a[n, k] * y**k for k in range(n + 1))
        for n in range(n_max + 1)
    )


def eulerian_egf(p: int, x, order: int) -> es.EgfSeries:
    """``(x-1) / (x - E^{p-1}((x-1)t))`` as a truncated series in t."""
    _check_p(p)
    x = Fraction(x)
    if x == 1:
        raise ZeroDivisionError("EGF closed form singular at x=1")
    iterated_exp = es.series_exp(es.sigma(p - 1, order))
    denom = x - es.scale_argument(iterated_exp, x - 1)
    return es.series_scale(es.series_reciprocal(denom), x - 1)


def eulerian_egf_sigma_form(p: int, x, order: int) -> es.EgfSeries:
    """``1 / (1 - sigma^p((x-1)t) / (x-1))``, the other closed form."""
    _check_p(p)
    x = Fraction(x)
    if x == 1:
        raise ZeroDivisionError("EGF closed form singular at x=1")
    inner = es.series_scale(es.scale_argument(es.sigma(p, order), x - 1), 1 / (x - 1))
    return es.series_reciprocal(1 - inner)


def eulerian_egf_check(p: int, x, order: int) -> bool:
    x = Fraction(x)
    rhs = eulerian_egf(p, x, order)
    a = eulerian_matrix(p, order)
    lhs = es.EgfSeries.from_egf([IntPolynomial(a.row(n))(x) for n in range(order + 1)])
    return lhs == rhs and rhs == eulerian_egf_sigma_form(p, x, order)
