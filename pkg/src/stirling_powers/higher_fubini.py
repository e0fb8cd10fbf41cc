"""Higher order Fubini (ordered Bell) polynomials ``F_n^p(x) = sum_m m! S^p_{n,m} x^m``."""

from __future__ import annotations

import math
from fractions import Fraction
from math import factorial

from . import exact_series as es
from .higher_bell import (
    MAGNITUDE_LIMIT,
    ConvergenceError,
    IntPolynomial,
    NumericApprox,
    _to_float,
    bell_polynomial,
)
from .stirling_core import matrix_power

BigIntSequence = tuple[int, ...]


def _check_p(p: int) -> None:
    if p < 1:
        raise ValueError(f"Fubini polynomials are defined for p >= 1, got {p}")


def fubini_polynomial(p: int, n: int) -> IntPolynomial:
    _check_p(p)
    row = matrix_power(p, n).row(n)
    return IntPolynomial(tuple(factorial(m) * s for m, s in enumerate(row)))


def fubini_number(p: int, n: int) -> int:
    return sum(fubini_polynomial(p, n).coeffs)


def fubini_sequence(p: int, n_max: int, x=1) -> BigIntSequence:
    return tuple(fubini_polynomial(p, n)(x) for n in range(n_max + 1))


def fubini_geometric_sum(p: int, n: int, tol: float = 1e-12, *,
                         bell_order: int | None = None,
                         max_terms: int = 2000) -> NumericApprox:
    """``sum_k B_n^{q}(k) / 2^{k+1}`` with ``q = p - 1`` unless ``bell_order`` says otherwise.

    Only ``q = p - 1`` reproduces ``F_n^p``; passing ``bell_order=p`` evaluates
    the off-by-one variant, which is useful for showing that it disagrees.
    """
    _check_p(p)
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    q = p - 1 if bell_order is None else bell_order
    inner = bell_polynomial(q, n)
    term = _to_float(inner(0)) / 2
    partial = term
    for k in range(max_terms):
        nxt = _to_float(inner(k + 1)) / 2.0 ** (k + 2)
        if term > 0 and term < tol * max(1.0, abs(partial)):
            ratio = nxt / term
            if ratio < 1:
                return NumericApprox(partial + nxt, nxt / (1 - ratio))
        partial += nxt
        term = nxt
        if not math.isfinite(partial) or partial > MAGNITUDE_LIMIT:
            raise OverflowError("geometric sum overflow")
    raise ConvergenceError(f"tolerance not reached within {max_terms} terms")


def fubini_egf(p: int, x, order: int) -> es.EgfSeries:
    """Closed form ``1 / (1 - x sigma^p(t))`` as a truncated series."""
    _check_p(p)
    return es.series_reciprocal(1 - es.series_scale(es.sigma(p, order), Fraction(x)))


def fubini_egf_check(p: int, x, order: int) -> bool:
    x = Fraction(x)
    lhs = es.EgfSeries.from_egf([fubini_polynomial(p, n)(x) for n in range(order + 1)])
    return lhs == fubini_egf(p, x, order)


def falling_factorial_coeffs(poly: IntPolynomial) -> list[int]:
    """Coefficients ``d_m`` with ``poly(x) = sum_m d_m (x)_m``, by forward differences."""
    deg = max(poly.degree, 0)
    values = [poly(k) for k in range(deg + 1)]
    out = []
    for m in range(deg + 1):
        # Newton: d_m = Delta^m poly(0) / m!
        q, r = divmod(values[0], factorial(m))
        if r:
            raise ArithmeticError("non-integral falling-factorial coefficient")
        out.append(q)
        values = [b - a for a, b in zip(values, values[1:])]
    return out


def fubini_via_falling_factorials(p: int, n: int) -> IntPolynomial:
    """``F_n^p`` from ``B_n^{p-1}`` by sending ``(x)_m`` to ``m! x^m``."""
    _check_p(p)
    d = falling_factorial_coeffs(bell_polynomial(p - 1, n))
    return IntPolynomial(tuple(factorial(m) * c for m, c in enumerate(d)))
