"""Eigensequence of the Stirling transform and identities it satisfies.

The sequence starts 0, 1, 1, 2, 6, 26, 152, 1144.  Both C_0 = 0 and C_1 = 1
are seeds: the recurrence ``C_{n+1} = sum_k C_k S(n, k)`` only applies from
n = 1 on, since at n = 0 it would force C_1 = 0.
"""

from __future__ import annotations

from math import comb

from . import exact_series as es
from .stirling_core import matrix_power, stirling2_triangle

BigIntSequence = tuple[int, ...]


def stirling_transform(values) -> list[int]:
    """``b_n = sum_k a_k S(n, k)`` for the given prefix ``a``."""
    if not values:
        return []
    return stirling2_triangle(len(values) - 1).apply(values)


def eigensequence(n_max: int) -> BigIntSequence:
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    c = [0, 1][: n_max + 1]
    s = stirling2_triangle(max(n_max - 1, 0))
    for n in range(1, n_max):
        c.append(sum(c[k] * s[n, k] for k in range(n + 1)))
    return tuple(c)


def check_binomial_identity(n_max: int) -> bool:
    """``C_{n+2} = 1 + sum_k C(n,k) C'_k`` with ``C' = S^2 C``, for n <= n_max - 2."""
    c = eigensequence(n_max)
    c2 = matrix_power(2, n_max).apply(c)
    return all(
        c[n + 2] == 1 + sum(comb(n, k) * c2[k] for k in range(n + 1))
        for n in range(n_max - 1)
    )


def check_shift_recurrence(n_max: int) -> bool:
    """``C_{n+2} = sum_k S(n,k) (C_{k+1} + k C_k)`` for n <= n_max - 2."""
    c = eigensequence(n_max)
    s = stirling2_triangle(n_max)
    return all(
        c[n + 2] == sum(s[n, k] * (c[k + 1] + k * c[k]) for k in range(n + 1))
        for n in range(n_max - 1)
    )


def eigensequence_egf(order: int) -> es.EgfSeries:
    return es.EgfSeries.from_egf(eigensequence(order))


def check_egf_ode(order: int, derivative: int = 1) -> bool:
    """Series check of ``f' = f(e^x - 1) + 1`` or, with ``derivative=2``,
    ``f'' = e^x (f(sigma^2(x)) + 1)``, where f is the EGF of C_0..C_order.
    """
    if derivative not in (1, 2):
        raise ValueError("derivative must be 1 or 2")
    if order < derivative:
        return True
    f = eigensequence_egf(order)
    lhs = f
    for _ in range(derivative):
        lhs = es.derivative(lhs)
    inner = es.sigma(derivative, order)
    rhs = es.compose(f, inner) + 1
    if derivative == 2:
        rhs = es.series_exp(es.identity(order)) * rhs
    return lhs == rhs.truncate(order - derivative)


def binomial_matrix_apply(values) -> list[int]:
    """``(B v)_n = sum_k C(n,k) v_k``."""
    return [sum(comb(n, k) * values[k] for k in range(n + 1)) for n in range(len(values))]


def eigensequence_via_binomial(n_max: int) -> BigIntSequence:
    """C_0..C_{n_max} from the matrix form ``1 + B S^2 C`` (needs C_0, C_1 seeds)."""
    c = [0, 1][: n_max + 1]
    # C_{n+2} only uses C_0..C_n, so grow the prefix in place
    for n in range(n_max - 1):
        c2 = matrix_power(2, n).apply(c[: n + 1])
        c.append(1 + binomial_matrix_apply(c2)[n])
    return tuple(c)
