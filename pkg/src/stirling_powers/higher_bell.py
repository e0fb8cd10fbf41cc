"""Higher order Bell polynomials and two floating-point oracles for them.

``B_n^p(x) = sum_m S^p_{n,m} x^m``.  The exact route reads rows of the
Stirling matrix power; :func:`dobinski_sum` and :func:`cesaro_integral`
recompute the same values numerically without touching ``S^p`` itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.integrate import simpson

from .stirling_core import matrix_power

# floating-point oracles refuse to work with magnitudes beyond this
MAGNITUDE_LIMIT = 1e300


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; ``coeffs[m]`` multiplies ``x**m``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = list(self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def degree(self) -> int:
        # -1 for the zero polynomial
        return len(self.coeffs) - 1

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __getitem__(self, m: int) -> int:
        return self.coeffs[m] if m < len(self.coeffs) else 0

    def __str__(self):
        terms = []
        for m, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if m == 0 else f"{c}*x^{m}")
        return " + ".join(terms) or "0"


@dataclass(frozen=True)
class NumericApprox:
    value: float
    est_error: float

    def __post_init__(self):
        if not self.est_error >= 0:
            raise ValueError(f"est_error must be non-negative, got {self.est_error}")


def bell_polynomial(p: int, n: int) -> IntPolynomial:
    if p < 0:
        raise ValueError(f"Bell polynomials are defined for p >= 0, got {p}")
    return IntPolynomial(matrix_power(p, n).row(n))


def bell_number(p: int, n: int) -> int:
    return sum(bell_polynomial(p, n).coeffs)


def bell_eval(p: int, n: int, x):
    """Exact ``B_n^p(x)``; ints and Fractions stay exact."""
    if isinstance(x, str):
        x = Fraction(x)
    return bell_polynomial(p, n)(x)


def _to_float(value) -> float:
    try:
        out = float(value)
    except OverflowError:
        out = math.inf
    if not abs(out) <= MAGNITUDE_LIMIT:
        raise OverflowError(f"magnitude exceeds {MAGNITUDE_LIMIT:g}")
    return out


def dobinski_sum(p: int, n: int, x: float = 1.0, tol: float = 1e-12,
                 max_terms: int = 500) -> NumericApprox:
    """Poisson-weighted sum ``e^{-x} sum_k x^k B_n^{p-1}(k) / k!``.

    Summation stops once a term drops below ``tol * max(1, partial)`` past
    the Poisson mode (``k > x``) and the term ratio is below one; from there
    on the ratios keep shrinking, so the geometric tail bound is safe and is
    returned as ``est_error``.
    """
    if p < 1:
        raise ValueError(f"Dobinski sum needs p >= 1, got {p}")
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    if not x > 0:
        raise ValueError(f"x must be positive, got {x}")
    inner = bell_polynomial(p - 1, n)
    weight = math.exp(-x)
    term = weight * _to_float(inner(0))
    partial = term
    for k in range(max_terms):
        weight *= x / (k + 1)
        nxt = weight * _to_float(inner(k + 1))
        if k > x and term < tol * max(1.0, abs(partial)) and 0 < term:
            ratio = nxt / term
            if ratio < 1:
                tail = term * ratio / (1 - ratio)
                return NumericApprox(partial + nxt, tail)
        partial += nxt
        term = nxt
        if not math.isfinite(partial) or partial > MAGNITUDE_LIMIT:
            raise OverflowError("Dobinski partial sum overflow")
    raise ConvergenceError(f"tolerance not reached within {max_terms} terms")


def iterated_expm1(z: np.ndarray, p: int) -> np.ndarray:
    """Apply ``z -> e^z - 1`` to a complex array ``p`` times."""
    w = np.asarray(z, dtype=complex)
    with np.errstate(over="raise", invalid="raise"):
        for _ in range(p):
            w = np.expm1(w)
    return w


def _cesaro_quadrature(p: int, n: int, x: float, intervals: int) -> float:
    t = np.linspace(0.0, math.pi, intervals + 1)
    try:
        w = iterated_expm1(np.exp(1j * t), p)
        with np.errstate(over="raise", invalid="raise"):
            f = np.exp(x * w).imag * np.sin(n * t)
    except FloatingPointError as exc:
        raise OverflowError("quadrature overflow") from exc
    if not np.all(np.isfinite(f)) or np.max(np.abs(f)) > MAGNITUDE_LIMIT:
        raise OverflowError("quadrature overflow")
    return float(simpson(f, x=t))


def cesaro_integral(p: int, n: int, x: float = 1.0,
                    quad_points: int = 512) -> NumericApprox:
    """``(2 n!/pi) Im int_0^pi exp(x sigma^p(e^{it})) sin(nt) dt`` by Simpson.

    ``est_error`` is the Richardson estimate from repeating the rule with
    twice as many intervals.
    """
    if p < 0:
        raise ValueError(f"p must be non-negative, got {p}")
    if n < 1:
        raise ValueError("the sine factor vanishes for n = 0; need n >= 1")
    if quad_points < 8:
        raise ValueError(f"quad_points must be at least 8, got {quad_points}")
    scale = 2.0 * math.factorial(n) / math.pi
    if scale > MAGNITUDE_LIMIT:
        raise OverflowError("quadrature overflow")
    coarse = _cesaro_quadrature(p, n, x, quad_points)
    fine = _cesaro_quadrature(p, n, x, 2 * quad_points)
    value = scale * coarse
    est = scale * abs(fine - coarse) * 16.0 / 15.0
    if not math.isfinite(value) or abs(value) > MAGNITUDE_LIMIT:
        raise OverflowError("quadrature overflow")
    return NumericApprox(value, est)
