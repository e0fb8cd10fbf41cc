"""Truncated power series over exact rationals.

A series is stored by its ordinary (Taylor) coefficients ``c_0..c_N``.
The exponential-generating-function view ``a_n = n! * c_n`` is available
through :meth:`EgfSeries.egf` and :meth:`EgfSeries.from_egf`.

Every series carries its truncation order and mixing orders is an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from numbers import Rational
from typing import Iterable, Sequence


class SeriesError(ValueError):
    """Raised for ill-defined series operations."""


@dataclass(frozen=True)
class EgfSeries:
    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 0:
            raise SeriesError(f"negative truncation order {self.order}")
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != self.order + 1:
            raise SeriesError(
                f"expected {self.order + 1} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence) -> EgfSeries:
        return cls(len(coeffs) - 1, tuple(coeffs))

    @classmethod
    def from_egf(cls, values: Sequence) -> EgfSeries:
        """Series whose EGF coefficients ``n! * c_n`` are ``values``."""
        return cls.from_coeffs(
            [Fraction(v) / factorial(n) for n, v in enumerate(values)]
        )

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def egf(self, n: int | None = None):
        """EGF coefficient ``n! * c_n``, or the whole list when ``n`` is None."""
        if n is None:
            return [factorial(k) * c for k, c in enumerate(self.coeffs)]
        return factorial(n) * self.coeffs[n]

    def truncate(self, order: int) -> EgfSeries:
        if order > self.order:
            raise SeriesError(f"cannot raise truncation order {self.order} to {order}")
        return EgfSeries(order, self.coeffs[: order + 1])

    def __add__(self, other):
        return series_add(self, _coerce(other, self.order))

    __radd__ = __add__

    def __sub__(self, other):
        return series_sub(self, _coerce(other, self.order))

    def __rsub__(self, other):
        return series_sub(_coerce(other, self.order), self)

    def __mul__(self, other):
        if isinstance(other, EgfSeries):
            return series_mul(self, other)
        return series_scale(self, other)

    __rmul__ = __mul__

    def __neg__(self):
        return series_scale(self, -1)

    def __pow__(self, m: int):
        return series_pow(self, m)

    def __str__(self):
        return "[" + ", ".join(str(c) for c in self.coeffs) + "]"


def _coerce(value, order: int) -> EgfSeries:
    if isinstance(value, EgfSeries):
        return value
    if isinstance(value, (Rational, int)):
        return constant(value, order)
    raise TypeError(f"cannot combine a series with {type(value).__name__}")


def _check_orders(f: EgfSeries, g: EgfSeries) -> None:
    if f.order != g.order:
        raise SeriesError(f"truncation orders differ: {f.order} != {g.order}")


def zero(order: int) -> EgfSeries:
    return EgfSeries(order, (Fraction(0),) * (order + 1))


def constant(value, order: int) -> EgfSeries:
    return EgfSeries(order, (Fraction(value),) + (Fraction(0),) * order)


def one(order: int) -> EgfSeries:
    return constant(1, order)


def identity(order: int) -> EgfSeries:
    """The series ``x`` (just ``[0]`` at order 0)."""
    coeffs = [Fraction(0)] * (order + 1)
    if order >= 1:
        coeffs[1] = Fraction(1)
    return EgfSeries(order, tuple(coeffs))


def exp_minus_one(order: int) -> EgfSeries:
    """``e^x - 1`` truncated at ``order``."""
    return EgfSeries(
        order,
        (Fraction(0),) + tuple(Fraction(1, factorial(n)) for n in range(1, order + 1)),
    )


def log1p(order: int) -> EgfSeries:
    """``ln(1 + x)`` truncated at ``order``."""
    return EgfSeries(
        order,
        (Fraction(0),) + tuple(Fraction((-1) ** (n + 1), n) for n in range(1, order + 1)),
    )


def series_add(f: EgfSeries, g: EgfSeries) -> EgfSeries:
    _check_orders(f, g)
    return EgfSeries(f.order, tuple(a + b for a, b in zip(f.coeffs, g.coeffs)))


def series_sub(f: EgfSeries, g: EgfSeries) -> EgfSeries:
    _check_orders(f, g)
    return EgfSeries(f.order, tuple(a - b for a, b in zip(f.coeffs, g.coeffs)))


def series_scale(f: EgfSeries, r) -> EgfSeries:
    r = Fraction(r)
    return EgfSeries(f.order, tuple(r * c for c in f.coeffs))


def negate(f: EgfSeries) -> EgfSeries:
    return series_scale(f, -1)


def series_mul(f: EgfSeries, g: EgfSeries) -> EgfSeries:
    _check_orders(f, g)
    a, b = f.coeffs, g.coeffs
    n = f.order
    # skip leading zeros, common for series without constant term
    lo_a = next((i for i, c in enumerate(a) if c), n + 1)
    lo_b = next((i for i, c in enumerate(b) if c), n + 1)
    out = [Fraction(0)] * (n + 1)
    for i in range(lo_a, n + 1 - lo_b):
        ai = a[i]
        if not ai:
            continue
        for j in range(lo_b, n + 1 - i):
            out[i + j] += ai * b[j]
    return EgfSeries(n, tuple(out))


def series_pow(f: EgfSeries, m: int) -> EgfSeries:
    """``f**m`` truncated at ``f.order``, by binary powering."""
    if m < 0:
        raise SeriesError("negative powers: use series_reciprocal first")
    result = one(f.order)
    base = f
    while m:
        if m & 1:
            result = series_mul(result, base)
        m >>= 1
        if m:
            base = series_mul(base, base)
    return result


def compose(outer: EgfSeries, inner: EgfSeries) -> EgfSeries:
    """``outer(inner(x))`` by Horner evaluation of ``outer`` at ``inner``."""
    _check_orders(outer, inner)
    if inner.coeffs[0] != 0:
        raise SeriesError("composition requires zero constant term")
    n = outer.order
    result = constant(outer.coeffs[n], n)
    for k in range(n - 1, -1, -1):
        result = series_mul(result, inner)
        result = EgfSeries(n, (result.coeffs[0] + outer.coeffs[k],) + result.coeffs[1:])
    return result


def sigma(p: int, order: int) -> EgfSeries:
    """The ``|p|``-fold composite of ``e^x - 1`` (p > 0) or ``ln(1+x)`` (p < 0)."""
    result = identity(order)
    step = exp_minus_one(order) if p > 0 else log1p(order)
    for _ in range(abs(p)):
        result = compose(result, step)
    return result


def derivative(f: EgfSeries) -> EgfSeries:
    """Termwise derivative; the result is only known through ``order - 1``."""
    if f.order == 0:
        raise SeriesError("derivative of an order-0 series is undetermined")
    return EgfSeries(f.order - 1, tuple(n * f.coeffs[n] for n in range(1, f.order + 1)))


def series_exp(f: EgfSeries) -> EgfSeries:
    """``e^f`` via ``g' = f' g``."""
    if f.coeffs[0] != 0:
        raise SeriesError("exp requires zero constant term")
    n = f.order
    a = f.coeffs
    g = [Fraction(1)] + [Fraction(0)] * n
    for k in range(1, n + 1):
        g[k] = sum((j * a[j] * g[k - j] for j in range(1, k + 1)), Fraction(0)) / k
    return EgfSeries(n, tuple(g))


def series_log(f: EgfSeries) -> EgfSeries:
    """``ln f`` for ``f`` with constant term 1, via ``h' = f'/f``."""
    if f.coeffs[0] != 1:
        raise SeriesError("log requires constant term 1")
    n = f.order
    g = f.coeffs
    h = [Fraction(0)] * (n + 1)
    for k in range(1, n + 1):
        acc = k * g[k] - sum((j * h[j] * g[k - j] for j in range(1, k)), Fraction(0))
        h[k] = acc / k
    return EgfSeries(n, tuple(h))


def series_reciprocal(f: EgfSeries) -> EgfSeries:
    a0 = f.coeffs[0]
    if a0 == 0:
        raise SeriesError("not invertible: zero constant term")
    n = f.order
    a = f.coeffs
    g = [1 / a0] + [Fraction(0)] * n
    for k in range(1, n + 1):
        g[k] = -sum((a[j] * g[k - j] for j in range(1, k + 1)), Fraction(0)) / a0
    return EgfSeries(n, tuple(g))


def scale_argument(f: EgfSeries, r) -> EgfSeries:
    """``f(r x)``."""
    r = Fraction(r)
    return EgfSeries(f.order, tuple(c * r**n for n, c in enumerate(f.coeffs)))


def to_strings(f: EgfSeries) -> list[str]:
    """Coefficients as ``"num/den"`` strings for JSON."""
    return [f"{c.numerator}/{c.denominator}" for c in f.coeffs]


def from_strings(items: Iterable[str]) -> EgfSeries:
    return EgfSeries.from_coeffs([Fraction(s) for s in items])
