"""Stirling triangles and their integer matrix powers.

``matrix_power(p, N)`` returns the leading ``(N+1) x (N+1)`` block of the
p-th power of the (infinite, unit lower-triangular) Stirling set-number
matrix.  Negative powers are powers of the signed cycle-number matrix, so
``matrix_power(p, N) @ matrix_power(-p, N)`` being the identity is a real
check rather than a tautology.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial


@dataclass(frozen=True)
class StirlingPowerMatrix:
    """Lower-triangular block of ``S^power``; ``rows[n]`` holds entries m = 0..n."""

    power: int
    size: int
    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, index: tuple[int, int]) -> int:
        n, m = index
        if m > n:
            return 0
        return self.rows[n][m]

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n]

    def column(self, m: int) -> list[int]:
        return [self[n, m] for n in range(self.size + 1)]

    def to_square(self) -> list[list[int]]:
        """Rectangular rows with the upper zeros filled in."""
        width = self.size + 1
        return [list(r) + [0] * (width - len(r)) for r in self.rows]

    def apply(self, vector) -> list:
        """Matrix-vector product with the first ``size + 1`` entries of ``vector``."""
        return [sum(a * v for a, v in zip(r, vector)) for r in self.rows]

    def __matmul__(self, other: StirlingPowerMatrix) -> StirlingPowerMatrix:
        if not isinstance(other, StirlingPowerMatrix):
            return NotImplemented
        return multiply(self, other)


def multiply(a: StirlingPowerMatrix, b: StirlingPowerMatrix) -> StirlingPowerMatrix:
    if a.size != b.size:
        raise ValueError(f"size mismatch: {a.size} != {b.size}")
    rows = []
    for n in range(a.size + 1):
        ra = a.rows[n]
        # lower-triangular: only k in [m, n] contributes
        rows.append(
            tuple(
                sum(ra[k] * b.rows[k][m] for k in range(m, n + 1))
                for m in range(n + 1)
            )
        )
    return StirlingPowerMatrix(a.power + b.power, a.size, tuple(rows))


def identity_matrix(n_max: int) -> StirlingPowerMatrix:
    rows = tuple(tuple(int(m == n) for m in range(n + 1)) for n in range(n_max + 1))
    return StirlingPowerMatrix(0, n_max, rows)


@lru_cache(maxsize=None)
def stirling2_triangle(n_max: int) -> StirlingPowerMatrix:
    """Set numbers S(n, m) from S(n,m) = S(n-1,m-1) + m S(n-1,m)."""
    _check_size(n_max)
    rows = [(1,)]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row = [0] * (n + 1)
        for m in range(1, n + 1):
            row[m] = prev[m - 1] + (m * prev[m] if m < n else 0)
        rows.append(tuple(row))
    return StirlingPowerMatrix(1, n_max, tuple(rows))


@lru_cache(maxsize=None)
def stirling1_signed_triangle(n_max: int) -> StirlingPowerMatrix:
    """Signed cycle numbers s(n, m) from s(n,m) = s(n-1,m-1) - (n-1) s(n-1,m)."""
    _check_size(n_max)
    rows = [(1,)]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        row = [0] * (n + 1)
        for m in range(1, n + 1):
            row[m] = prev[m - 1] - ((n - 1) * prev[m] if m < n else 0)
        rows.append(tuple(row))
    return StirlingPowerMatrix(-1, n_max, tuple(rows))


@lru_cache(maxsize=None)
def matrix_power(p: int, n_max: int) -> StirlingPowerMatrix:
    """Exact ``S^p`` truncated to rows/columns 0..n_max, for any integer p."""
    _check_size(n_max)
    if p == 0:
        return identity_matrix(n_max)
    if p > 0:
        base = stirling2_triangle(n_max)
        smaller = matrix_power(p - 1, n_max) if p > 1 else None
    else:
        base = stirling1_signed_triangle(n_max)
        smaller = matrix_power(p + 1, n_max) if p < -1 else None
    return base if smaller is None else base @ smaller


def entry(p: int, n: int, m: int) -> int:
    """``S^p_{n,m}``."""
    if m > n:
        raise ValueError(f"above diagonal: m={m} > n={n}")
    if n < 0 or m < 0:
        raise ValueError("indices must be non-negative")
    return matrix_power(p, n)[n, m]


def stirling_power_via_bell(p: int, n: int, m: int) -> int:
    """``S^p_{n,m}`` from the alternating sum over ``B_n^{p-1}(k)``, k = 0..m.

    ``B_n^{p-1}(k)`` is evaluated from row ``n`` of ``S^{p-1}``; the final
    division by ``m!`` must be exact.
    """
    if p < 1:
        raise ValueError(f"explicit formula needs p >= 1, got {p}")
    if m > n:
        raise ValueError(f"above diagonal: m={m} > n={n}")
    row = matrix_power(p - 1, n).row(n)
    total = 0
    for k in range(m + 1):
        bell_k = sum(c * k**j for j, c in enumerate(row))
        total += comb(m, k) * (-1) ** (m - k) * bell_k
    q, r = divmod(total, factorial(m))
    if r:
        raise ArithmeticError(f"divisibility violated: {total} / {m}!")
    return q


def _check_size(n_max: int) -> None:
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
