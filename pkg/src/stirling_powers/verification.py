"""Identity suite behind ``stirling-powers verify``.

Each check returns ``(passed, detail)``; :func:`run_verification` runs them
all and reports in name order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable

from . import exact_series as es
from .higher_bell import bell_number, cesaro_integral, dobinski_sum
from .higher_eulerian import (
    check_definition,
    check_identity_1,
    check_identity_3,
    check_identity_4,
    eulerian_egf_check,
)
from .higher_fubini import (
    fubini_egf_check,
    fubini_geometric_sum,
    fubini_number,
    fubini_polynomial,
    fubini_via_falling_factorials,
)
from .reference_tables import BELL_TABLE, EIGENSEQUENCE_PREFIX, FUBINI_TABLE
from .stirling_core import identity_matrix, matrix_power, stirling_power_via_bell
from .stirling_transform import (
    check_binomial_identity,
    check_egf_ode,
    check_shift_recurrence,
    eigensequence,
    stirling_transform,
)

RATIONAL_POINTS = (Fraction(1), Fraction(2), Fraction(-1), Fraction(1, 2))
EULERIAN_POINTS = (Fraction(1), Fraction(2), Fraction(-2), Fraction(1, 2))
RELATIVE_TOL = 1e-6
CESARO_ABS_TOL = 0.5


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f"  {self.detail}" if self.detail else "")


def _failures(pairs) -> tuple[bool, str]:
    bad = [label for label, ok in pairs if not ok]
    if bad:
        return False, "failed at " + ", ".join(map(str, bad[:5]))
    return True, ""


def _rel_residual(approx: float, exact: int) -> float:
    return abs(approx - exact) / max(1, abs(exact))


def build_checks(max_n: int, max_p: int, tol: float = 1e-10,
                 quad_points: int = 512) -> dict[str, Callable[[], tuple[bool, str]]]:
    ps = range(1, max_p + 1)
    signed = range(-max_p, max_p + 1)
    n_max = max_n

    def inverse():
        ident = identity_matrix(n_max)
        return _failures(
            (p, (matrix_power(p, n_max) @ matrix_power(-p, n_max)).rows == ident.rows)
            for p in ps
        )

    def semigroup():
        return _failures(
            ((a, b), matrix_power(a, n_max) @ matrix_power(b, n_max) == matrix_power(a + b, n_max))
            for a in signed for b in signed
        )

    def column_egf():
        pairs = []
        for p in signed:
            mat = matrix_power(p, n_max)
            sig = es.sigma(p, n_max)
            for m in range(n_max + 1):
                col = es.series_scale(es.series_pow(sig, m), Fraction(1, factorial(m))).egf()
                pairs.append(((p, m), list(col) == mat.column(m)))
        return _failures(pairs)

    def explicit_formula():
        return _failures(
            ((p, n, m), stirling_power_via_bell(p, n, m) == matrix_power(p, n)[n, m])
            for p in ps for n in range(n_max + 1) for m in range(n + 1)
        )

    def dobinski():
        worst = 0.0
        pairs = []
        for p in ps:
            for n in range(n_max + 1):
                r = _rel_residual(dobinski_sum(p, n, 1.0, tol).value, bell_number(p, n))
                worst = max(worst, r)
                pairs.append(((p, n), r < RELATIVE_TOL))
        ok, detail = _failures(pairs)
        return ok, (detail + " " if detail else "") + f"max rel residual {worst:.2e}"

    def cesaro():
        worst = 0.0
        pairs = []
        for p in range(0, min(max_p, 2) + 1):
            for n in range(1, min(n_max, 7) + 1):
                err = abs(cesaro_integral(p, n, 1.0, quad_points).value - bell_number(p, n))
                worst = max(worst, err)
                pairs.append(((p, n), err < CESARO_ABS_TOL))
        ok, detail = _failures(pairs)
        return ok, (detail + " " if detail else "") + f"max abs residual {worst:.2e}"

    def geometric_sum():
        worst = 0.0
        pairs = []
        for p in ps:
            for n in range(n_max + 1):
                r = _rel_residual(fubini_geometric_sum(p, n, tol).value, fubini_number(p, n))
                worst = max(worst, r)
                pairs.append(((p, n), r < RELATIVE_TOL))
        ok, detail = _failures(pairs)
        return ok, (detail + " " if detail else "") + f"max rel residual {worst:.2e}"

    def geometric_sum_index_diagnostic():
        # weights B_n^p(k) instead of B_n^{p-1}(k): expected to disagree
        lower = max(
            (_rel_residual(fubini_geometric_sum(p, n, tol).value, fubini_number(p, n))
             for p in ps for n in range(n_max + 1)),
            default=0.0,
        )
        shifted = {
            (p, n): _rel_residual(fubini_geometric_sum(p, n, tol, bell_order=p).value,
                                  fubini_number(p, n))
            for p in ps for n in range(n_max + 1)
        }
        mismatched = sorted(k for k, r in shifted.items() if r >= RELATIVE_TOL and k[0] >= 2)
        worst = max(shifted.values(), default=0.0)
        note = (f"B^(p-1) weights: max rel residual {lower:.2e}; "
                f"B^(p) weights: max rel residual {worst:.2e}")
        if mismatched:
            note += f", disagrees at {len(mismatched)} (p>=2, n) points"
        else:
            note += ", no p>=2 disagreement observable at this size"
        return True, note

    def fubini_egf():
        return _failures(
            ((p, str(x)), fubini_egf_check(p, x, n_max)) for p in ps for x in RATIONAL_POINTS
        )

    def falling_factorial_map():
        return _failures(
            ((p, n), fubini_via_falling_factorials(p, n) == fubini_polynomial(p, n))
            for p in ps for n in range(n_max + 1)
        )

    def eulerian_identity(fn, points):
        def run():
            if points is None:
                return _failures((p, fn(p, n_max)) for p in ps)
            return _failures(((p, str(x)), fn(p, x, n_max)) for p in ps for x in points)
        return run

    def eulerian_egf():
        return _failures(
            ((p, x), eulerian_egf_check(p, x, n_max)) for p in ps for x in (2, 3)
        )

    def bell_table():
        return _failures(
            ((p, n), bell_number(p, n) == row[n - 1])
            for p, row in BELL_TABLE.items() for n in range(1, 8)
        )

    def fubini_table():
        return _failures(
            ((p, n), fubini_number(p, n) == row[n - 1])
            for p, row in FUBINI_TABLE.items() for n in range(1, 8)
        )

    def eigen_prefix():
        return eigensequence(7) == EIGENSEQUENCE_PREFIX, ""

    def fixed_point():
        # row 0 maps C_0 = 0 to 0, not to the seed C_1 = 1
        c = eigensequence(n_max + 1)
        return stirling_transform(list(c[:-1]))[1:] == list(c[2:]), "rows n >= 1"

    return {
        "bell.cesaro_integral": cesaro,
        "bell.dobinski_sum": dobinski,
        "bell.published_table": bell_table,
        "eulerian.definition": eulerian_identity(check_definition, EULERIAN_POINTS),
        "eulerian.egf": eulerian_egf,
        "eulerian.identity_1": eulerian_identity(check_identity_1, None),
        "eulerian.identity_3": eulerian_identity(check_identity_3, EULERIAN_POINTS),
        "eulerian.identity_4": eulerian_identity(check_identity_4, EULERIAN_POINTS),
        "fubini.egf": fubini_egf,
        "fubini.falling_factorial_map": falling_factorial_map,
        "fubini.geometric_sum": geometric_sum,
        "fubini.geometric_sum_index_diagnostic": geometric_sum_index_diagnostic,
        "fubini.published_table": fubini_table,
        "stirling.column_egf": column_egf,
        "stirling.explicit_formula": explicit_formula,
        "stirling.inverse": inverse,
        "stirling.semigroup": semigroup,
        "transform.binomial_identity": lambda: (check_binomial_identity(n_max), ""),
        "transform.egf_ode": lambda: (check_egf_ode(n_max), ""),
        "transform.egf_ode_second_derivative": lambda: (check_egf_ode(n_max, 2), ""),
        "transform.fixed_point": fixed_point,
        "transform.shift_recurrence": lambda: (check_shift_recurrence(n_max), ""),
        "transform.published_prefix": eigen_prefix,
    }


def run_verification(max_n: int, max_p: int, tol: float = 1e-10,
                     quad_points: int = 512) -> list[CheckResult]:
    results = []
    for name, check in sorted(build_checks(max_n, max_p, tol, quad_points).items()):
        try:
            passed, detail = check()
        except (ArithmeticError, ValueError, RuntimeError) as exc:
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, bool(passed), detail))
    return results
