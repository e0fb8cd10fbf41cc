"""``stirling-powers`` command line.

    stirling-powers table --family bell -p 1..5 --n-max 7 --format markdown
    stirling-powers verify --max-n 10 --max-p 3

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .higher_bell import bell_polynomial
from .higher_eulerian import eulerian_matrix, eulerian_polynomial
from .higher_fubini import fubini_polynomial
from .stirling_core import matrix_power
from .stirling_transform import eigensequence
from .verification import run_verification

FAMILIES = ("stirling", "bell", "fubini", "eulerian", "eigenseq")
FORMATS = ("json", "csv", "markdown")
DEFAULT_N_CAP = 200
DEFAULT_P_CAP = 16


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class TableRequest:
    family: str
    p: tuple[int, ...]
    n_max: int
    x: Fraction | None = None
    n_cap: int = DEFAULT_N_CAP
    p_cap: int = DEFAULT_P_CAP

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise UsageError(f"unknown family {self.family!r}")
        if not 0 <= self.n_max <= self.n_cap:
            raise UsageError(f"n-max must lie in [0, {self.n_cap}] (cap {self.n_cap})")
        if self.family == "eigenseq":
            return
        if not self.p:
            raise UsageError("-p is required")
        for p in self.p:
            if abs(p) > self.p_cap:
                raise UsageError(f"|p| = {abs(p)} exceeds the cap {self.p_cap}")
        lowest = min(self.p)
        if self.family == "bell" and lowest < 0:
            raise UsageError("bell is defined for p >= 0")
        if self.family in ("fubini", "eulerian") and lowest < 1:
            raise UsageError(f"{self.family} is defined for p >= 1")
        if self.family == "stirling" and self.x is not None:
            raise UsageError("--x is not meaningful for the stirling family; use bell")
        if self._is_triangle() and len(self.p) != 1:
            raise UsageError(f"{self.family} triangles take a single p")

    def _is_triangle(self) -> bool:
        return self.family == "stirling" or (self.family == "eulerian" and self.x is None)


def parse_p(text: str) -> tuple[int, ...]:
    """``"3"`` or an inclusive range ``"1..5"``."""
    try:
        if ".." in text:
            lo, hi = (int(part) for part in text.split("..", 1))
            if hi < lo:
                raise ValueError
            return tuple(range(lo, hi + 1))
        return (int(text),)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or A..B range, got {text!r}")


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected NUM or NUM/DEN, got {text!r}")


def format_number(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def table_rows(req: TableRequest) -> list[list]:
    """Rectangular rows for the request; triangles are padded with zeros."""
    req.validate()
    n_range = range(req.n_max + 1)
    if req.family == "eigenseq":
        return [list(eigensequence(req.n_max))]
    if req.family == "stirling":
        return matrix_power(req.p[0], req.n_max).to_square()
    if req.family == "eulerian" and req.x is None:
        return eulerian_matrix(req.p[0], req.n_max).to_square()
    x = Fraction(1) if req.x is None else req.x
    poly = {"bell": bell_polynomial, "fubini": fubini_polynomial,
            "eulerian": eulerian_polynomial}[req.family]
    return [[poly(p, n)(x) for n in n_range] for p in req.p]


def render(req: TableRequest, rows: list[list], fmt: str) -> str:
    cells = [[format_number(v) for v in row] for row in rows]
    if fmt == "json":
        if req.family == "eigenseq":
            p = None
        else:
            p = req.p[0] if len(req.p) == 1 else list(req.p)
        return json.dumps({"family": req.family, "p": p, "rows": cells})
    if fmt == "csv":
        return "\n".join(",".join(row) for row in cells)
    if fmt == "markdown":
        return _markdown(req, cells)
    raise UsageError(f"unknown format {fmt!r}")


def _markdown(req: TableRequest, cells: list[list[str]]) -> str:
    width = len(cells[0]) if cells else 0
    if req.family == "eigenseq":
        corner, labels = "n", ["C_n"]
    elif req._is_triangle():
        corner, labels = "n \\ m", [str(n) for n in range(len(cells))]
    else:
        corner, labels = "p \\ n", [str(p) for p in req.p]
    lines = [
        "| " + " | ".join([corner] + [str(n) for n in range(width)]) + " |",
        "|" + "---|" * (width + 1),
    ]
    for label, row in zip(labels, cells):
        lines.append("| " + " | ".join([label] + row) + " |")
    return "\n".join(lines)


def cmd_table(req: TableRequest, fmt: str = "json") -> str:
    return render(req, table_rows(req), fmt)


def parse_table_json(text: str) -> list[list[Fraction]]:
    """Inverse of the JSON rendering, for round-tripping."""
    data = json.loads(text)
    return [[Fraction(v) for v in row] for row in data["rows"]]


def cmd_verify(max_n: int, max_p: int, tol: float = 1e-10, quad_points: int = 512,
               out=None) -> int:
    out = out or sys.stdout
    results = run_verification(max_n, max_p, tol, quad_points)
    for r in results:
        print(r.line(), file=out)
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stirling-powers",
        description="Powers of Stirling matrices and higher order Bell, Fubini and Eulerian numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="print a triangle, table or sequence")
    table.add_argument("--family", choices=FAMILIES, required=True)
    table.add_argument("-p", type=parse_p, default=(), metavar="P|A..B")
    table.add_argument("--n-max", type=int, required=True)
    table.add_argument("--x", type=parse_rational, default=None, metavar="NUM/DEN",
                       help="evaluate the polynomials at this rational point")
    table.add_argument("--format", choices=FORMATS, default="json")
    table.add_argument("--n-cap", type=int, default=DEFAULT_N_CAP)
    table.add_argument("--p-cap", type=int, default=DEFAULT_P_CAP)

    verify = sub.add_parser("verify", help="run every identity check")
    verify.add_argument("--max-n", type=int, default=10)
    verify.add_argument("--max-p", type=int, default=3)
    verify.add_argument("--tol", type=float, default=1e-10,
                        help="truncation tolerance for the numeric sums")
    verify.add_argument("--quad-points", type=int, default=512)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "table":
        req = TableRequest(args.family, args.p, args.n_max, args.x, args.n_cap, args.p_cap)
        try:
            text = cmd_table(req, args.format)
        except UsageError as exc:
            parser.error(str(exc))
        print(text)
        return 0
    if args.max_n < 0 or args.max_p < 1:
        parser.error("--max-n must be >= 0 and --max-p >= 1")
    return cmd_verify(args.max_n, args.max_p, args.tol, args.quad_points)


if __name__ == "__main__":
    sys.exit(main())
