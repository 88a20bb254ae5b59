"""Command-line front end: ``fermatpoly {monotone,solve,vieta,quotient}``."""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from fractions import Fraction

from .cubic_vieta import (
    DEFAULT_TOL,
    InvariantViolation,
    NoRealTriple,
    classify,
    depress,
    discriminant_value,
    solve_cubic,
    vieta_expand,
    Cubic,
)
from .exact_arith import (
    DEFAULT_MAX_DEGREE,
    DegreeLimitError,
    PolynomialSyntaxError,
    as_rational,
    format_polynomial,
    format_rational,
    parse_polynomial,
)
from .fermat_analysis import fermat_derivative, fermat_quotient, monotonicity_intervals
from .root_oracle import NEG_INF, POS_INF, Approx, Exact

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INTERNAL = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # Let "-3", "-1/2" and "-t^2 + 1" through as positionals.
        self._negative_number_matcher = re.compile(r"^-\s*[\d.t]")

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def rational_json(r: Fraction) -> str:
    return f"{r.numerator}/{r.denominator}"


def decimal_places(tol: Fraction) -> int:
    return max(1, math.ceil(math.log10(1 / tol)))


def decimal_str(x: Fraction, places: int) -> str:
    scaled = round(x * 10**places)
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


class Formatter:
    def __init__(self, tol: Fraction):
        self.places = decimal_places(tol)

    def value_json(self, v):
        if v is NEG_INF or v is POS_INF:
            return str(v)
        if isinstance(v, Exact):
            return rational_json(v.value)
        if isinstance(v, Approx):
            return {
                "decimal": decimal_str(v.midpoint, self.places),
                "bracket": [rational_json(v.lo), rational_json(v.hi)],
            }
        return rational_json(as_rational(v))

    def value_text(self, v) -> str:
        if v is NEG_INF or v is POS_INF:
            return str(v)
        if isinstance(v, Exact):
            return format_rational(v.value)
        if isinstance(v, Approx):
            return decimal_str(v.midpoint, self.places)
        return format_rational(as_rational(v))


def _parse_rational_arg(name: str, text: str) -> Fraction:
    try:
        return as_rational(text)
    except ValueError:
        raise UsageError(f"{name}: not a rational number: {text!r}") from None


def _parse_poly_arg(text: str, max_degree: int):
    try:
        return parse_polynomial(text, max_degree=max_degree)
    except (PolynomialSyntaxError, DegreeLimitError) as exc:
        raise UsageError(f"cannot parse polynomial {text!r}: {exc}") from None


def cmd_monotone(poly_text: str, tol: Fraction, max_degree: int = DEFAULT_MAX_DEGREE):
    f = _parse_poly_arg(poly_text, max_degree)
    if f.is_constant():
        raise UsageError("monotone needs a polynomial of degree >= 1")
    fmt = Formatter(tol)
    dec = monotonicity_intervals(f, tol)
    record = {
        "command": "monotone",
        "input": {
            "polynomial": format_polynomial(f),
            "coefficients": [rational_json(c) for c in f.coefficients],
        },
        "result": {
            "segments": [
                {
                    "left": fmt.value_json(s.left),
                    "right": fmt.value_json(s.right),
                    "direction": str(s.direction),
                }
                for s in dec.segments
            ],
        },
        "exact_flags": {"boundaries": [isinstance(b, Exact) for b in dec.boundaries]},
    }
    parts = []
    for s in dec.segments:
        left = "(-inf" if s.left is NEG_INF else f"[{fmt.value_text(s.left)}"
        right = "+inf)" if s.right is POS_INF else f"{fmt.value_text(s.right)}]"
        parts.append(f"{left},{right} {s.direction}")
    lines = ["; ".join(parts)]
    for b in dec.boundaries:
        if isinstance(b, Approx):
            lines.append(
                f"boundary {fmt.value_text(b)} in [{format_rational(b.lo)}, {format_rational(b.hi)}]"
            )
    return record, "\n".join(lines)


def cmd_solve(a: str, b: str, c: str, tol: Fraction):
    cub = Cubic(_parse_rational_arg("a", a), _parse_rational_arg("b", b), _parse_rational_arg("c", c))
    fmt = Formatter(tol)
    dep = depress(cub)
    cls = classify(cub)
    sol = solve_cubic(cub, tol)
    result = {
        "classification": str(cls.kind),
        "D": rational_json(cls.discriminant),
        "depressed": {
            "p": rational_json(dep.p),
            "q": rational_json(dep.q),
            "shift": rational_json(dep.shift),
        },
    }
    flags = {"D": True}
    lines = [f"classification: {cls.kind}", f"D = {format_rational(cls.discriminant)}"]
    if isinstance(sol, NoRealTriple):
        result["roots"] = None
        flags["roots"] = []
        lines.append("no real triple (D > 0)")
    else:
        result["roots"] = [fmt.value_json(r) for r in sol.roots]
        flags["roots"] = [isinstance(r, Exact) for r in sol.roots]
        tags = ", ".join(
            f"{fmt.value_text(r)}{'' if isinstance(r, Exact) else ' (approx)'}" for r in sol.roots
        )
        lines.append(f"roots: {tags}")
    record = {
        "command": "solve",
        "input": {"a": rational_json(cub.a), "b": rational_json(cub.b), "c": rational_json(cub.c)},
        "result": result,
        "exact_flags": flags,
    }
    return record, "\n".join(lines)


def cmd_vieta(x: str, y: str, z: str):
    xs = [_parse_rational_arg(n, v) for n, v in zip("xyz", (x, y, z))]
    cub = vieta_expand(*xs)
    d = discriminant_value(depress(cub))
    if d > 0:
        raise InvariantViolation("cubic with real roots has positive discriminant")
    record = {
        "command": "vieta",
        "input": {n: rational_json(v) for n, v in zip("xyz", xs)},
        "result": {
            "a": rational_json(cub.a),
            "b": rational_json(cub.b),
            "c": rational_json(cub.c),
            "D": rational_json(d),
        },
        "exact_flags": {"a": True, "b": True, "c": True, "D": True},
    }
    text = (
        f"a={format_rational(cub.a)} b={format_rational(cub.b)} c={format_rational(cub.c)}\n"
        f"D = {format_rational(d)}"
    )
    return record, text


def cmd_quotient(poly_text: str, max_degree: int = DEFAULT_MAX_DEGREE):
    f = _parse_poly_arg(poly_text, max_degree)
    if f.is_constant():
        raise UsageError("quotient needs a polynomial of degree >= 1")
    phi = fermat_quotient(f)
    diag = fermat_derivative(f)
    record = {
        "command": "quotient",
        "input": {"polynomial": format_polynomial(f)},
        "result": {
            "quotient": str(phi),
            "terms": [[i, j, rational_json(c)] for (i, j), c in phi.sorted_terms()],
            "diagonal": format_polynomial(diag),
        },
        "exact_flags": {"quotient": True, "diagonal": True},
    }
    return record, f"phi(t1,t2) = {phi}\ndiagonal = {format_polynomial(diag)}"


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--tolerance", default=str(DEFAULT_TOL), help="bracket width for irrational values (default 1e-12)")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)

    parser = _Parser(prog="fermatpoly", description="Exact polynomial monotonicity and cubic root analysis.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("monotone", parents=[common], help="maximal intervals of strict monotonicity")
    p.add_argument("poly")
    p = sub.add_parser("solve", parents=[common], help="real x, y, z with the given symmetric values")
    for name in "abc":
        p.add_argument(name)
    p = sub.add_parser("vieta", parents=[common], help="symmetric values of three rationals")
    for name in "xyz":
        p.add_argument(name)
    p = sub.add_parser("quotient", parents=[common], help="difference quotient and its diagonal")
    p.add_argument("poly")
    return parser


def run(argv=None) -> tuple[int, str]:
    """Run the CLI and return (exit code, stdout text); errors go to stderr."""
    args = build_parser().parse_args(argv)
    try:
        tol = as_rational(args.tolerance)
        if tol <= 0:
            raise ValueError
    except ValueError:
        print(f"fermatpoly: error: invalid tolerance {args.tolerance!r}", file=sys.stderr)
        return EXIT_USAGE, ""
    try:
        if args.command == "monotone":
            record, text = cmd_monotone(args.poly, tol, args.max_degree)
        elif args.command == "solve":
            record, text = cmd_solve(args.a, args.b, args.c, tol)
        elif args.command == "vieta":
            record, text = cmd_vieta(args.x, args.y, args.z)
        else:
            record, text = cmd_quotient(args.poly, args.max_degree)
    except UsageError as exc:
        print(f"fermatpoly: error: {exc}", file=sys.stderr)
        return EXIT_USAGE, ""
    except AssertionError as exc:
        print(f"fermatpoly: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL, ""
    if args.format == "json":
        return EXIT_OK, json.dumps(record, indent=2)
    return EXIT_OK, text


def main(argv=None) -> int:
    code, out = run(argv)
    if out:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
