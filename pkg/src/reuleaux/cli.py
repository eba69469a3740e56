"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 validation failure, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import document
from .approximation import approximate
from .errors import ReuleauxError
from .measures import area, measure
from .reduction import descend_to_triangle, reduce_once
from .shapes import disk, minkowski_combine, perturbed_circle, regular_reuleaux, reuleaux_triangle
from .support import validate_convexity, validate_width
from .svg import render_svg

EXIT_OK, EXIT_USAGE, EXIT_INVALID, EXIT_NUMERIC = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _term(text: str) -> tuple[int, float, float]:
    try:
        k, a, b = text.split(":")
        return int(k), float(a), float(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected K:A:B, got {text!r}") from None


def _angles(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated angles, got {text!r}") from None


def _emit(shape, out: str | None) -> None:
    text = document.serialize(shape)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    if args.family == "disk":
        shape = disk(tuple(args.center))
    elif args.family == "triangle":
        shape = reuleaux_triangle()
    elif args.family == "regular":
        shape = regular_reuleaux(args.sides)
    elif args.family == "perturbed":
        shape = perturbed_circle(args.terms, args.delta)
    else:
        shape = minkowski_combine(document.load(args.a), document.load(args.b), args.lam)
    _emit(shape, args.output)
    return EXIT_OK


def cmd_validate(args) -> int:
    shape = document.load(args.file)
    width = validate_width(shape)
    convex = validate_convexity(shape)
    print(width)
    print(convex)
    ok = width.passed and convex.passed
    print("valid" if ok else "INVALID")
    return EXIT_OK if ok else EXIT_INVALID


def cmd_measure(args) -> int:
    rep = measure(document.load(args.file), grid=args.grid)
    rows = rep.rows()
    w = max(len(k) for k, _ in rows)
    for k, v in rows:
        print(f"{k:<{w}}  {v}")
    return EXIT_OK


def cmd_approx(args) -> int:
    result = approximate(document.load(args.file), args.eps)
    plan = result.plan
    print(f"eps               {args.eps:g}")
    print(f"delta             {plan.delta:.6g}")
    print(f"partition n       {plan.n}")
    print(f"vertices          {result.polygon.n_vertices}")
    print(f"sup |h - h_eps|   {result.sup_h_error:.6e}")
    print(f"sup |h' - h_eps'| {result.sup_h_prime_error:.6e}")
    if args.output:
        document.save(result.polygon, args.output)
    return EXIT_OK


def cmd_reduce(args) -> int:
    polygon = document.load(args.file)
    if not hasattr(polygon, "vertices"):
        raise document.DocumentError("reduce needs a reuleaux_polygon document")
    if args.to_triangle:
        trace = descend_to_triangle(polygon)
        polygons, areas = trace.polygons, trace.areas
    else:
        reduced, _ = reduce_once(polygon)
        polygons = [polygon, reduced]
        areas = [area(p) for p in polygons]
    for step, (p, a) in enumerate(zip(polygons, areas)):
        print(f"step {step}: N={p.n_vertices:<5d} area={a:.15g}")
    if args.output:
        document.save(polygons[-1], args.output)
    return EXIT_OK


def cmd_render(args) -> int:
    svg = render_svg(document.load(args.file), samples=args.samples, support_angles=args.support_lines)
    Path(args.output).write_text(svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="reuleaux", description="Curves of constant width via support functions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="generate a shape document")
    fam = gen.add_subparsers(dest="family", required=True, parser_class=_Parser)
    for name in ("disk", "triangle", "regular", "perturbed", "combine"):
        p = fam.add_parser(name)
        p.add_argument("-o", "--output")
        if name == "disk":
            p.add_argument("--center", nargs=2, type=float, default=[0.0, 0.0], metavar=("X", "Y"))
        elif name == "regular":
            p.add_argument("--sides", type=int, required=True)
        elif name == "perturbed":
            p.add_argument("--delta", type=float, required=True)
            p.add_argument("--terms", type=_term, nargs="+", required=True, metavar="K:A:B")
        elif name == "combine":
            p.add_argument("a")
            p.add_argument("b")
            p.add_argument("--lambda", dest="lam", type=float, required=True)
    gen.set_defaults(func=cmd_gen)

    p = sub.add_parser("validate", help="check width and convexity")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("measure", help="perimeter, area and curvature range")
    p.add_argument("file")
    p.add_argument("--grid", type=int, default=65536)
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("approx", help="approximate by a Reuleaux polygon")
    p.add_argument("file")
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("reduce", help="remove two vertices (or descend to a triangle)")
    p.add_argument("file")
    p.add_argument("--to-triangle", action="store_true")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("render", help="draw as SVG")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--samples", type=int, default=720)
    p.add_argument("--support-lines", type=_angles, default=[], metavar="T1,T2,...")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ReuleauxError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
