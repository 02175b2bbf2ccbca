"""Command line surface: decomposition, orbits with CSV/SVG output, classification.

Exit codes: 0 on success, 2 on input or precondition violations, 3 on I/O
failures. Angles are radians unless --degrees is given. CSV uses the schema
n,x,y with %.17g decimal output and LF line endings.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .core import (
    NotOrthogonalError,
    NotSymmetricError,
    NotTraceZeroError,
    Point2,
    Tolerance,
    classify_orthogonal,
    decompose,
    matrix_from_params,
)
from .dynamics import (
    ConvergesTo,
    DivergesToInfinity,
    Finite,
    Topology,
    classify_convergence,
    classify_orbit_cardinality,
    orbit,
    stable_set,
)
from .frobenius import SymMatN, frobenius_inner, is_in_psym, sym0_basis
from .geometry import AxisLine, Direction, ReflectScale, compose_rotation_reflection, rotation_matrix

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_IO = 3

MAX_ITERS = 1_000_000


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _rad(value: float, degrees: bool) -> float:
    return math.radians(value) if degrees else value


def _flat4(m) -> list[float]:
    return [float(m[0, 0]), float(m[0, 1]), float(m[1, 0]), float(m[1, 1])]


def _matrix_text(m) -> str:
    return "[[{}, {}], [{}, {}]]".format(*(_fmt(v) for v in _flat4(m)))


def _cardinality_text(card) -> str:
    return f"Finite({card.size})" if isinstance(card, Finite) else "Infinite"


def _cardinality_json(card) -> dict:
    if isinstance(card, Finite):
        return {"kind": "Finite", "size": card.size}
    return {"kind": "Infinite"}


def _verdict_text(v) -> str:
    if isinstance(v, ConvergesTo):
        return f"ConvergesTo ({_fmt(v.limit.x)}, {_fmt(v.limit.y)})"
    if isinstance(v, DivergesToInfinity):
        return "DivergesToInfinity"
    return "NotConvergent"


def _verdict_json(v) -> dict:
    if isinstance(v, ConvergesTo):
        return {"kind": "ConvergesTo", "limit": [v.limit.x, v.limit.y]}
    if isinstance(v, DivergesToInfinity):
        return {"kind": "DivergesToInfinity"}
    return {"kind": "NotConvergent"}


def orbit_csv(points) -> str:
    """CSV text for an orbit trace: header n,x,y then one row per point."""
    lines = ["n,x,y"]
    for i, p in enumerate(points):
        lines.append(f"{i},{_fmt(p.x)},{_fmt(p.y)}")
    return "\n".join(lines) + "\n"


def orbit_svg(points, axis: AxisLine, size: int = 600) -> str:
    """SVG 1.1 document: orbit polyline plus the reflection axis.

    The viewport is fixed at size x size and scaled to the orbit bounding
    box with 10 percent padding; points are joined in iteration order.
    """
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    cx = 0.5 * (min(xs) + max(xs))
    cy = 0.5 * (min(ys) + max(ys))
    half = 0.5 * max(max(xs) - min(xs), max(ys) - min(ys))
    half = half * 1.1 if half > 0.0 else 1.0
    scale = (size / 2.0) / half

    def to_screen(x: float, y: float) -> tuple[float, float]:
        return (size / 2.0 + (x - cx) * scale, size / 2.0 - (y - cy) * scale)

    reach = math.hypot(cx, cy) + 3.0 * half
    ax0 = to_screen(-reach * math.cos(axis.phi), -reach * math.sin(axis.phi))
    ax1 = to_screen(reach * math.cos(axis.phi), reach * math.sin(axis.phi))
    poly = " ".join("{:.3f},{:.3f}".format(*to_screen(p.x, p.y)) for p in points)
    dots = "\n".join(
        '  <circle cx="{:.3f}" cy="{:.3f}" r="3" fill="#1f4e9c"/>'.format(*to_screen(p.x, p.y))
        for p in points
    )
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">\n'
        f'  <line x1="{ax0[0]:.3f}" y1="{ax0[1]:.3f}" x2="{ax1[0]:.3f}" y2="{ax1[1]:.3f}" '
        'stroke="#999999" stroke-width="1"/>\n'
        f'  <polyline points="{poly}" fill="none" stroke="#1f4e9c" stroke-width="1.5"/>\n'
        f"{dots}\n"
        "</svg>\n"
    )


def _write_text(path: str, text: str) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(text)


def cmd_decompose(args) -> int:
    tol = Tolerance(args.tol)
    tz = decompose(np.array(args.entries).reshape(2, 2), tol)
    rebuilt = tz.matrix()
    if args.json:
        print(
            json.dumps(
                {
                    "lambda": tz.lam,
                    "theta": tz.theta,
                    "axis": tz.axis_angle,
                    "matrix": _flat4(rebuilt),
                }
            )
        )
    else:
        print(f"lambda = {_fmt(tz.lam)}")
        print(f"theta = {_fmt(tz.theta)}")
        print(f"axis = {_fmt(tz.axis_angle)}")
        print(f"matrix = {_matrix_text(rebuilt)}")
    return EXIT_OK


def cmd_build(args) -> int:
    if (args.theta is None) == (args.axis is None):
        raise ValueError("give exactly one of --theta or --axis")
    if args.theta is not None:
        theta = _rad(args.theta, args.degrees)
    else:
        theta = 2.0 * _rad(args.axis, args.degrees)
    m = matrix_from_params(args.lam, theta)
    tz = decompose(m, Tolerance(args.tol))
    if args.json:
        print(
            json.dumps(
                {
                    "lambda": tz.lam,
                    "theta": tz.theta,
                    "axis": tz.axis_angle,
                    "matrix": _flat4(m),
                }
            )
        )
    else:
        print(f"lambda = {_fmt(tz.lam)}")
        print(f"theta = {_fmt(tz.theta)}")
        print(f"axis = {_fmt(tz.axis_angle)}")
        print(f"matrix = {_matrix_text(m)}")
    return EXIT_OK


def _orbit_map(args, tol: Tolerance) -> tuple[float, float]:
    # Returns (lam, axis angle); --from-matrix routes through decompose so a
    # printed decomposition feeds back into the identical trajectory.
    if args.from_matrix is not None:
        if args.lam is not None or args.axis is not None:
            raise ValueError("--from-matrix excludes --lambda/--axis")
        tz = decompose(np.array(args.from_matrix).reshape(2, 2), tol)
        return tz.lam, tz.axis_angle
    if args.lam is None or args.axis is None:
        raise ValueError("need both --lambda and --axis (or --from-matrix)")
    return args.lam, _rad(args.axis, args.degrees)


def cmd_orbit(args) -> int:
    tol = Tolerance(args.tol)
    if not 1 <= args.iters <= MAX_ITERS:
        raise ValueError(f"--iters must be between 1 and {MAX_ITERS}")
    lam, phi = _orbit_map(args, tol)
    m = ReflectScale(lam, AxisLine(phi))
    start = Point2(args.x, args.y)
    rec = orbit(start, m, args.iters, tol)
    csv_text = orbit_csv(rec.points)
    if args.out:
        _write_text(args.out, csv_text)
    if args.svg:
        _write_text(args.svg, orbit_svg(rec.points, m.axis))
    conv_d = classify_convergence(start, m, Topology.DISCRETE, tol).verdict
    conv_u = classify_convergence(start, m, Topology.USUAL, tol).verdict
    if args.json:
        record = {
            "start": [start.x, start.y],
            "lambda": lam,
            "axis": phi,
            "iters": args.iters,
            "cardinality": _cardinality_json(rec.cardinality),
            "convergence": {
                "Discrete": _verdict_json(conv_d),
                "Usual": _verdict_json(conv_u),
            },
            "csv": args.out,
            "svg": args.svg,
        }
        if not args.out:
            record["points"] = [[i, p.x, p.y] for i, p in enumerate(rec.points)]
        print(json.dumps(record))
    else:
        if not args.out:
            sys.stdout.write(csv_text)
        print(f"cardinality = {_cardinality_text(rec.cardinality)}")
        print(f"convergence[Discrete] = {_verdict_text(conv_d)}")
        print(f"convergence[Usual] = {_verdict_text(conv_u)}")
    return EXIT_OK


def cmd_classify(args) -> int:
    tol = Tolerance(args.tol)
    phi = _rad(args.axis, args.degrees)
    m = ReflectScale(args.lam, AxisLine(phi))
    start = Point2(args.x, args.y)
    card = classify_orbit_cardinality(start, m, tol)
    verdict = stable_set(start, args.lam)
    conv_d = classify_convergence(start, m, Topology.DISCRETE, tol).verdict
    conv_u = classify_convergence(start, m, Topology.USUAL, tol).verdict
    if args.json:
        print(
            json.dumps(
                {
                    "start": [start.x, start.y],
                    "lambda": args.lam,
                    "axis": phi,
                    "cardinality": _cardinality_json(card),
                    "stable_set": verdict.value,
                    "convergence": {
                        "Discrete": _verdict_json(conv_d),
                        "Usual": _verdict_json(conv_u),
                    },
                }
            )
        )
    else:
        print(f"cardinality = {_cardinality_text(card)}")
        print(f"stable_set = {verdict.value}")
        print(f"convergence[Discrete] = {_verdict_text(conv_d)}")
        print(f"convergence[Usual] = {_verdict_text(conv_u)}")
    return EXIT_OK


def cmd_compose(args) -> int:
    alpha = _rad(args.alpha, args.degrees)
    theta = _rad(args.theta, args.degrees)
    direction = Direction.CLOCKWISE if args.cw else Direction.ANTICLOCKWISE
    gamma = compose_rotation_reflection(alpha, theta, direction)
    product = rotation_matrix(alpha, direction) @ matrix_from_params(1.0, theta)
    target = matrix_from_params(1.0, gamma)
    residual = float(np.max(np.abs(product - target)))
    verified = residual <= 1e-12
    if args.json:
        print(
            json.dumps(
                {
                    "alpha": alpha,
                    "theta": theta,
                    "direction": direction.value,
                    "gamma": gamma,
                    "product": _flat4(product),
                    "reflection": _flat4(target),
                    "residual": residual,
                    "verified": verified,
                }
            )
        )
    else:
        print(f"gamma = {_fmt(gamma)}")
        print(f"product = {_matrix_text(product)}")
        print(f"reflection = {_matrix_text(target)}")
        print(f"residual = {_fmt(residual)}")
        print(f"verified = {str(verified).lower()}")
    return EXIT_OK


def cmd_psym(args) -> int:
    tol = Tolerance(args.tol)
    with open(args.file) as fh:
        tokens = fh.read().split()
    if not tokens:
        raise ValueError("empty matrix file")
    try:
        n = int(tokens[0])
    except ValueError:
        raise ValueError("first token must be the matrix dimension n") from None
    if not 2 <= n <= 64:
        raise ValueError("n must be between 2 and 64")
    if len(tokens) != 1 + n * n:
        raise ValueError(f"expected {n * n} entries after the dimension, got {len(tokens) - 1}")
    values = [float(t) for t in tokens[1:]]
    a = SymMatN.from_matrix(np.array(values).reshape(n, n), tol)
    member = is_in_psym(a, tol)
    if member:
        c = float(np.trace(a.to_matrix())) / n
        if args.json:
            print(json.dumps({"member": True, "n": n, "c": c}))
        else:
            print("member = true")
            print(f"c = {_fmt(c)}")
        return EXIT_OK
    thresh = tol.eps * (1.0 + a.frobenius_norm())
    witness = None
    value = 0.0
    for basis_elem in sym0_basis(n):
        value = frobenius_inner(basis_elem, a)
        if abs(value) > thresh:
            witness = basis_elem
            break
    assert witness is not None
    flat = [float(v) for v in witness.to_matrix().ravel()]
    if args.json:
        print(json.dumps({"member": False, "n": n, "witness": flat, "trace": value}))
    else:
        print("member = false")
        print("witness = [{}]".format(", ".join(_fmt(v) for v in flat)))
        print(f"trace = {_fmt(value)}")
    return EXIT_OK


def cmd_ortho_classify(args) -> int:
    tol = Tolerance(args.tol)
    o = classify_orthogonal(np.array(args.entries).reshape(2, 2), tol)
    if args.json:
        print(json.dumps({"variant": o.variant.value, "angle": o.angle}))
    else:
        print(f"variant = {o.variant.value}")
        print(f"angle = {_fmt(o.angle)}")
    return EXIT_OK


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tol", type=float, default=1e-9, help="comparison tolerance (default 1e-9)")
    p.add_argument("--json", action="store_true", help="emit one JSON record instead of text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symdyn",
        description="Scaled planar reflections: decomposition, orbits, classification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="canonical (lambda, theta) of a trace-zero symmetric matrix")
    p.add_argument("entries", type=float, nargs=4, metavar="E", help="matrix entries, row-major")
    _add_common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("build", help="matrix from a scale and an angle")
    p.add_argument("lam", type=float, help="scale")
    p.add_argument("--theta", type=float, help="matrix angle")
    p.add_argument("--axis", type=float, help="reflection-axis angle (half the matrix angle)")
    p.add_argument("--degrees", action="store_true", help="angles are degrees")
    _add_common(p)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("orbit", help="iterate the map and emit CSV (and optional SVG)")
    p.add_argument("x", type=float, help="start x")
    p.add_argument("y", type=float, help="start y")
    p.add_argument("--lambda", dest="lam", type=float, default=None, help="scale")
    p.add_argument("--axis", type=float, default=None, help="reflection-axis angle")
    p.add_argument(
        "--from-matrix",
        dest="from_matrix",
        type=float,
        nargs=4,
        metavar="E",
        default=None,
        help="take the map from a trace-zero symmetric matrix, row-major",
    )
    p.add_argument("--iters", type=int, default=64, help="iteration count (1..1000000, default 64)")
    p.add_argument("--out", default=None, help="CSV output path (default: stdout)")
    p.add_argument("--svg", default=None, help="SVG output path")
    p.add_argument("--degrees", action="store_true", help="angles are degrees")
    _add_common(p)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("classify", help="orbit cardinality, stable set, and convergence verdicts")
    p.add_argument("x", type=float, help="start x")
    p.add_argument("y", type=float, help="start y")
    p.add_argument("--lambda", dest="lam", type=float, required=True, help="scale")
    p.add_argument("--axis", type=float, required=True, help="reflection-axis angle")
    p.add_argument("--degrees", action="store_true", help="angles are degrees")
    _add_common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("compose", help="rotation composed with a reflection, as one reflection")
    p.add_argument("--alpha", type=float, required=True, help="rotation angle")
    p.add_argument("--theta", type=float, required=True, help="reflection matrix angle")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--cw", action="store_true", help="clockwise rotation")
    group.add_argument("--acw", action="store_true", help="anticlockwise rotation")
    p.add_argument("--degrees", action="store_true", help="angles are degrees")
    _add_common(p)
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("psym", help="test the trace pairing of a symmetric matrix file")
    p.add_argument("file", help="whitespace-separated: n then n*n entries, row-major")
    _add_common(p)
    p.set_defaults(func=cmd_psym)

    p = sub.add_parser("ortho-classify", help="classify an orthogonal matrix")
    p.add_argument("entries", type=float, nargs=4, metavar="E", help="matrix entries, row-major")
    _add_common(p)
    p.set_defaults(func=cmd_ortho_classify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (None, 0) else int(exc.code)
    try:
        return args.func(args)
    except (NotSymmetricError, NotTraceZeroError, NotOrthogonalError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def cli_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    cli_main()
