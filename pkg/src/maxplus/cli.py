"""Command-line front end.

Points on the command line and in point-set files are whitespace-separated
decimal coordinates; files hold one point per line with ``#`` comments.
Exit codes: 0 success, 1 domain/input error, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import approx, core, geodesic, hull, hyperspace, render, verify
from .core import Space
from .errors import DimensionMismatchError, DomainError, InputFormatError


def parse_point(text: str) -> np.ndarray:
    """Parse a whitespace-separated coordinate literal like "0 2.5"."""
    parts = text.split()
    if not parts:
        raise InputFormatError("empty point literal")
    coords = []
    for tok in parts:
        try:
            coords.append(float(tok))
        except ValueError:
            raise InputFormatError(f"not a number: {tok!r}") from None
    return np.asarray(coords)


def parse_points_file(path: str) -> np.ndarray:
    """Read a point-set file; raises InputFormatError with line/column info."""
    rows = []
    width = None
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0]
            if not line.strip():
                continue
            coords = []
            col = 1
            for tok in line.split():
                col = line.index(tok, col - 1) + 1
                try:
                    coords.append(float(tok))
                except ValueError:
                    raise InputFormatError(
                        f"{path}:{lineno}:{col}: not a number: {tok!r}",
                        line=lineno,
                        column=col,
                    ) from None
                col += len(tok)
            if width is None:
                width = len(coords)
            elif len(coords) != width:
                raise InputFormatError(
                    f"{path}:{lineno}:1: expected {width} coordinates, got {len(coords)}",
                    line=lineno,
                    column=1,
                )
            rows.append(coords)
    if not rows:
        raise InputFormatError(f"{path}: no points found")
    return np.asarray(rows)


def _fmtnum(v: float) -> str:
    return f"{v:.12g}"


def _space(args) -> Space:
    return Space(parse_point(args.unit), eps=args.eps)


def _scene(ctx, pts, args) -> render.Scene:
    if args.viewport is not None:
        vals = [float(t) for t in args.viewport.split()]
        if len(vals) != 4:
            raise InputFormatError("viewport needs 4 numbers: xmin xmax ymin ymax")
        viewport = tuple(vals)
    else:
        viewport = render.viewport_for(pts, pad=args.pad)
    return render.Scene(ctx, viewport, resolution=args.resolution)


def _write(path: str, text: str):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_dist(args) -> int:
    ctx = _space(args)
    print(_fmtnum(core.distance(ctx, parse_point(args.x), parse_point(args.y),
                                args.metric)))
    return 0


def cmd_norm(args) -> int:
    ctx = _space(args)
    print(_fmtnum(core.norm(ctx, parse_point(args.x), args.metric)))
    return 0


def cmd_member(args) -> int:
    ctx = _space(args)
    P = hull.Polytope(ctx, parse_points_file(args.gens))
    res = hull.member(P, parse_point(args.z))
    if res.inside:
        print("true " + " ".join(_fmtnum(t) for t in res.witness))
    else:
        print("false")
    return 0


def cmd_geodesic(args) -> int:
    ctx = _space(args)
    pts = [parse_point(t) for t in args.points]
    if len(pts) < 2:
        raise InputFormatError("geodesic needs at least two points")
    if args.output is None:
        if len(pts) != 2:
            raise InputFormatError("sample printing needs exactly two points")
        sp = geodesic.span(ctx, pts[0], pts[1])
        ts = np.union1d(
            np.linspace(sp.t_min, sp.t_max, args.samples),
            geodesic.breakpoints(ctx, sp),
        )
        for t in ts:
            p = geodesic.point_at(ctx, sp, float(t))
            print(_fmtnum(t) + "  " + " ".join(_fmtnum(v) for v in p))
        return 0
    scene = _scene(ctx, np.asarray(pts), args)
    if len(pts) == 2:
        layers = [render.axes_layer(scene), render.render_geodesic(scene, pts[0], pts[1])]
    else:
        layers = [render.render_extensions(scene, pts[0], pts[1:])]
    _write(args.output, render.svg_document(scene, layers))
    return 0


def cmd_hull_svg(args) -> int:
    ctx = _space(args)
    P = hull.Polytope(ctx, parse_points_file(args.gens))
    scene = _scene(ctx, P.gens, args)
    _write(args.output, render.svg_document(scene, [render.render_polytope(scene, P)]))
    return 0


def cmd_ball_svg(args) -> int:
    ctx = _space(args)
    center = parse_point(args.center)
    if args.viewport is None and ctx.n == 2:
        r = args.radius
        corners = [
            (center[0] - 2 * r * ctx.u[0], center[1] - 2 * r * ctx.u[1]),
            (center[0] + 2 * r * ctx.u[0], center[1] + 2 * r * ctx.u[1]),
        ]
        scene = render.Scene(
            ctx,
            (corners[0][0], corners[1][0], corners[0][1], corners[1][1]),
            resolution=args.resolution,
        )
    else:
        scene = _scene(ctx, center.reshape(1, -1), args)
    _write(
        args.output,
        render.svg_document(scene, [render.render_ball(scene, center, args.radius)]),
    )
    return 0


def _compact_set(ctx, path, as_hull):
    pts = parse_points_file(path)
    if as_hull:
        return hull.Polytope(ctx, pts)
    return hyperspace.Cloud(ctx, pts)


def cmd_hausdorff(args) -> int:
    ctx = _space(args)
    k1 = _compact_set(ctx, args.set_a, args.hull_a)
    k2 = _compact_set(ctx, args.set_b, args.hull_b)
    print(_fmtnum(hyperspace.hausdorff(ctx, k1, k2, args.metric, seed=args.seed)))
    return 0


def cmd_hull_distance(args) -> int:
    ctx = _space(args)
    P = hull.Polytope(ctx, parse_points_file(args.gens))
    d = hyperspace.dist_point_set(ctx, parse_point(args.z), P, args.metric,
                                  seed=args.seed)
    print(_fmtnum(d))
    return 0


def cmd_fixpoint(args) -> int:
    ctx = _space(args)
    P = hull.Polytope(ctx, parse_points_file(args.gens))
    if args.map == "contraction":
        target = (
            parse_point(args.target)
            if args.target is not None
            else hull.hull_sample(P, 1, args.seed)[0]
        )
        f = approx.SelfMap.contraction(P, target, rate=args.rate)
    elif args.map == "perturb":
        f = approx.SelfMap.coordinate_perturb(P, args.amplitude, args.frequency)
    else:
        raise InputFormatError(f"unknown map kind {args.map!r}")
    res = approx.fixpoint_search(f, tol=args.tol, budget=args.budget, seed=args.seed)
    status = "found" if res.found else "not-found"
    print(
        f"{status} point {' '.join(_fmtnum(v) for v in res.point)} "
        f"residual {_fmtnum(res.residual)} evals {res.evals}"
    )
    return 0 if res.found else 1


def cmd_verify(args) -> int:
    names = set(args.only) if args.only else None
    results = verify.run_checks(seed=args.seed, trials=args.trials, names=names)
    width = max(len(name) for name, _, _ in results) + 2
    failures = 0
    for name, ok, detail in results:
        status = "pass" if ok else "FAIL"
        suffix = f"  ({detail})" if detail and not ok else ""
        print(f"{name:<{width}}{status}{suffix}")
        failures += 0 if ok else 1
    print(f"{failures} failed of {len(results)} checks")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="maxplus",
        description="Max-plus convexity toolkit: norms, geodesics, hulls, "
        "Hausdorff distances and SVG figures over a weighted unit.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--unit", required=True, help='unit vector, e.g. "1 1"')
    common.add_argument("--eps", type=float, default=1e-9,
                        help="comparison tolerance (default 1e-9)")

    drawing = argparse.ArgumentParser(add_help=False)
    drawing.add_argument("--viewport", default=None,
                         help='"xmin xmax ymin ymax" (default: fit contents)')
    drawing.add_argument("--resolution", type=float, default=64.0,
                         help="pixels per unit (default 64)")
    drawing.add_argument("--pad", type=float, default=1.0,
                         help="padding around auto viewport (default 1)")

    p = sub.add_parser("dist", parents=[common], help="distance between two points")
    p.add_argument("--metric", choices=core.METRICS, default="hu")
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(fn=cmd_dist)

    p = sub.add_parser("norm", parents=[common], help="norm of a point")
    p.add_argument("--metric", choices=core.METRICS, default="hu")
    p.add_argument("x")
    p.set_defaults(fn=cmd_norm)

    p = sub.add_parser("member", parents=[common],
                       help="hull membership with witness coefficients")
    p.add_argument("--gens", required=True, help="generator point-set file")
    p.add_argument("z")
    p.set_defaults(fn=cmd_member)

    p = sub.add_parser("geodesic", parents=[common, drawing],
                       help="print geodesic samples, or draw geodesics to SVG")
    p.add_argument("--samples", type=int, default=128)
    p.add_argument("-o", "--output", default=None,
                   help="SVG output path ('-' for stdout); omit to print samples")
    p.add_argument("points", nargs="+",
                   help="two points; more draw extensions from the first")
    p.set_defaults(fn=cmd_geodesic)

    p = sub.add_parser("hull-svg", parents=[common, drawing],
                       help="draw a max-plus polytope")
    p.add_argument("--gens", required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(fn=cmd_hull_svg)

    p = sub.add_parser("ball-svg", parents=[common, drawing],
                       help="draw a closed metric ball")
    p.add_argument("--center", required=True)
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(fn=cmd_ball_svg)

    p = sub.add_parser("hausdorff", parents=[common],
                       help="Hausdorff distance between two point sets")
    p.add_argument("--metric", choices=core.METRICS, default="hu")
    p.add_argument("--hull-a", action="store_true",
                   help="treat the first set as the hull of its points")
    p.add_argument("--hull-b", action="store_true",
                   help="treat the second set as the hull of its points")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("set_a")
    p.add_argument("set_b")
    p.set_defaults(fn=cmd_hausdorff)

    p = sub.add_parser("hull-distance", parents=[common],
                       help="distance from a point to a hull")
    p.add_argument("--metric", choices=core.METRICS, default="hu")
    p.add_argument("--gens", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("z")
    p.set_defaults(fn=cmd_hull_distance)

    p = sub.add_parser("fixpoint", parents=[common],
                       help="search a fixed point of a self-map of a hull")
    p.add_argument("--gens", required=True)
    p.add_argument("--map", choices=["contraction", "perturb"], default="contraction")
    p.add_argument("--target", default=None, help="contraction target point")
    p.add_argument("--rate", type=float, default=0.5)
    p.add_argument("--amplitude", type=float, default=0.2)
    p.add_argument("--frequency", type=float, default=1.0)
    p.add_argument("--tol", type=float, default=1e-3)
    p.add_argument("--budget", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_fixpoint)

    p = sub.add_parser("verify", help="run the named property suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--only", nargs="*", default=None,
                   help="restrict to these check names")
    p.set_defaults(fn=cmd_verify)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (DimensionMismatchError, DomainError, InputFormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
