"""Deterministic SVG rendering of 2-D scenes.

Regions are traced from a scalar field sampled on a pixel grid (marching
squares with linear interpolation along cell edges); geodesics are drawn as
exact polylines through their breakpoints.  Identical inputs produce
byte-identical SVG: floats are emitted at fixed precision and no timestamps,
randomness or unordered containers are involved.

Coordinates are mathematical (y up); the emitter flips to SVG's y-down pixel
frame.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple

import numpy as np

from .core import Space
from .errors import DimensionMismatchError
from .geodesic import breakpoints, point_at, span
from .hull import Polytope, member_defect

FILL = "#d6e4f5"
STROKE = "#2156a5"
AXIS = "#9db8d9"
MARK = "#111111"
EXTENSION_STROKES = ("#2156a5", "#a03c3c", "#3c7a46", "#8a6d1f")


@dataclass(frozen=True)
class Scene:
    """Drawing context: 2-D space, viewport in user units, pixels per unit."""

    ctx: Space
    viewport: Tuple[float, float, float, float]
    resolution: float = 64.0

    def __post_init__(self):
        if self.ctx.n != 2:
            raise DimensionMismatchError("only 2-D spaces are renderable")
        xmin, xmax, ymin, ymax = (float(v) for v in self.viewport)
        if not (xmin < xmax and ymin < ymax):
            raise ValueError("viewport must satisfy xmin < xmax and ymin < ymax")
        if not self.resolution > 0:
            raise ValueError("resolution must be positive")
        object.__setattr__(self, "viewport", (xmin, xmax, ymin, ymax))
        object.__setattr__(self, "resolution", float(self.resolution))

    @property
    def width_px(self) -> int:
        xmin, xmax, _, _ = self.viewport
        return max(1, int(round((xmax - xmin) * self.resolution)))

    @property
    def height_px(self) -> int:
        _, _, ymin, ymax = self.viewport
        return max(1, int(round((ymax - ymin) * self.resolution)))

    def to_px(self, p) -> Tuple[float, float]:
        xmin, xmax, ymin, ymax = self.viewport
        sx = self.width_px / (xmax - xmin)
        sy = self.height_px / (ymax - ymin)
        return ((p[0] - xmin) * sx, (ymax - p[1]) * sy)


def viewport_for(points, pad: float = 1.0) -> Tuple[float, float, float, float]:
    """Bounding box of the points, padded; always contains the origin axes pad."""
    arr = np.asarray(points, dtype=float).reshape(-1, 2)
    return (
        float(arr[:, 0].min() - pad),
        float(arr[:, 0].max() + pad),
        float(arr[:, 1].min() - pad),
        float(arr[:, 1].max() + pad),
    )


def _fmt(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


# ---------------------------------------------------------------------------
# Marching squares


def _segments(xs, ys, F, level):
    """Level-set segments per grid cell.

    F is indexed [ix, iy].  Corner bits: 1=(ix,iy), 2=(ix+1,iy),
    4=(ix+1,iy+1), 8=(ix,iy+1); a bit is set when the corner value is below
    the level.  Saddle cells (5, 10) are split by the cell-center average.
    """
    inside = F < level
    case = (
        inside[:-1, :-1].astype(np.int8)
        | (inside[1:, :-1] << 1)
        | (inside[1:, 1:] << 2)
        | (inside[:-1, 1:] << 3)
    )
    active = np.argwhere((case != 0) & (case != 15))

    pairs_for = {
        1: [(3, 0)],
        2: [(0, 1)],
        3: [(3, 1)],
        4: [(1, 2)],
        6: [(0, 2)],
        7: [(3, 2)],
        8: [(2, 3)],
        9: [(0, 2)],
        11: [(1, 2)],
        12: [(1, 3)],
        13: [(0, 1)],
        14: [(3, 0)],
    }

    segs = []
    for ix, iy in active:
        f00 = F[ix, iy]
        f10 = F[ix + 1, iy]
        f11 = F[ix + 1, iy + 1]
        f01 = F[ix, iy + 1]
        x0, x1 = xs[ix], xs[ix + 1]
        y0, y1 = ys[iy], ys[iy + 1]

        def cross(edge):
            if edge == 0:  # bottom
                s = (level - f00) / (f10 - f00)
                return (x0 + s * (x1 - x0), y0)
            if edge == 1:  # right
                s = (level - f10) / (f11 - f10)
                return (x1, y0 + s * (y1 - y0))
            if edge == 2:  # top
                s = (level - f01) / (f11 - f01)
                return (x0 + s * (x1 - x0), y1)
            s = (level - f00) / (f01 - f00)  # left
            return (x0, y0 + s * (y1 - y0))

        c = int(case[ix, iy])
        if c in (5, 10):
            center_inside = 0.25 * (f00 + f10 + f11 + f01) < level
            if c == 5:
                pairs = [(3, 2), (0, 1)] if center_inside else [(3, 0), (1, 2)]
            else:
                pairs = [(0, 3), (1, 2)] if center_inside else [(0, 1), (2, 3)]
        else:
            pairs = pairs_for[c]
        for ea, eb in pairs:
            segs.append((cross(ea), cross(eb)))
    return segs


def _chain(segs):
    """Join matching segment endpoints into polylines (closed loops repeat
    their first point at the end).

    Zero-length segments (contours passing exactly through a grid node emit
    them) are dropped first; they would create spurious junctions.
    """

    def key(p):
        return (round(p[0], 9), round(p[1], 9))

    segs = [(a, b) for a, b in segs if key(a) != key(b)]
    adj = defaultdict(list)
    for si, (a, b) in enumerate(segs):
        adj[key(a)].append((si, 0))
        adj[key(b)].append((si, 1))

    used = [False] * len(segs)
    paths = []
    for s0 in range(len(segs)):
        if used[s0]:
            continue
        used[s0] = True
        a, b = segs[s0]
        path = deque([a, b])
        for endpoint, push in ((b, path.append), (a, path.appendleft)):
            cur = endpoint
            while True:
                nxt = None
                for si, ei in adj[key(cur)]:
                    if not used[si]:
                        nxt = (si, ei)
                        break
                if nxt is None:
                    break
                si, ei = nxt
                used[si] = True
                cur = segs[si][1 - ei]
                push(cur)
                if key(cur) == key(path[0]) and push is path.append:
                    break
        paths.append(list(path))
    return paths


def trace_level(xs, ys, F, level: float) -> List[List[Tuple[float, float]]]:
    """Marching-squares contour of F at the level, as chained polylines."""
    return _chain(_segments(np.asarray(xs, float), np.asarray(ys, float),
                            np.asarray(F, float), float(level)))


def _perp_dist(p, a, b):
    ab = (b[0] - a[0], b[1] - a[1])
    ap = (p[0] - a[0], p[1] - a[1])
    denom = np.hypot(*ab)
    if denom == 0.0:
        return np.hypot(*ap)
    return abs(ab[0] * ap[1] - ab[1] * ap[0]) / denom


def _dp(pts, tol):
    if len(pts) <= 2:
        return list(pts)
    dists = [_perp_dist(p, pts[0], pts[-1]) for p in pts[1:-1]]
    imax = int(np.argmax(dists))
    if dists[imax] <= tol:
        return [pts[0], pts[-1]]
    k = imax + 1
    return _dp(pts[: k + 1], tol)[:-1] + _dp(pts[k:], tol)


def simplify_polyline(pts, tol: float) -> List[Tuple[float, float]]:
    """Douglas-Peucker reduction; closed inputs stay closed."""
    pts = [tuple(map(float, p)) for p in pts]

    def key(p):
        return (round(p[0], 9), round(p[1], 9))

    closed = len(pts) > 2 and key(pts[0]) == key(pts[-1])
    if not closed:
        return _dp(pts, tol)
    ring = pts[:-1]
    far = int(
        np.argmax([np.hypot(p[0] - ring[0][0], p[1] - ring[0][1]) for p in ring])
    )
    if far == 0:
        return pts
    first = _dp(ring[: far + 1], tol)
    second = _dp(ring[far:] + [ring[0]], tol)
    return first[:-1] + second


def field_grid(scene: Scene, field: Callable[[np.ndarray], np.ndarray]):
    """Sample a batch field on the scene's pixel grid: (xs, ys, F[ix, iy])."""
    xmin, xmax, ymin, ymax = scene.viewport
    xs = np.linspace(xmin, xmax, scene.width_px + 1)
    ys = np.linspace(ymin, ymax, scene.height_px + 1)
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    pts = np.column_stack([gx.ravel(), gy.ravel()])
    return xs, ys, np.asarray(field(pts), dtype=float).reshape(len(xs), len(ys))


# ---------------------------------------------------------------------------
# SVG fragments


def _path_points(scene, pts):
    return " ".join(f"{_fmt(px)},{_fmt(py)}" for px, py in (scene.to_px(p) for p in pts))


def polygon_layer(scene: Scene, pts, fill=FILL, stroke="none", width=2.0) -> str:
    return (
        f'<polygon points="{_path_points(scene, pts)}" fill="{fill}" '
        f'stroke="{stroke}" stroke-width="{_fmt(width)}"/>'
    )


def polyline_layer(scene: Scene, pts, stroke=STROKE, width=2.5) -> str:
    return (
        f'<polyline points="{_path_points(scene, pts)}" fill="none" '
        f'stroke="{stroke}" stroke-width="{_fmt(width)}" '
        f'stroke-linecap="round" stroke-linejoin="round"/>'
    )


def marker_layer(scene: Scene, p, label: str = "", color=MARK) -> str:
    px, py = scene.to_px(p)
    dot = f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="3" fill="{color}"/>'
    if not label:
        return dot
    text = (
        f'<text x="{_fmt(px + 6)}" y="{_fmt(py - 6)}" font-family="sans-serif" '
        f'font-size="12" fill="{color}">{label}</text>'
    )
    return dot + text


def cross_layer(scene: Scene, p, size_px: float = 4.0, color=MARK) -> str:
    px, py = scene.to_px(p)
    s = size_px
    return (
        f'<path d="M {_fmt(px - s)} {_fmt(py - s)} L {_fmt(px + s)} {_fmt(py + s)} '
        f'M {_fmt(px - s)} {_fmt(py + s)} L {_fmt(px + s)} {_fmt(py - s)}" '
        f'stroke="{color}" stroke-width="1.5" fill="none"/>'
    )


def axes_layer(scene: Scene) -> str:
    xmin, xmax, ymin, ymax = scene.viewport
    parts = []
    if xmin < 0 < xmax:
        parts.append(polyline_layer(scene, [(0, ymin), (0, ymax)], AXIS, 1.0))
    if ymin < 0 < ymax:
        parts.append(polyline_layer(scene, [(xmin, 0), (xmax, 0)], AXIS, 1.0))
    return "".join(parts)


def svg_document(scene: Scene, layers: Sequence[str]) -> str:
    w, h = scene.width_px, scene.height_px
    body = "\n".join(layer for layer in layers if layer)
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{w}" height="{h}" viewBox="0 0 {w} {h}">\n'
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="#ffffff"/>\n'
        f"{body}\n</svg>\n"
    )


# ---------------------------------------------------------------------------
# Figure builders


def geodesic_polyline(ctx: Space, x1, x2, samples: int = 128) -> np.ndarray:
    """Geodesic sampled at >= ``samples`` parameters, exact at breakpoints."""
    sp = span(ctx, x1, x2)
    ts = np.union1d(np.linspace(sp.t_min, sp.t_max, samples), breakpoints(ctx, sp))
    return np.asarray([point_at(ctx, sp, t) for t in ts])


def hull_outline(scene: Scene, P: Polytope, level_px: float = 0.25):
    """Traced outline(s) of the hull region at a quarter-pixel defect level."""
    level = level_px / scene.resolution
    xs, ys, F = field_grid(scene, lambda Z: member_defect(P, Z))
    return trace_level(xs, ys, F, level)


def render_polytope(scene: Scene, P: Polytope, labels: bool = True) -> str:
    """Region fill from the membership raster, exact pairwise geodesics,
    generator markers."""
    if P.ctx.n != 2:
        raise DimensionMismatchError("only 2-D polytopes are renderable")
    slim = 0.05 / scene.resolution
    layers = []
    for loop in hull_outline(scene, P):
        layers.append(polygon_layer(scene, simplify_polyline(loop, slim)))
    layers.append(axes_layer(scene))
    gens = P.gens
    if gens.shape[0] == 1:
        layers.append(marker_layer(scene, gens[0], "x1" if labels else ""))
        return "".join(layers)
    for i in range(gens.shape[0]):
        for j in range(i + 1, gens.shape[0]):
            layers.append(
                polyline_layer(scene, geodesic_polyline(scene.ctx, gens[i], gens[j]))
            )
    for i in range(gens.shape[0]):
        layers.append(marker_layer(scene, gens[i], f"x{i + 1}" if labels else ""))
    return "".join(layers)


def render_geodesic(scene: Scene, x1, x2, stroke=STROKE, label_ends=True) -> str:
    """One geodesic as a polyline (or a lone marker for coincident endpoints)."""
    ctx = scene.ctx
    x1 = ctx.point(x1)
    x2 = ctx.point(x2)
    if ctx.close(x1, x2):
        return marker_layer(scene, x1, "x1" if label_ends else "")
    layers = [polyline_layer(scene, geodesic_polyline(ctx, x1, x2), stroke)]
    if label_ends:
        layers.append(marker_layer(scene, x1, "x1"))
        layers.append(marker_layer(scene, x2, "x2"))
    return "".join(layers)


def render_extensions(scene: Scene, x0, targets) -> str:
    """Geodesics from a common start to several targets, distinct strokes."""
    layers = [axes_layer(scene)]
    for i, t in enumerate(targets):
        stroke = EXTENSION_STROKES[i % len(EXTENSION_STROKES)]
        layers.append(render_geodesic(scene, x0, t, stroke=stroke, label_ends=False))
    layers.append(marker_layer(scene, scene.ctx.point(x0), "x1"))
    for i, t in enumerate(targets):
        layers.append(marker_layer(scene, scene.ctx.point(t), f"x{i + 2}"))
    return "".join(layers)


def ball_trace(scene: Scene, center, r: float):
    """Contour of the max-plus distance field at radius r (exact signed field).

    The level is nudged inward by a relative 1e-12 so grid nodes lying
    exactly on the sphere count as interior; the straight stretches of the
    boundary run along grid lines whenever the unit is constant, and the
    nudge keeps the trace from chamfering those corners.
    """
    ctx = scene.ctx
    c = ctx.point(center)

    def field(Z):
        s = (Z - c) / ctx.u
        return np.maximum(s.max(axis=1), 0.0) + np.maximum(-s.min(axis=1), 0.0) - r

    xs, ys, F = field_grid(scene, field)
    return trace_level(xs, ys, F, 1e-12 * max(1.0, r))


def render_ball(scene: Scene, center, r: float, labels: bool = True) -> str:
    """Closed max-plus ball: traced fill + outline, generator and center marks."""
    from .hull import ball_polytope_2d

    slim = 0.05 / scene.resolution
    layers = []
    loops = [simplify_polyline(loop, slim) for loop in ball_trace(scene, center, r)]
    for loop in loops:
        layers.append(polygon_layer(scene, loop))
    layers.append(axes_layer(scene))
    for loop in loops:
        layers.append(polyline_layer(scene, loop))
    gens = ball_polytope_2d(scene.ctx, center, r).gens
    for i in range(3):
        layers.append(marker_layer(scene, gens[i], f"x{i + 1}" if labels else ""))
    layers.append(cross_layer(scene, scene.ctx.point(center)))
    return "".join(layers)
