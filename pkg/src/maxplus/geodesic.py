"""Geodesics of the max-plus metric.

Between any two points x1, x2 there is a distinguished path

    t <= 0:  x1 v (x2 + t*u)          t >= 0:  (x1 - t*u) v x2

defined on the span [t_min, t_max] where t_min = min(0, lower(x1 - x2)) and
t_max = max(0, upper(x1 - x2)).  On that interval the path is an isometry
onto the two-point hull: the distance between parameters s and t is exactly
|s - t|.  The span length equals maxplus_dist(x1, x2); the parameter 0 always
lands on the join x1 v x2, where the two branches meet.

This module exposes the span, the path itself (strict about its domain), the
clamped extension to all of R, the affine reparametrization on [0, 1],
midpoints, and dyadic chains.  The dyadic chain is computed two independent
ways (direct fraction evaluation and recursive midpoints) and the agreement
of the two routes is checked on every call.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Space, lower, upper
from .errors import DomainError


@dataclass(frozen=True)
class Span:
    """Endpoints plus the parameter interval [t_min, t_max] of their geodesic.

    t_min <= 0 <= t_max always, and t_max - t_min is the max-plus distance
    between the endpoints.
    """

    x1: np.ndarray
    x2: np.ndarray
    t_min: float
    t_max: float

    @property
    def length(self) -> float:
        return self.t_max - self.t_min


def span(ctx: Space, x1, x2) -> Span:
    """Build the geodesic span for a pair of points."""
    x1 = ctx.point(x1)
    x2 = ctx.point(x2)
    t_min = min(0.0, lower(ctx, x1 - x2))
    t_max = max(0.0, upper(ctx, x1 - x2))
    return Span(x1, x2, t_min, t_max)


def _eval(ctx: Space, x1, x2, t: float) -> np.ndarray:
    if t <= 0.0:
        return np.maximum(x1, x2 + t * ctx.u)
    return np.maximum(x1 - t * ctx.u, x2)


def point_at(ctx: Space, sp: Span, t: float) -> np.ndarray:
    """Evaluate the geodesic at parameter t in [t_min, t_max].

    Raises DomainError when t lies outside the span by more than ctx.eps;
    see point_at_clamped for the everywhere-defined variant.
    """
    t = float(t)
    if t < sp.t_min - ctx.eps or t > sp.t_max + ctx.eps:
        raise DomainError(
            f"parameter {t} outside the geodesic span [{sp.t_min}, {sp.t_max}]"
        )
    t = min(max(t, sp.t_min), sp.t_max)
    return _eval(ctx, sp.x1, sp.x2, t)


def point_at_clamped(ctx: Space, x1, x2, t: float) -> np.ndarray:
    """The geodesic formula extended to every real t.

    Constant equal to x1 below the span and to x2 above it; agrees with
    point_at inside.
    """
    x1 = ctx.point(x1)
    x2 = ctx.point(x2)
    return _eval(ctx, x1, x2, float(t))


def point_at_fraction(ctx: Space, x1, x2, t: float) -> np.ndarray:
    """Affinely reparametrized geodesic on [0, 1]: 0 -> x1, 1 -> x2.

    Distances scale by the endpoint distance: points at fractions s and t are
    exactly |s - t| * maxplus_dist(x1, x2) apart.
    """
    t = float(t)
    if not -1e-12 <= t <= 1.0 + 1e-12:
        raise DomainError(f"fraction {t} outside [0, 1]")
    t = min(max(t, 0.0), 1.0)
    sp = span(ctx, x1, x2)
    return _eval(ctx, sp.x1, sp.x2, (1.0 - t) * sp.t_min + t * sp.t_max)


def midpoint(ctx: Space, x1, x2) -> np.ndarray:
    """The point at fraction 1/2; symmetric and equidistant from both ends."""
    sp = span(ctx, x1, x2)
    return _eval(ctx, sp.x1, sp.x2, 0.5 * (sp.t_min + sp.t_max))


def breakpoints(ctx: Space, sp: Span) -> np.ndarray:
    """Sorted parameters where the geodesic changes affine piece.

    Includes the span ends and 0 (the join).  Within each branch, coordinate
    j switches between its two arguments where (x1_j - x2_j)/u_j crosses the
    parameter, so the path is a polyline with at most n + 2 breakpoints per
    branch; these are the exact vertices used by the SVG renderer.
    """
    ties = (sp.x1 - sp.x2) / ctx.u
    ts = [sp.t_min, 0.0, sp.t_max]
    for t in ties:
        if sp.t_min < t < sp.t_max:
            ts.append(float(t))
    out = np.unique(np.asarray(ts, dtype=float))
    return out[(out >= sp.t_min) & (out <= sp.t_max)]


def midpoint_chain(ctx: Space, x1, x2, k: int) -> np.ndarray:
    """Chain of 2^k + 1 points built purely by recursive midpoints."""
    if k < 0:
        raise DomainError("k must be nonnegative")
    pts = [ctx.point(x1), ctx.point(x2)]
    for _ in range(k):
        nxt = [pts[0]]
        for a, b in zip(pts[:-1], pts[1:]):
            nxt.append(midpoint(ctx, a, b))
            nxt.append(b)
        pts = nxt
    return np.asarray(pts)


def dyadic_chain(ctx: Space, x1, x2, k: int) -> np.ndarray:
    """Points of the geodesic at fractions j/2^k, j = 0..2^k, as a (2^k+1, n) array.

    Consecutive points are equally spaced in the metric.  The same chain is
    rebuilt by recursive midpoints and both routes must agree pointwise; a
    disagreement beyond tolerance raises, since it would falsify the
    midpoint structure the chain relies on.
    """
    if k < 0:
        raise DomainError("k must be nonnegative")
    sp = span(ctx, x1, x2)
    m = 1 << k
    direct = np.asarray(
        [
            _eval(ctx, sp.x1, sp.x2, ((m - j) * sp.t_min + j * sp.t_max) / m)
            for j in range(m + 1)
        ]
    )
    recursive = midpoint_chain(ctx, sp.x1, sp.x2, k)
    tol = ctx.eps * (1.0 + sp.length)
    dev = float(np.abs(direct - recursive).max())
    if dev > tol:
        raise ArithmeticError(
            f"midpoint recursion deviates from direct evaluation by {dev}"
        )
    return direct
