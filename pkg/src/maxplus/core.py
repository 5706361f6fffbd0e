"""Lattice and norm arithmetic on R^n with a strictly positive unit vector.

The ambient structure is R^n ordered coordinatewise together with a weight
vector u > 0 (the unit).  Everything downstream reduces to a few primitives
defined here: coordinatewise joins and meets, the upper/lower unit
coefficients (the edges of the smallest u-box containing a vector), the two
norms they induce, the two metrics, and the rescaling that carries u to the
all-ones vector.

All operations are pure functions of immutable values; ``Space`` instances
and the arrays they validate are never mutated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError

METRICS = ("u", "hu")


@dataclass(frozen=True)
class Space:
    """Ambient space: dimension, unit vector and comparison tolerance.

    ``u`` must be strictly positive in every coordinate; ``eps`` is the
    absolute tolerance used by every order/equality comparison and must be
    nonnegative and smaller than the smallest unit coordinate.
    """

    u: np.ndarray
    eps: float = 1e-9

    def __post_init__(self):
        u = np.array(self.u, dtype=float)
        if u.ndim != 1 or u.size < 1:
            raise ValueError("unit must be a nonempty 1-D vector")
        if not np.all(np.isfinite(u)):
            raise ValueError("unit coordinates must be finite")
        if not np.all(u > 0.0):
            raise ValueError("unit must be strictly positive in every coordinate")
        eps = float(self.eps)
        if not 0.0 <= eps < float(u.min()):
            raise ValueError("eps must satisfy 0 <= eps < min(u)")
        u.setflags(write=False)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "eps", eps)

    @property
    def n(self) -> int:
        return self.u.shape[0]

    def point(self, x) -> np.ndarray:
        """Validate and coerce a single point of this space.

        Rejects wrong lengths and non-finite coordinates (there is no bottom
        element and no -inf scalar in this model).
        """
        p = np.asarray(x, dtype=float)
        if p.ndim != 1 or p.shape[0] != self.n:
            raise DimensionMismatchError(
                f"expected a point of dimension {self.n}, got shape {p.shape}"
            )
        if not np.all(np.isfinite(p)):
            raise ValueError("point coordinates must be finite")
        return p

    def points(self, xs) -> np.ndarray:
        """Validate a (k, n) block of points."""
        arr = np.asarray(xs, dtype=float)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        if arr.ndim != 2 or arr.shape[1] != self.n:
            raise DimensionMismatchError(
                f"expected points of dimension {self.n}, got shape {arr.shape}"
            )
        if not np.all(np.isfinite(arr)):
            raise ValueError("point coordinates must be finite")
        return arr

    def leq(self, x, y) -> bool:
        """Coordinatewise x <= y up to eps."""
        return bool(np.all(np.asarray(x) <= np.asarray(y) + self.eps))

    def close(self, x, y) -> bool:
        """Coordinatewise |x - y| <= eps."""
        return bool(np.all(np.abs(np.asarray(x) - np.asarray(y)) <= self.eps))


def join(ctx: Space, x, y) -> np.ndarray:
    """Coordinatewise maximum (least upper bound)."""
    return np.maximum(ctx.point(x), ctx.point(y))


def meet(ctx: Space, x, y) -> np.ndarray:
    """Coordinatewise minimum (greatest lower bound)."""
    return np.minimum(ctx.point(x), ctx.point(y))


def pos_part(ctx: Space, x) -> np.ndarray:
    """Join with zero."""
    return np.maximum(ctx.point(x), 0.0)


def neg_part(ctx: Space, x) -> np.ndarray:
    """Join of the negation with zero."""
    return np.maximum(-ctx.point(x), 0.0)


def abs_val(ctx: Space, x) -> np.ndarray:
    """Coordinatewise absolute value (= pos_part + neg_part)."""
    return np.abs(ctx.point(x))


def upper(ctx: Space, x) -> float:
    """Least t such that x <= t*u coordinatewise: max_i x_i/u_i."""
    return float((ctx.point(x) / ctx.u).max())


def lower(ctx: Space, x) -> float:
    """Greatest t such that t*u <= x coordinatewise: min_i x_i/u_i."""
    return float((ctx.point(x) / ctx.u).min())


def unit_norm(ctx: Space, x) -> float:
    """Weighted sup norm max_i |x_i|/u_i; its unit ball is the box [-u, u]."""
    return float((np.abs(ctx.point(x)) / ctx.u).max())


def maxplus_norm(ctx: Space, x) -> float:
    """Sum of the positive and negative reach over the unit.

    max(0, max_i x_i/u_i) + max(0, max_i -x_i/u_i): the spread between the
    largest positive and largest negative coordinate measured in units of u.
    Equivalent to unit_norm within factors 1 and 2, but not monotone under
    taking absolute values.
    """
    s = ctx.point(x) / ctx.u
    return float(max(s.max(), 0.0) + max(-s.min(), 0.0))


def unit_dist(ctx: Space, x, y) -> float:
    """Distance induced by unit_norm."""
    return float((np.abs(ctx.point(x) - ctx.point(y)) / ctx.u).max())


def maxplus_dist(ctx: Space, x, y) -> float:
    """Distance induced by maxplus_norm; the geodesic metric of this package."""
    s = (ctx.point(x) - ctx.point(y)) / ctx.u
    return float(max(s.max(), 0.0) + max(-s.min(), 0.0))


def distance(ctx: Space, x, y, metric: str = "hu") -> float:
    """Dispatch on the metric token: "u" -> unit_dist, "hu" -> maxplus_dist."""
    if metric == "u":
        return unit_dist(ctx, x, y)
    if metric == "hu":
        return maxplus_dist(ctx, x, y)
    raise ValueError(f"unknown metric {metric!r}, expected one of {METRICS}")


def norm(ctx: Space, x, metric: str = "hu") -> float:
    """Dispatch on the metric token: "u" -> unit_norm, "hu" -> maxplus_norm."""
    if metric == "u":
        return unit_norm(ctx, x)
    if metric == "hu":
        return maxplus_norm(ctx, x)
    raise ValueError(f"unknown metric {metric!r}, expected one of {METRICS}")


def gauge_to_one(ctx: Space, x) -> np.ndarray:
    """Rescale coordinates so the unit becomes the all-ones vector.

    x_i -> x_i/u_i.  This is an order isomorphism carrying every operation in
    ``ctx`` to the same operation with the trivial unit, which is how the
    2-D drawing routines and the ball construction handle general units.
    """
    return ctx.point(x) / ctx.u


def gauge_from_one(ctx: Space, x) -> np.ndarray:
    """Inverse of gauge_to_one: x_i -> x_i*u_i."""
    return ctx.point(x) * ctx.u
