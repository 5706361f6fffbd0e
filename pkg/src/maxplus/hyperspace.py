"""Hausdorff-metric operations on compact sets.

Operands are either finite point clouds or polytopes (standing for their
hulls); the union type is ``CompactSet``.  Cloud/cloud computations are
exact.  Whenever a hull is involved, point-to-hull distances come from
``hull.project`` - an upper bound certified against seeded member samples -
so hull results carry a stated sampling tolerance rather than a closed form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Tuple, Union

import numpy as np

from . import backend
from .core import Space, unit_dist
from .hull import Polytope, hull_diameter, hull_sample, project


@dataclass(frozen=True)
class Cloud:
    """A nonempty finite set of points."""

    ctx: Space
    points: np.ndarray

    def __post_init__(self):
        arr = self.ctx.points(self.points)
        if arr.shape[0] < 1:
            raise ValueError("a cloud needs at least one point")
        arr = np.ascontiguousarray(arr)
        arr.setflags(write=False)
        object.__setattr__(self, "points", arr)


CompactSet = Union[Cloud, Polytope]


def _check_ctx(ctx: Space, K: CompactSet):
    if not np.array_equal(ctx.u, K.ctx.u):
        raise ValueError("the set was built over a different unit")


def dist_point_set(
    ctx: Space,
    z,
    K: CompactSet,
    metric: str = "hu",
    tol_set: float = None,
    seed=0,
) -> float:
    """Distance from a point to a compact set.

    Exact for clouds.  For a polytope the value is the distance to an
    explicitly constructed member (canonical projection candidate, best of a
    seeded member sample, then coefficient descent), hence a true upper
    bound.  It is certified against a second, independently seeded sample:
    if that sample beats the returned value by more than ``tol_set``
    (default 1e-3 * hull diameter) the projection missed and an
    ArithmeticError is raised instead of returning a silently bad bound.
    """
    _check_ctx(ctx, K)
    z = ctx.point(z)
    if isinstance(K, Cloud):
        return float(
            backend.pairwise_dist(ctx.u, z.reshape(1, -1), K.points, metric).min()
        )
    diam = hull_diameter(K)
    if tol_set is None:
        tol_set = 1e-3 * max(diam, 1.0)
    samples = 256 if diam > 0 else 0
    Z = z.reshape(1, -1)
    _, d, _ = project(K, Z, metric=metric, samples=samples, seed=seed)
    d = float(d[0])
    if samples:
        check = backend.pairwise_dist(
            ctx.u, Z, hull_sample(K, samples, (seed, 1)), metric
        ).min()
        if d > check + tol_set:
            raise ArithmeticError(
                f"hull projection bound {d} misses the sampled minimum {check}"
            )
    return d


def _reps(K: CompactSet, samples: int, seed) -> np.ndarray:
    if isinstance(K, Cloud):
        return K.points
    if samples > 0 and K.m > 1:
        return np.vstack([K.gens, hull_sample(K, samples, seed)])
    return K.gens


def _dists_to_set(ctx, Z, K: CompactSet, metric, seed, halvings) -> np.ndarray:
    if isinstance(K, Cloud):
        return backend.pairwise_dist(ctx.u, Z, K.points, metric).min(axis=1)
    _, d, _ = project(K, Z, metric=metric, samples=64, seed=seed, halvings=halvings)
    return d


def hausdorff(
    ctx: Space,
    K1: CompactSet,
    K2: CompactSet,
    metric: str = "hu",
    seed=0,
    samples: int = 64,
    halvings: int = 12,
) -> float:
    """Two-sided Hausdorff distance.

    Exact when both operands are clouds.  A hull operand is represented by
    its generators plus a seeded member sample, so the result is a
    sample-certified estimate (directed suprema can only be underestimated by
    the sampling, point-to-hull infima only overestimated by the projection
    bound).
    """
    _check_ctx(ctx, K1)
    _check_ctx(ctx, K2)
    d1 = _dists_to_set(ctx, _reps(K1, samples, seed), K2, metric, seed, halvings)
    d2 = _dists_to_set(ctx, _reps(K2, samples, seed), K1, metric, seed, halvings)
    return float(max(d1.max(), d2.max()))


def neighborhood_member(
    ctx: Space, S: CompactSet, delta: float, z, metric: str = "u"
) -> bool:
    """Whether z lies in the open delta-neighborhood of S for the metric."""
    if not delta > 0.0:
        raise ValueError("delta must be positive")
    return dist_point_set(ctx, z, S, metric) < delta


def hull_of(K: CompactSet) -> Polytope:
    """The hull operator: clouds become polytopes, polytopes are fixed points."""
    if isinstance(K, Polytope):
        return K
    return Polytope(K.ctx, K.points)


@dataclass
class BallJoinReport:
    """Outcome of the randomized two-direction ball/join identity check."""

    trials: int
    sub_failures: List[Tuple] = field(default_factory=list)
    super_failures: List[Tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.sub_failures and not self.super_failures


def ball_join_check(
    ctx: Space, x1, x2, delta: float, trials: int = 1000, seed=0
) -> BallJoinReport:
    """Randomized check that joining two open unit-norm balls of equal radius
    gives the ball around the join of the centers.

    Forward direction: joins of sampled members land in the target ball.
    Reverse direction: each sampled member y of the target ball is split as
    y = y1 v y2 with y_i = y ^ (x_i + v_i), where v_i is y - x_i clamped
    strictly inside the radius box; both parts must lie in their balls and
    rejoin to y.  Any counterexample is recorded in the report.
    """
    if not delta > 0.0:
        raise ValueError("delta must be positive")
    x1 = ctx.point(x1)
    x2 = ctx.point(x2)
    rng = np.random.default_rng(seed)
    top = np.maximum(x1, x2)
    report = BallJoinReport(trials=trials)
    box = delta * ctx.u

    for t in range(trials):
        y1 = x1 + rng.uniform(-1.0, 1.0, ctx.n) * box
        y2 = x2 + rng.uniform(-1.0, 1.0, ctx.n) * box
        if unit_dist(ctx, np.maximum(y1, y2), top) >= delta + ctx.eps:
            report.sub_failures.append((t, y1, y2))

    clamp = (1.0 - 1e-12) * box
    for t in range(trials):
        y = top + rng.uniform(-1.0, 1.0, ctx.n) * box
        parts = []
        for xi in (x1, x2):
            v = np.clip(y - xi, -clamp, clamp)
            parts.append(np.minimum(y, xi + v))
        rejoined = np.maximum(parts[0], parts[1])
        ok = ctx.close(rejoined, y)
        ok &= unit_dist(ctx, parts[0], x1) < delta + ctx.eps
        ok &= unit_dist(ctx, parts[1], x2) < delta + ctx.eps
        if not ok:
            report.super_failures.append((t, y))
    return report
