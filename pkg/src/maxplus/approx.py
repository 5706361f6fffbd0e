"""Nearest-point search and fixed-point location on compact hulls.

Existence of best approximations and of fixed points for continuous
self-maps of a compact hull is a theorem in this geometry; neither comes
with a construction, so this module ships honest search heuristics: their
acceptance criterion is a residual below tolerance on constructive example
classes, never a decision procedure.  All randomness is seeded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from . import backend
from .core import maxplus_dist
from .hull import Polytope, hull_diameter, hull_sample, join_all, project

SELFMAP_KINDS = ("affine_clamp", "coordinate_perturb", "user_table")


@dataclass
class SelfMap:
    """A continuous self-map of a hull.

    The raw rule (affine, smooth coordinate perturbation, or interpolated
    sample table) need not land inside the domain, so every evaluation is
    post-composed with a nearest-member snap; the snap distance is reported
    by ``apply`` so continuity defects are observable rather than hidden.
    """

    kind: str
    domain: Polytope
    _raw: Callable[[np.ndarray], np.ndarray]
    snap_samples: int = 64
    snap_seed: int = 0
    snap_halvings: int = 10

    def __post_init__(self):
        if self.kind not in SELFMAP_KINDS:
            raise ValueError(f"unknown self-map kind {self.kind!r}")

    @classmethod
    def affine_clamp(cls, domain: Polytope, matrix, offset) -> "SelfMap":
        """x -> snap(A x + b)."""
        A = np.asarray(matrix, dtype=float)
        b = domain.ctx.point(offset)
        n = domain.ctx.n
        if A.shape != (n, n):
            raise ValueError(f"matrix must be {n}x{n}, got {A.shape}")
        return cls("affine_clamp", domain, lambda x: A @ x + b)

    @classmethod
    def contraction(cls, domain: Polytope, target, rate: float = 0.5) -> "SelfMap":
        """Affine map pulling every point toward a chosen target at the rate."""
        if not 0.0 <= rate < 1.0:
            raise ValueError("rate must be in [0, 1)")
        n = domain.ctx.n
        c = domain.ctx.point(target)
        return cls.affine_clamp(domain, rate * np.eye(n), (1.0 - rate) * c)

    @classmethod
    def coordinate_perturb(
        cls, domain: Polytope, amplitude: float, frequency: float
    ) -> "SelfMap":
        """x -> snap(x + amplitude * sin(frequency * x)), coordinatewise."""
        a = float(amplitude)
        w = float(frequency)
        return cls("coordinate_perturb", domain, lambda x: x + a * np.sin(w * x))

    @classmethod
    def user_table(cls, domain: Polytope, anchors, values, power: float = 2.0) -> "SelfMap":
        """Inverse-distance interpolation of a finite (anchor -> value) table.

        Exact on the anchors, continuous everywhere; the interpolation weight
        of each anchor decays with its max-plus distance to the argument.
        """
        A = domain.ctx.points(anchors)
        V = domain.ctx.points(values)
        if A.shape != V.shape:
            raise ValueError("anchors and values must have matching shapes")
        u = domain.ctx.u
        p = float(power)

        def interp(x):
            d = backend.pairwise_dist(u, x.reshape(1, -1), A, "hu")[0]
            hit = d <= 1e-15
            if hit.any():
                return V[int(np.argmax(hit))].copy()
            w = d ** -p
            return (w[:, None] * V).sum(axis=0) / w.sum()

        return cls("user_table", domain, interp)

    def apply(self, x) -> Tuple[np.ndarray, float]:
        """Evaluate the map; returns (member of the domain, snap distance)."""
        raw = self.domain.ctx.point(self._raw(self.domain.ctx.point(x)))
        pts, d, _ = project(
            self.domain,
            raw.reshape(1, -1),
            samples=self.snap_samples,
            seed=self.snap_seed,
            halvings=self.snap_halvings,
        )
        return pts[0], float(d[0])

    def __call__(self, x) -> np.ndarray:
        return self.apply(x)[0]


def best_approx_point(
    P: Polytope, target, grid_k: int = 3, seed=0
) -> Tuple[np.ndarray, float]:
    """Hull member (approximately) closest to the target, with its distance.

    Candidates are the generators, the top member, the canonical projection
    and the first 4**grid_k points of a seeded sample stream; the best one is
    refined by coefficient descent.  The sample stream is a prefix stream, so
    raising grid_k can only improve the result.
    """
    if grid_k < 1:
        raise ValueError("grid_k must be positive")
    ctx = P.ctx
    target = ctx.point(target)
    count = 4 ** grid_k
    cand, d, _ = project(
        P, target.reshape(1, -1), metric="hu", samples=count, seed=seed
    )
    extra = np.vstack([P.gens, join_all(P).reshape(1, -1)])
    de = backend.pairwise_dist(ctx.u, target.reshape(1, -1), extra, "hu")[0]
    if de.min() < d[0]:
        return extra[int(de.argmin())].copy(), float(de.min())
    return cand[0], float(d[0])


@dataclass(frozen=True)
class FixpointResult:
    point: np.ndarray
    residual: float
    found: bool
    evals: int


def fixpoint_search(
    f: SelfMap,
    tol: float = 1e-3,
    budget: int = 2000,
    starts: int = 8,
    seed=0,
) -> FixpointResult:
    """Search for an approximate fixed point of a self-map of a compact hull.

    Multi-start iteration of the map itself, followed by seeded coefficient
    perturbations around the best point while budget remains.  The search is
    a deterministic evaluation stream truncated by the budget, so enlarging
    the budget never worsens the residual.  A residual above tol means
    "not found within budget", never nonexistence (a fixed point always
    exists for these maps).
    """
    if not tol > 0.0:
        raise ValueError("tol must be positive")
    if budget < 1:
        raise ValueError("budget must be positive")
    P = f.domain
    ctx = P.ctx
    evals = 0
    best_x: Optional[np.ndarray] = None
    best_r = np.inf

    start_pts = [join_all(P)]
    if starts > 1:
        start_pts += list(hull_sample(P, starts - 1, seed))

    # Fixed per-start cap: the evaluation stream must not depend on the
    # budget, which then acts as a pure truncation (residual monotone in it).
    per_start = 64
    for x in start_pts:
        if evals >= budget or best_r <= tol:
            break
        stale = 0
        for _ in range(per_start):
            if evals >= budget:
                break
            fx, _ = f.apply(x)
            evals += 1
            r = maxplus_dist(ctx, x, fx)
            if r < best_r:
                best_x, best_r, stale = x.copy(), r, 0
            else:
                stale += 1
            if best_r <= tol or stale >= 3:
                break
            x = fx

    # Local refinement: blend the best point toward seeded members, re-snap,
    # keep improvements; the blend step halves whenever a sweep stalls.
    diam = hull_diameter(P)
    rng = np.random.default_rng((seed, 0xF1))
    step = 0.5
    while evals < budget and best_r > tol and diam > 0.0 and step > 2.0 ** -20:
        moved = False
        for _ in range(2 * P.m):
            if evals >= budget:
                break
            raw = -rng.exponential(0.5 * diam, P.m)
            c = raw - raw.max()
            target = backend.join_comb(P.gens, ctx.u, c.reshape(1, -1))[0]
            y = (1.0 - step) * best_x + step * target
            ypts, _, _ = project(P, y.reshape(1, -1), samples=0, halvings=6)
            y = ypts[0]
            fy, _ = f.apply(y)
            evals += 1
            r = maxplus_dist(ctx, y, fy)
            if r < best_r:
                best_x, best_r = y, r
                moved = True
        if not moved:
            step *= 0.5

    return FixpointResult(best_x, float(best_r), bool(best_r <= tol), evals)
