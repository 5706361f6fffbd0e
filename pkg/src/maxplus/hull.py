"""Max-plus hulls of finite generator sets.

The hull of generators g_1..g_m is every point of the form
max_i (g_i + t_i*u) with all t_i <= 0 and max_i t_i = 0.  Membership of a
query z is decided through the canonical witness: t_i = lower(z - g_i) is the
largest coefficient keeping g_i + t_i*u below z, so z belongs to the hull
exactly when some t_i is nonnegative and the join of the capped combination
reproduces z.  Raising any coefficient above the cap would overshoot z, which
is what makes this witness canonical; the test suite validates the decision
against an exhaustive coefficient-grid oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import backend
from .core import Space
from .errors import DimensionMismatchError


@dataclass(frozen=True)
class Polytope:
    """A nonempty finite generator list; the value stands for its hull.

    The empty hull is represented by the absence of a Polytope, not by an
    empty generator list.
    """

    ctx: Space
    gens: np.ndarray

    def __post_init__(self):
        arr = self.ctx.points(self.gens)
        if arr.shape[0] < 1:
            raise ValueError("a polytope needs at least one generator")
        arr = np.ascontiguousarray(arr)
        arr.setflags(write=False)
        object.__setattr__(self, "gens", arr)

    @property
    def m(self) -> int:
        return self.gens.shape[0]


@dataclass(frozen=True)
class MemberResult:
    inside: bool
    witness: Optional[np.ndarray]

    def __bool__(self) -> bool:
        return self.inside


def _witness_coeffs(P: Polytope, Z: np.ndarray):
    """Per-query raw coefficients T, capped coefficients (max forced to 0), joins."""
    T = backend.lower_coeffs(P.gens, P.ctx.u, Z)
    capped = np.minimum(T, 0.0)
    # Cap the best coefficient to exactly 0 where it is only eps-negative so
    # the witness satisfies max = 0; the join moves by at most eps*max(u).
    best = np.argmax(capped, axis=1)
    rows = np.arange(Z.shape[0])
    nearly = (capped[rows, best] < 0.0) & (T[rows, best] >= -P.ctx.eps)
    capped[rows[nearly], best[nearly]] = 0.0
    joins = backend.join_comb(P.gens, P.ctx.u, capped)
    return T, capped, joins


def members_batch(P: Polytope, Z) -> np.ndarray:
    """Vectorized membership decision for a (k, n) block of queries."""
    Z = P.ctx.points(Z)
    T, _, joins = _witness_coeffs(P, Z)
    ok = T.max(axis=1) >= -P.ctx.eps
    ok &= np.abs(joins - Z).max(axis=1) <= P.ctx.eps
    return ok


def member_defect(P: Polytope, Z) -> np.ndarray:
    """Weighted sup distance from each query to its canonical in-hull join.

    Zero exactly on hull members, positive and continuous (piecewise linear)
    off the hull; this is the scalar field the renderer traces to outline a
    hull region.
    """
    Z = P.ctx.points(Z)
    T = backend.lower_coeffs(P.gens, P.ctx.u, Z)
    capped = np.minimum(T, 0.0)
    capped -= np.minimum(capped.max(axis=1, keepdims=True), 0.0)
    joins = backend.join_comb(P.gens, P.ctx.u, capped)
    return (np.abs(joins - Z) / P.ctx.u).max(axis=1)


def member(P: Polytope, z) -> MemberResult:
    """Decide hull membership; on success also return the witness coefficients.

    The witness w has max(w) = 0 and max_i (g_i + w_i*u) = z within eps.
    """
    z = P.ctx.point(z)
    T, capped, joins = _witness_coeffs(P, z.reshape(1, -1))
    inside = bool(T[0].max() >= -P.ctx.eps) and bool(
        np.abs(joins[0] - z).max() <= P.ctx.eps
    )
    return MemberResult(inside, capped[0] if inside else None)


def segment_member(ctx: Space, x1, x2, z) -> bool:
    """Whether z lies on the two-point hull of x1 and x2."""
    return member(Polytope(ctx, [ctx.point(x1), ctx.point(x2)]), z).inside


def join_all(P: Polytope) -> np.ndarray:
    """Coordinatewise max of the generators: the unique top member of the hull."""
    return P.gens.max(axis=0)


def hull_diameter(P: Polytope) -> float:
    """Max pairwise distance over generators; equals the diameter of the hull."""
    return float(backend.pairwise_dist(P.ctx.u, P.gens, P.gens, "hu").max())


def sample_coeffs(P: Polytope, count: int, seed) -> np.ndarray:
    """Seeded coefficient rows, each <= 0 with row max exactly 0.

    Magnitudes are exponential at the scale of the hull diameter so both the
    neighborhoods of the generators and the deep interior get covered.
    """
    if count < 1:
        raise ValueError("count must be positive")
    rng = np.random.default_rng(seed)
    scale = 0.5 * hull_diameter(P)
    if scale <= 0.0:
        return np.zeros((count, P.m))
    raw = -rng.exponential(scale, size=(count, P.m))
    return raw - raw.max(axis=1, keepdims=True)


def hull_sample(P: Polytope, count: int, seed=0) -> np.ndarray:
    """Deterministic (seeded) sample of hull members, one per row."""
    return backend.join_comb(P.gens, P.ctx.u, sample_coeffs(P, count, seed))


def _dist_rows(u, A, B, metric):
    diff = (A - B) / u
    if metric == "u":
        return np.abs(diff).max(axis=1)
    return np.maximum(diff.max(axis=1), 0.0) + np.maximum(-diff.min(axis=1), 0.0)


def project(
    P: Polytope,
    Z,
    metric: str = "hu",
    samples: int = 64,
    seed=0,
    halvings: int = 21,
):
    """Near-closest hull members for a block of queries.

    Returns (points, dists, coeffs).  Each returned point is a member (its
    coefficient row has max 0) and its distance upper-bounds the true
    point-to-hull distance.  The start is the better of the capped canonical
    witness, renormalized into the hull, and the best of a seeded member
    sample; a coordinatewise halving descent on the coefficients then refines
    it.  There is no claim of exact minimization - the closest-point problem
    on these hulls has no closed form here - but the result is never worse
    than the best sampled member.
    """
    Z = P.ctx.points(Z)
    u = P.ctx.u
    k = Z.shape[0]

    T = backend.lower_coeffs(P.gens, u, Z)
    coeffs = np.minimum(T, 0.0)
    # Shift rows whose coefficients are all negative up into the hull.
    coeffs -= np.minimum(coeffs.max(axis=1, keepdims=True), 0.0)
    pts = backend.join_comb(P.gens, u, coeffs)
    dists = _dist_rows(u, Z, pts, metric)

    if samples > 0 and P.m > 1:
        sc = sample_coeffs(P, samples, seed)
        sp = backend.join_comb(P.gens, u, sc)
        dm = backend.pairwise_dist(u, Z, sp, metric)
        j = dm.argmin(axis=1)
        best_d = dm[np.arange(k), j]
        better = best_d < dists
        coeffs[better] = sc[j[better]]
        pts[better] = sp[j[better]]
        dists[better] = best_d[better]

    diam = hull_diameter(P)
    if diam <= 0.0 or halvings <= 0:
        return pts, dists, coeffs

    step = 0.5 * diam
    floor = diam / (1 << 20)
    while step >= floor:
        for i in range(P.m):
            for delta in (step, -step):
                trial = coeffs.copy()
                trial[:, i] = np.minimum(trial[:, i] + delta, 0.0)
                trial -= np.minimum(trial.max(axis=1, keepdims=True), 0.0)
                tp = backend.join_comb(P.gens, u, trial)
                td = _dist_rows(u, Z, tp, metric)
                gain = td < dists
                if gain.any():
                    coeffs[gain] = trial[gain]
                    pts[gain] = tp[gain]
                    dists[gain] = td[gain]
        step *= 0.5
    return pts, dists, coeffs


def remove_redundant(P: Polytope) -> Polytope:
    """Drop generators lying in the hull of the others; greedy, to a fixed point.

    The result generates the same hull.  Which irredundant subset survives
    depends on scan order, so the scan is the stable index order.
    """
    gens = [P.gens[i] for i in range(P.m)]
    changed = True
    while changed and len(gens) > 1:
        changed = False
        for i in range(len(gens)):
            rest = gens[:i] + gens[i + 1 :]
            if member(Polytope(P.ctx, rest), gens[i]).inside:
                del gens[i]
                changed = True
                break
    return Polytope(P.ctx, np.asarray(gens))


def ball_polytope_2d(ctx: Space, center, r: float) -> Polytope:
    """The closed max-plus ball of radius r in the plane, as a three-generator hull.

    With the all-ones unit the generators sit at center + (0, r), (r, 0) and
    (-r, -r); a general unit is handled by building them in gauge coordinates
    and mapping back.  Membership in the result agrees with
    maxplus_dist(center, .) <= r.
    """
    if ctx.n != 2:
        raise DimensionMismatchError("ball_polytope_2d requires a 2-D space")
    if not r > 0.0:
        raise ValueError("radius must be positive")
    c = ctx.point(center)
    u = ctx.u
    gens = np.asarray(
        [
            [c[0], c[1] + r * u[1]],
            [c[0] + r * u[0], c[1]],
            [c[0] - r * u[0], c[1] - r * u[1]],
        ]
    )
    return Polytope(ctx, gens)
