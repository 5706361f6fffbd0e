"""Named property suites over every law the package relies on.

Each check is a seeded randomized verification of one structural fact
(a lattice/norm law, a geodesic identity, a hull or hyperspace property),
keyed by a stable kebab-case name so the CLI can print a pass/fail table.
``run_checks`` is deterministic given (seed, trials, eps).
"""

from __future__ import annotations

import numpy as np

from . import approx, backend, core, geodesic, hull, hyperspace, render
from .core import Space


def _space(rng, n=None, nmax=6) -> Space:
    if n is None:
        n = int(rng.integers(1, nmax + 1))
    return Space(rng.uniform(0.5, 2.0, n), eps=1e-9)


def _pts(rng, ctx, k, scale=4.0):
    return rng.uniform(-scale, scale, (k, ctx.n))


def _poly(rng, ctx, m) -> hull.Polytope:
    return hull.Polytope(ctx, _pts(rng, ctx, m, 2.0))


TOL = 1e-9


def check_unit_box_bounds(rng, trials):
    """lower(x)*u <= x <= upper(x)*u coordinatewise."""
    for _ in range(trials):
        ctx = _space(rng)
        x = _pts(rng, ctx, 1)[0]
        lo, up = core.lower(ctx, x), core.upper(ctx, x)
        if not (ctx.leq(lo * ctx.u, x) and ctx.leq(x, up * ctx.u)):
            return False, f"box bounds fail at x={x}"
        if np.allclose(x, 0.0) and not (abs(lo) <= TOL and abs(up) <= TOL):
            return False, "zero vector must have zero bounds"
    return True, ""


def check_join_upper_meet_lower(rng, trials):
    """upper distributes over joins as max; lower over meets as min."""
    for _ in range(trials):
        ctx = _space(rng)
        x, y = _pts(rng, ctx, 2)
        a = core.upper(ctx, core.join(ctx, x, y))
        b = max(core.upper(ctx, x), core.upper(ctx, y))
        c = core.lower(ctx, core.meet(ctx, x, y))
        d = min(core.lower(ctx, x), core.lower(ctx, y))
        if abs(a - b) > TOL or abs(c - d) > TOL:
            return False, f"join/meet bound mismatch ({a} vs {b}, {c} vs {d})"
    return True, ""


def check_upper_subadditive_homogeneous(rng, trials):
    """upper is subadditive and positively homogeneous; negative scalars flip
    it onto lower."""
    for _ in range(trials):
        ctx = _space(rng)
        x, y = _pts(rng, ctx, 2)
        if core.upper(ctx, x + y) > core.upper(ctx, x) + core.upper(ctx, y) + TOL:
            return False, "subadditivity fails"
        s = float(rng.uniform(0, 3))
        if abs(core.upper(ctx, s * x) - s * core.upper(ctx, x)) > TOL:
            return False, "positive homogeneity fails"
        s = float(-rng.uniform(0.1, 3))
        if abs(core.upper(ctx, s * x) - s * core.lower(ctx, x)) > TOL * 10:
            return False, "negative scaling fails"
    return True, ""


def check_maxplus_norm_axioms(rng, trials):
    """Triangle inequality, absolute homogeneity, definiteness; joins do not
    increase the norm, with equality on nonnegative vectors."""
    for _ in range(trials):
        ctx = _space(rng)
        x, y = _pts(rng, ctx, 2)
        nx, ny = core.maxplus_norm(ctx, x), core.maxplus_norm(ctx, y)
        if core.maxplus_norm(ctx, x + y) > nx + ny + TOL:
            return False, "triangle inequality fails"
        s = float(rng.uniform(-3, 3))
        if abs(core.maxplus_norm(ctx, s * x) - abs(s) * nx) > TOL * 10:
            return False, "homogeneity fails"
        if core.maxplus_norm(ctx, np.zeros(ctx.n)) > 0.0:
            return False, "norm of zero must be zero"
        if nx <= TOL and not np.all(np.abs(x) <= 10 * TOL * ctx.u.max()):
            return False, "definiteness fails"
        if core.maxplus_norm(ctx, core.join(ctx, x, y)) > max(nx, ny) + TOL:
            return False, "join bound fails"
        xp, yp = np.abs(x), np.abs(y)
        a = core.maxplus_norm(ctx, core.join(ctx, xp, yp))
        b = max(core.maxplus_norm(ctx, xp), core.maxplus_norm(ctx, yp))
        if abs(a - b) > TOL:
            return False, "join equality on positives fails"
    return True, ""


def check_norm_sandwich(rng, trials):
    """unit_norm <= maxplus_norm <= 2 unit_norm."""
    for _ in range(trials):
        ctx = _space(rng, nmax=8)
        x = _pts(rng, ctx, 1)[0]
        nu, nh = core.unit_norm(ctx, x), core.maxplus_norm(ctx, x)
        if not (nu <= nh * (1 + 1e-12) + TOL and nh <= 2 * nu * (1 + 1e-12) + TOL):
            return False, f"sandwich fails: {nu} vs {nh}"
    return True, ""


def check_abs_value_norm_drop(rng, trials):
    """Taking absolute values never increases the max-plus norm."""
    for _ in range(trials):
        ctx = _space(rng)
        x = _pts(rng, ctx, 1)[0]
        if core.maxplus_norm(ctx, np.abs(x)) > core.maxplus_norm(ctx, x) + TOL:
            return False, f"abs increases norm at {x}"
    return True, ""


def check_split_at_join(rng, trials):
    """Distance splits exactly through the join of the endpoints."""
    for _ in range(trials):
        ctx = _space(rng)
        x, y = _pts(rng, ctx, 2)
        j = core.join(ctx, x, y)
        lhs = core.maxplus_dist(ctx, x, y)
        rhs = core.maxplus_dist(ctx, x, j) + core.maxplus_dist(ctx, y, j)
        if abs(lhs - rhs) > TOL:
            return False, f"split residual {abs(lhs - rhs)}"
    return True, ""


def check_gauge_invariance(rng, trials):
    """Every scalar operation agrees with its evaluation after rescaling the
    unit to all-ones; the rescaling round-trips."""
    for _ in range(trials):
        ctx = _space(rng)
        one = Space(np.ones(ctx.n), eps=ctx.eps)
        x, y = _pts(rng, ctx, 2)
        gx, gy = core.gauge_to_one(ctx, x), core.gauge_to_one(ctx, y)
        pairs = [
            (core.upper(ctx, x), core.upper(one, gx)),
            (core.lower(ctx, x), core.lower(one, gx)),
            (core.unit_norm(ctx, x), core.unit_norm(one, gx)),
            (core.maxplus_norm(ctx, x), core.maxplus_norm(one, gx)),
            (core.unit_dist(ctx, x, y), core.unit_dist(one, gx, gy)),
            (core.maxplus_dist(ctx, x, y), core.maxplus_dist(one, gx, gy)),
        ]
        if any(abs(a - b) > 1e-9 for a, b in pairs):
            return False, "scalar op changed under gauge"
        if not ctx.close(core.gauge_to_one(ctx, core.join(ctx, x, y)),
                         core.join(one, gx, gy)):
            return False, "join changed under gauge"
        if not ctx.close(core.gauge_from_one(ctx, gx), x):
            return False, "gauge round-trip fails"
    return True, ""


def check_lattice_ops_lipschitz(rng, trials):
    """Joint 1-Lipschitz bound for the join in the max-plus metric."""
    for _ in range(trials):
        ctx = _space(rng)
        x, y, xp, yp = _pts(rng, ctx, 4)
        lhs = core.maxplus_dist(ctx, core.join(ctx, x, y), core.join(ctx, xp, yp))
        rhs = core.maxplus_dist(ctx, x, xp) + core.maxplus_dist(ctx, y, yp)
        if lhs > rhs + TOL:
            return False, f"join expansion {lhs - rhs}"
    return True, ""


def check_geodesic_isometry(rng, trials):
    """Parameter differences equal distances along the geodesic."""
    for _ in range(trials):
        ctx = _space(rng)
        x1, x2 = _pts(rng, ctx, 2)
        sp = geodesic.span(ctx, x1, x2)
        t1, t2 = rng.uniform(sp.t_min, sp.t_max, 2)
        d = core.maxplus_dist(
            ctx, geodesic.point_at(ctx, sp, t1), geodesic.point_at(ctx, sp, t2)
        )
        if abs(d - abs(t1 - t2)) > 1e-9 * (1 + sp.length):
            return False, f"isometry residual {abs(d - abs(t1 - t2))}"
    return True, ""


def check_segment_additivity(rng, trials):
    """Every point of the segment splits the endpoint distance additively."""
    for _ in range(trials):
        ctx = _space(rng)
        x1, x2 = _pts(rng, ctx, 2)
        sp = geodesic.span(ctx, x1, x2)
        z = geodesic.point_at(ctx, sp, float(rng.uniform(sp.t_min, sp.t_max)))
        lhs = core.maxplus_dist(ctx, x1, x2)
        rhs = core.maxplus_dist(ctx, x1, z) + core.maxplus_dist(ctx, z, x2)
        if abs(lhs - rhs) > TOL:
            return False, f"additivity residual {abs(lhs - rhs)}"
    return True, ""


def check_segment_halves(rng, trials):
    """Nonpositive parameters stay between x1 and the join; nonnegative ones
    between x2 and the join."""
    for _ in range(trials):
        ctx = _space(rng)
        x1, x2 = _pts(rng, ctx, 2)
        sp = geodesic.span(ctx, x1, x2)
        j = core.join(ctx, x1, x2)
        t = float(rng.uniform(sp.t_min, 0.0))
        z = geodesic.point_at(ctx, sp, t)
        if not (ctx.leq(x1, z) and ctx.leq(z, j)):
            return False, "lower-branch point leaves [x1, join]"
        t = float(rng.uniform(0.0, sp.t_max))
        z = geodesic.point_at(ctx, sp, t)
        if not (ctx.leq(x2, z) and ctx.leq(z, j)):
            return False, "upper-branch point leaves [x2, join]"
    return True, ""


def check_comparable_witness(rng, trials):
    """For x1 <= x2 every segment point is recovered from its distance to the
    top endpoint."""
    for _ in range(trials):
        ctx = _space(rng)
        x1 = _pts(rng, ctx, 1)[0]
        x2 = x1 + rng.uniform(0, 3, ctx.n)
        sp = geodesic.span(ctx, x1, x2)
        z = geodesic.point_at(ctx, sp, float(rng.uniform(sp.t_min, sp.t_max)))
        rebuilt = core.join(ctx, x1, x2 - core.upper(ctx, x2 - z) * ctx.u)
        if not ctx.close(z, rebuilt):
            return False, f"witness reconstruction off by {np.abs(z - rebuilt).max()}"
    return True, ""


def check_geodesic_injective(rng, trials):
    """On comparable endpoints, distinct parameters give distinct points at
    full metric separation."""
    for _ in range(trials):
        ctx = _space(rng)
        x1 = _pts(rng, ctx, 1)[0]
        x2 = x1 + rng.uniform(0.2, 3, ctx.n)
        sp = geodesic.span(ctx, x1, x2)
        t1, t2 = rng.uniform(sp.t_min, sp.t_max, 2)
        d = core.maxplus_dist(
            ctx, geodesic.point_at(ctx, sp, t1), geodesic.point_at(ctx, sp, t2)
        )
        if d < (1 - 1e-9) * abs(t1 - t2) - TOL:
            return False, "parameters collapsed"
    return True, ""


def check_chain_monotone(rng, trials):
    """Dyadic chains of comparable pairs are coordinatewise monotone."""
    for _ in range(trials):
        ctx = _space(rng)
        x1 = _pts(rng, ctx, 1)[0]
        x2 = x1 + rng.uniform(0, 3, ctx.n)
        chain = geodesic.dyadic_chain(ctx, x1, x2, 4)
        if not np.all(np.diff(chain, axis=0) >= -ctx.eps):
            return False, "chain not monotone"
    return True, ""


def check_midpoint_equidistant(rng, trials):
    """Midpoints are symmetric, equidistant, and ordered between comparable
    endpoints."""
    for _ in range(trials):
        ctx = _space(rng)
        x1, x2 = _pts(rng, ctx, 2)
        m = geodesic.midpoint(ctx, x1, x2)
        d = core.maxplus_dist(ctx, x1, x2)
        if abs(core.maxplus_dist(ctx, x1, m) - 0.5 * d) > TOL:
            return False, "midpoint not equidistant from x1"
        if abs(core.maxplus_dist(ctx, x2, m) - 0.5 * d) > TOL:
            return False, "midpoint not equidistant from x2"
        if not ctx.close(m, geodesic.midpoint(ctx, x2, x1)):
            return False, "midpoint not symmetric"
        lo = np.minimum(x1, x2)
        hi = np.maximum(x1, x2)
        mc = geodesic.midpoint(ctx, lo, hi)
        if not (ctx.leq(lo, mc) and ctx.leq(mc, hi)):
            return False, "comparable midpoint leaves the order interval"
    return True, ""


def check_span_antisymmetry(rng, trials):
    """Swapping endpoints negates and swaps the span; its length is the
    distance."""
    for _ in range(trials):
        ctx = _space(rng)
        x1, x2 = _pts(rng, ctx, 2)
        sp = geodesic.span(ctx, x1, x2)
        sq = geodesic.span(ctx, x2, x1)
        if abs(sp.t_max + sq.t_min) > TOL or abs(sp.t_min + sq.t_max) > TOL:
            return False, "span antisymmetry fails"
        if abs(sp.length - core.maxplus_dist(ctx, x1, x2)) > TOL:
            return False, "span length is not the distance"
        if not (sp.t_min <= TOL and sp.t_max >= -TOL):
            return False, "span does not contain 0"
    return True, ""


def check_clamp_endpoints(rng, trials):
    """The everywhere-defined path is constant beyond the span and hits the
    join at 0."""
    for _ in range(trials):
        ctx = _space(rng)
        x1, x2 = _pts(rng, ctx, 2)
        sp = geodesic.span(ctx, x1, x2)
        before = geodesic.point_at_clamped(ctx, x1, x2, sp.t_min - rng.uniform(0.1, 2))
        after = geodesic.point_at_clamped(ctx, x1, x2, sp.t_max + rng.uniform(0.1, 2))
        at0 = geodesic.point_at_clamped(ctx, x1, x2, 0.0)
        if not (ctx.close(before, x1) and ctx.close(after, x2)):
            return False, "clamping fails"
        if not ctx.close(at0, core.join(ctx, x1, x2)):
            return False, "parameter 0 is not the join"
    return True, ""


def check_hull_monotone_idempotent(rng, trials):
    """Hulls grow with their generator sets and are idempotent under
    sample-and-rehull."""
    for _ in range(max(1, trials // 10)):
        ctx = _space(rng, nmax=4)
        big = _poly(rng, ctx, int(rng.integers(2, 5)))
        small = hull.Polytope(ctx, big.gens[: int(rng.integers(1, big.m))])
        zs = hull.hull_sample(small, 20, rng.integers(2**32))
        if not hull.members_batch(big, zs).all():
            return False, "smaller hull escapes larger"
        zs = hull.hull_sample(big, 20, rng.integers(2**32))
        rehull = hull.Polytope(ctx, np.vstack([big.gens, zs[:4]]))
        if not hull.members_batch(big, hull.hull_sample(rehull, 20, 7)).all():
            return False, "re-hulling added members"
    return True, ""


def check_segment_recursion(rng, trials):
    """A member of hull(S + {x}) lies on a segment from x to a member of
    hull(S) recovered from its witness."""
    for _ in range(max(1, trials // 10)):
        ctx = _space(rng, nmax=4)
        P = _poly(rng, ctx, int(rng.integers(2, 5)))
        z = hull.hull_sample(P, 1, rng.integers(2**32))[0]
        res = hull.member(P, z)
        if not res.inside:
            return False, "sample not a member"
        w = res.witness
        x = P.gens[-1]
        rest = w[:-1]
        shift = rest.max()
        y = (P.gens[:-1] + (rest - shift)[:, None] * ctx.u).max(axis=0)
        if not hull.member(hull.Polytope(ctx, P.gens[:-1]), y).inside:
            return False, "recovered point not in the smaller hull"
        if not hull.segment_member(ctx, x, y, z):
            return False, "sample misses the recovered segment"
    return True, ""


def check_quasiconvex_metric(rng, trials):
    """Distance to any point is maximized over a hull at its generators."""
    for _ in range(max(1, trials // 5)):
        ctx = _space(rng, nmax=4)
        P = _poly(rng, ctx, int(rng.integers(1, 5)))
        y = _pts(rng, ctx, 1)[0]
        bound = max(core.maxplus_dist(ctx, y, g) for g in P.gens)
        for z in hull.hull_sample(P, 10, rng.integers(2**32)):
            if core.maxplus_dist(ctx, y, z) > bound + TOL:
                return False, "hull point beats all generators"
    return True, ""


def check_ball_convexity(rng, trials):
    """Dyadic chains between points of a metric ball stay inside it."""
    for _ in range(max(1, trials // 5)):
        ctx = _space(rng, nmax=4)
        c = _pts(rng, ctx, 1)[0]
        r = float(rng.uniform(0.5, 2))
        for metric, dist in (("hu", core.maxplus_dist), ("u", core.unit_dist)):
            pts = []
            while len(pts) < 2:
                cand = c + rng.uniform(-r, r, ctx.n) * ctx.u
                if dist(ctx, c, cand) <= r:
                    pts.append(cand)
            for z in geodesic.dyadic_chain(ctx, pts[0], pts[1], 3):
                if dist(ctx, c, z) > r + TOL:
                    return False, f"{metric}-ball chain escape"
    return True, ""


def check_join_midpoint_closure(rng, trials):
    """Sampled hull members are closed under joins and under midpoints of
    comparable pairs."""
    for _ in range(max(1, trials // 10)):
        ctx = _space(rng, nmax=4)
        P = _poly(rng, ctx, int(rng.integers(2, 5)))
        zs = hull.hull_sample(P, 8, rng.integers(2**32))
        for i in range(len(zs)):
            for j in range(i + 1, len(zs)):
                jn = core.join(ctx, zs[i], zs[j])
                if not hull.member(P, jn).inside:
                    return False, "join escapes the hull"
                if not hull.members_batch(
                    P, geodesic.dyadic_chain(ctx, zs[i], jn, 2)
                ).all():
                    return False, "comparable chain escapes the hull"
    return True, ""


def check_member_grid_oracle(rng, trials):
    """Canonical-witness membership against an exhaustive coefficient grid.

    Every point constructed by the grid itself must be accepted; every
    accepted random query must sit within one grid step of a grid join.
    Rejected queries within one step of a join are boundary-band cases and
    are allowed to go either way.
    """
    step = 0.05
    for _ in range(max(1, trials // 40)):
        ctx = Space(rng.uniform(0.8, 1.25, 2))
        P = hull.Polytope(ctx, rng.uniform(0.0, 1.0, (int(rng.integers(1, 4)), 2)))
        diam = hull.hull_diameter(P)
        grid = -np.arange(0.0, diam + step, step)
        mesh = np.stack(np.meshgrid(*[grid] * P.m, indexing="ij"), axis=-1)
        coeffs = mesh.reshape(-1, P.m)
        coeffs = coeffs[coeffs.max(axis=1) == 0.0]
        joins = (P.gens[None, :, :] + coeffs[:, :, None] * ctx.u).max(axis=1)

        picks = joins[rng.integers(0, len(joins), 10)]
        if not hull.members_batch(P, picks).all():
            return False, "an exhaustively constructed member was rejected"

        for z in rng.uniform(-0.5, 1.5, (25, 2)):
            near = float((np.abs(joins - z) / ctx.u).max(axis=1).min())
            if hull.member(P, z).inside and near > step + TOL:
                return False, f"accepted point {z} is {near} from every grid join"
    return True, ""


def check_diameter_bound(rng, trials):
    """Sampled members never exceed the generator diameter, which is attained."""
    for _ in range(max(1, trials // 10)):
        ctx = _space(rng, nmax=4)
        P = _poly(rng, ctx, int(rng.integers(2, 5)))
        diam = hull.hull_diameter(P)
        zs = np.vstack([P.gens, hull.hull_sample(P, 16, rng.integers(2**32))])
        worst = float(backend.pairwise_dist(ctx.u, zs, zs, "hu").max())
        if worst > diam + TOL:
            return False, f"sample pair at {worst} exceeds diameter {diam}"
    return True, ""


def check_ball_polytope_agreement(rng, trials):
    """Three-generator ball hull against the distance field on a grid."""
    ctx = Space(rng.uniform(0.5, 2.0, 2))
    c = _pts(rng, ctx, 1)[0]
    r = float(rng.uniform(0.5, 2.5))
    P = hull.ball_polytope_2d(ctx, c, r)
    for g in P.gens:
        if abs(core.maxplus_dist(ctx, c, g) - r) > TOL:
            return False, "generator not at the exact radius"
    k = 61
    xs = np.linspace(c[0] - 2 * r * ctx.u[0], c[0] + 2 * r * ctx.u[0], k)
    ys = np.linspace(c[1] - 2 * r * ctx.u[1], c[1] + 2 * r * ctx.u[1], k)
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    Z = np.column_stack([gx.ravel(), gy.ravel()])
    got = hull.members_batch(P, Z)
    s = (Z - c) / ctx.u
    dist = np.maximum(s.max(axis=1), 0.0) + np.maximum(-s.min(axis=1), 0.0)
    want = dist <= r
    off_margin = np.abs(dist - r) > ctx.eps
    agree = (got == want) | ~off_margin
    frac = float(agree.mean())
    if frac < 0.999:
        return False, f"grid agreement only {frac:.4%}"
    return True, ""


def check_hausdorff_axioms(rng, trials):
    """Identity, symmetry and the triangle inequality on cloud operands."""
    for _ in range(max(1, trials // 5)):
        ctx = _space(rng, nmax=4)
        clouds = [
            hyperspace.Cloud(ctx, _pts(rng, ctx, int(rng.integers(1, 5))))
            for _ in range(3)
        ]
        a, b, c = (
            hyperspace.hausdorff(ctx, clouds[0], clouds[1]),
            hyperspace.hausdorff(ctx, clouds[1], clouds[2]),
            hyperspace.hausdorff(ctx, clouds[0], clouds[2]),
        )
        if hyperspace.hausdorff(ctx, clouds[0], clouds[0]) > TOL:
            return False, "identity fails"
        if abs(a - hyperspace.hausdorff(ctx, clouds[1], clouds[0])) > TOL:
            return False, "symmetry fails"
        if c > a + b + TOL:
            return False, "triangle inequality fails"
    return True, ""


def check_hausdorff_norm_sandwich(rng, trials):
    """The two Hausdorff metrics are equivalent with constants 1 and 2."""
    for _ in range(max(1, trials // 5)):
        ctx = _space(rng, nmax=4)
        k1 = hyperspace.Cloud(ctx, _pts(rng, ctx, int(rng.integers(1, 5))))
        k2 = hyperspace.Cloud(ctx, _pts(rng, ctx, int(rng.integers(1, 5))))
        hu_ = hyperspace.hausdorff(ctx, k1, k2, "u")
        hhu = hyperspace.hausdorff(ctx, k1, k2, "hu")
        if not (hu_ <= hhu + TOL and hhu <= 2 * hu_ + TOL):
            return False, f"sandwich fails: {hu_} vs {hhu}"
    return True, ""


def check_hull_lipschitz(rng, trials):
    """Hulling clouds at most doubles their Hausdorff distance."""
    for _ in range(max(1, trials // 10)):
        ctx = _space(rng, nmax=3)
        c1 = hyperspace.Cloud(ctx, _pts(rng, ctx, int(rng.integers(1, 6)), 2.0))
        c2 = hyperspace.Cloud(ctx, _pts(rng, ctx, int(rng.integers(1, 6)), 2.0))
        h_cloud = hyperspace.hausdorff(ctx, c1, c2)
        h_hull = hyperspace.hausdorff(
            ctx, hyperspace.hull_of(c1), hyperspace.hull_of(c2), seed=rng.integers(2**32)
        )
        if h_hull > 2 * h_cloud + 1e-3 * max(1.0, h_cloud):
            return False, f"hull expansion {h_hull} > 2*{h_cloud}"
    return True, ""


def check_neighborhood_sandwich(rng, trials):
    """Max-plus neighborhoods nest between unit-norm neighborhoods at radii
    delta and 2*delta; hull neighborhoods are convex along dyadic chains."""
    for _ in range(max(1, trials // 5)):
        ctx = _space(rng, nmax=4)
        S = hyperspace.Cloud(ctx, _pts(rng, ctx, 3))
        delta = float(rng.uniform(0.3, 2))
        z = _pts(rng, ctx, 1)[0]
        in_v = hyperspace.neighborhood_member(ctx, S, delta, z, "hu")
        in_u = hyperspace.neighborhood_member(ctx, S, delta, z, "u")
        in_v2 = hyperspace.neighborhood_member(ctx, S, 2 * delta, z, "hu")
        if in_v and not in_u:
            return False, "V_delta escapes U_delta"
        if in_u and not in_v2:
            return False, "U_delta escapes V_2delta"
    ctx = _space(rng, nmax=3)
    P = _poly(rng, ctx, 3)
    delta = 0.5
    zs = hull.hull_sample(P, 4, rng.integers(2**32)) + rng.uniform(
        -0.2, 0.2, (4, ctx.n)
    ) * ctx.u
    for i in range(len(zs)):
        for j in range(i + 1, len(zs)):
            if not hyperspace.neighborhood_member(ctx, P, delta, zs[i], "u"):
                continue
            if not hyperspace.neighborhood_member(ctx, P, delta, zs[j], "u"):
                continue
            for w in geodesic.dyadic_chain(ctx, zs[i], zs[j], 2):
                if not hyperspace.neighborhood_member(ctx, P, delta, w, "u"):
                    return False, "hull neighborhood chain escape"
    return True, ""


def check_hull_of_diameter(rng, trials):
    """The hull operator preserves diameters and fixes singletons."""
    for _ in range(max(1, trials // 10)):
        ctx = _space(rng, nmax=4)
        pts = _pts(rng, ctx, int(rng.integers(1, 6)))
        cloud = hyperspace.Cloud(ctx, pts)
        P = hyperspace.hull_of(cloud)
        cloud_diam = float(backend.pairwise_dist(ctx.u, pts, pts, "hu").max())
        if abs(hull.hull_diameter(P) - cloud_diam) > TOL:
            return False, "hull changes the diameter"
        if hyperspace.hull_of(P) is not P:
            return False, "hull operator is not idempotent"
    ctx = _space(rng, nmax=4)
    x = _pts(rng, ctx, 1)
    single = hyperspace.Cloud(ctx, x)
    if hyperspace.hausdorff(ctx, single, hyperspace.hull_of(single)) > TOL:
        return False, "singleton hull differs from its cloud"
    return True, ""


def check_ball_join(rng, trials):
    """Joining equal-radius unit-norm balls gives the ball of the join."""
    ctx = _space(rng, nmax=4)
    x1, x2 = _pts(rng, ctx, 2)
    rep = hyperspace.ball_join_check(
        ctx, x1, x2, float(rng.uniform(0.3, 1.5)), trials=max(10, trials), seed=rng.integers(2**32)
    )
    if not rep.ok:
        return False, (
            f"{len(rep.sub_failures)} forward / {len(rep.super_failures)} reverse failures"
        )
    return True, ""


def check_interior_convexity(rng, trials):
    """Chains between points strictly inside an open unit-norm ball stay
    strictly inside."""
    for _ in range(max(1, trials // 5)):
        ctx = _space(rng, nmax=4)
        c = _pts(rng, ctx, 1)[0]
        r = float(rng.uniform(0.5, 2))
        a = c + rng.uniform(-0.9, 0.9, ctx.n) * r * ctx.u
        b = c + rng.uniform(-0.9, 0.9, ctx.n) * r * ctx.u
        for z in geodesic.dyadic_chain(ctx, a, b, 3):
            if core.unit_dist(ctx, c, z) >= r:
                return False, "open-ball chain escape"
    return True, ""


def check_best_approx_member(rng, trials):
    """Best-approximation outputs are members; interior targets give zero."""
    for _ in range(max(1, trials // 20)):
        ctx = _space(rng, nmax=3)
        P = _poly(rng, ctx, int(rng.integers(1, 5)))
        target = _pts(rng, ctx, 1)[0]
        x0, d = approx.best_approx_point(P, target, grid_k=3, seed=rng.integers(2**32))
        if not hull.member(P, x0).inside:
            return False, "best approximation is not a member"
        inside = hull.hull_sample(P, 1, rng.integers(2**32))[0]
        _, d0 = approx.best_approx_point(P, inside, grid_k=3)
        if d0 > 1e-6:
            return False, f"interior target got distance {d0}"
    return True, ""


def check_best_approx_monotone(rng, trials):
    """Doubling the sample exponent never worsens the approximation."""
    for _ in range(max(1, trials // 20)):
        ctx = _space(rng, nmax=3)
        P = _poly(rng, ctx, int(rng.integers(2, 5)))
        target = _pts(rng, ctx, 1)[0]
        seed = rng.integers(2**32)
        _, d1 = approx.best_approx_point(P, target, grid_k=2, seed=seed)
        _, d2 = approx.best_approx_point(P, target, grid_k=4, seed=seed)
        if d2 > d1 + TOL:
            return False, f"distance rose from {d1} to {d2}"
    return True, ""


def check_fixpoint_contraction(rng, trials):
    """The shipped contraction class reaches tolerance; bigger budgets never
    hurt."""
    ctx = _space(rng, nmax=3)
    P = _poly(rng, ctx, 3)
    target = hull.hull_sample(P, 1, rng.integers(2**32))[0]
    f = approx.SelfMap.contraction(P, target, rate=0.5)
    seed = int(rng.integers(2**32))
    res = approx.fixpoint_search(f, tol=1e-3, budget=600, seed=seed)
    if not res.found:
        return False, f"contraction stuck at residual {res.residual}"
    small = approx.fixpoint_search(f, tol=1e-12, budget=60, seed=seed)
    large = approx.fixpoint_search(f, tol=1e-12, budget=600, seed=seed)
    if large.residual > small.residual + TOL:
        return False, "residual increased with budget"
    if core.maxplus_dist(ctx, res.point, target) > 1e-2:
        return False, "fixed point far from the contraction target"
    return True, ""


def check_svg_determinism(rng, trials):
    """Identical render calls produce byte-identical SVG."""
    ctx = Space(np.ones(2))
    scene = render.Scene(ctx, (-4.0, 4.0, -4.0, 4.0), resolution=32)
    a = render.svg_document(scene, [render.render_ball(scene, (0.0, 0.0), 2.0)])
    b = render.svg_document(scene, [render.render_ball(scene, (0.0, 0.0), 2.0)])
    if a != b:
        return False, "outputs differ between runs"
    return True, ""


def check_ball_trace_corners(rng, trials):
    """The traced unit-ball outline matches the exact hexagon within a pixel."""
    ctx = Space(np.ones(2))
    scene = render.Scene(ctx, (-4.0, 4.0, -4.0, 4.0), resolution=64)
    loops = render.ball_trace(scene, (0.0, 0.0), 2.0)
    if len(loops) != 1:
        return False, f"expected one loop, got {len(loops)}"
    corners = render.simplify_polyline(loops[0], 0.5 / scene.resolution)
    expected = [(0, 2), (2, 2), (2, 0), (0, -2), (-2, -2), (-2, 0)]
    px = 1.0 / scene.resolution
    for e in expected:
        if min(np.hypot(c[0] - e[0], c[1] - e[1]) for c in corners) > px:
            return False, f"corner {e} missing from the trace"
    return True, ""


CHECKS = [
    ("unit-box-bounds", check_unit_box_bounds),
    ("join-upper-meet-lower", check_join_upper_meet_lower),
    ("upper-subadditive-homogeneous", check_upper_subadditive_homogeneous),
    ("maxplus-norm-axioms", check_maxplus_norm_axioms),
    ("norm-sandwich", check_norm_sandwich),
    ("abs-value-norm-drop", check_abs_value_norm_drop),
    ("split-at-join", check_split_at_join),
    ("gauge-invariance", check_gauge_invariance),
    ("lattice-ops-lipschitz", check_lattice_ops_lipschitz),
    ("geodesic-isometry", check_geodesic_isometry),
    ("segment-additivity", check_segment_additivity),
    ("segment-halves", check_segment_halves),
    ("comparable-witness", check_comparable_witness),
    ("geodesic-injective", check_geodesic_injective),
    ("chain-monotone", check_chain_monotone),
    ("midpoint-equidistant", check_midpoint_equidistant),
    ("span-antisymmetry", check_span_antisymmetry),
    ("clamp-endpoints", check_clamp_endpoints),
    ("hull-monotone-idempotent", check_hull_monotone_idempotent),
    ("segment-recursion", check_segment_recursion),
    ("quasiconvex-metric", check_quasiconvex_metric),
    ("ball-convexity", check_ball_convexity),
    ("join-midpoint-closure", check_join_midpoint_closure),
    ("member-grid-oracle", check_member_grid_oracle),
    ("diameter-bound", check_diameter_bound),
    ("ball-polytope-agreement", check_ball_polytope_agreement),
    ("hausdorff-axioms", check_hausdorff_axioms),
    ("hausdorff-norm-sandwich", check_hausdorff_norm_sandwich),
    ("hull-lipschitz", check_hull_lipschitz),
    ("neighborhood-sandwich", check_neighborhood_sandwich),
    ("hull-of-diameter", check_hull_of_diameter),
    ("ball-join", check_ball_join),
    ("interior-convexity", check_interior_convexity),
    ("best-approx-member", check_best_approx_member),
    ("best-approx-monotone", check_best_approx_monotone),
    ("fixpoint-contraction", check_fixpoint_contraction),
    ("svg-determinism", check_svg_determinism),
    ("ball-trace-corners", check_ball_trace_corners),
]


def run_checks(seed=0, trials: int = 200, names=None):
    """Run (a filtered subset of) all checks; returns [(name, ok, detail)]."""
    results = []
    for idx, (name, fn) in enumerate(CHECKS):
        if names is not None and name not in names:
            continue
        rng = np.random.default_rng((seed, idx))
        ok, detail = fn(rng, trials)
        results.append((name, ok, detail))
    return results
