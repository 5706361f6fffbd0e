"""Geodesic structure: spans, evaluation, midpoints, dyadic chains."""

import numpy as np
import pytest

from maxplus import (
    DomainError,
    Space,
    breakpoints,
    dyadic_chain,
    maxplus_dist,
    midpoint,
    midpoint_chain,
    point_at,
    point_at_clamped,
    point_at_fraction,
    span,
)

from conftest import rand_space


class TestSpan:
    def test_example(self, ctx2):
        sp = span(ctx2, [0, 2], [2, 0])
        assert (sp.t_min, sp.t_max) == (-2, 2)
        assert sp.length == 4

    def test_degenerate(self, ctx2):
        sp = span(ctx2, [1, 1], [1, 1])
        assert (sp.t_min, sp.t_max) == (0, 0)

    def test_antisymmetry(self, rng):
        for _ in range(100):
            ctx = rand_space(rng)
            x1, x2 = rng.uniform(-5, 5, (2, ctx.n))
            sp, sq = span(ctx, x1, x2), span(ctx, x2, x1)
            assert sp.t_max == pytest.approx(-sq.t_min, abs=1e-12)
            assert sp.t_min == pytest.approx(-sq.t_max, abs=1e-12)

    def test_length_is_distance(self, rng):
        for _ in range(100):
            ctx = rand_space(rng)
            x1, x2 = rng.uniform(-5, 5, (2, ctx.n))
            sp = span(ctx, x1, x2)
            assert sp.length == pytest.approx(maxplus_dist(ctx, x1, x2), abs=1e-12)


class TestClampedPath:
    def test_clamps_to_first_endpoint(self, ctx2):
        assert np.array_equal(point_at_clamped(ctx2, [0, 2], [2, 0], -5), [0, 2])

    def test_join_at_zero(self, ctx2):
        assert np.array_equal(point_at_clamped(ctx2, [0, 2], [2, 0], 0), [2, 2])

    def test_clamps_to_second_endpoint(self, ctx2):
        assert np.array_equal(point_at_clamped(ctx2, [0, 2], [2, 0], 5), [2, 0])


class TestPointAt:
    def test_endpoint_and_join_values(self, ctx2):
        sp = span(ctx2, [0, 2], [2, 0])
        assert np.array_equal(point_at(ctx2, sp, -2), [0, 2])
        assert np.array_equal(point_at(ctx2, sp, 0), [2, 2])
        assert np.array_equal(point_at(ctx2, sp, 2), [2, 0])

    def test_interior_value_and_step(self, ctx2):
        sp = span(ctx2, [0, 2], [2, 0])
        z = point_at(ctx2, sp, -1)
        assert np.array_equal(z, [1, 2])
        assert maxplus_dist(ctx2, point_at(ctx2, sp, -2), z) == 1

    def test_degenerate_at_zero(self, ctx2):
        sp = span(ctx2, [1, 1], [1, 1])
        assert np.array_equal(point_at(ctx2, sp, 0), [1, 1])

    def test_domain_error(self, ctx2):
        sp = span(ctx2, [0, 2], [2, 0])
        with pytest.raises(DomainError):
            point_at(ctx2, sp, 2.5)
        with pytest.raises(DomainError):
            point_at(ctx2, sp, -2.5)

    def test_isometry_random(self, rng):
        for _ in range(300):
            ctx = rand_space(rng)
            x1, x2 = rng.uniform(-5, 5, (2, ctx.n))
            sp = span(ctx, x1, x2)
            t1, t2 = rng.uniform(sp.t_min, sp.t_max, 2)
            d = maxplus_dist(ctx, point_at(ctx, sp, t1), point_at(ctx, sp, t2))
            assert d == pytest.approx(abs(t1 - t2), abs=1e-9 * (1 + sp.length))


class TestFraction:
    def test_half_is_join_here(self, ctx2):
        assert np.array_equal(point_at_fraction(ctx2, [0, 2], [2, 0], 0.5), [2, 2])

    def test_endpoints(self, ctx2):
        assert np.array_equal(point_at_fraction(ctx2, [0, 2], [2, 0], 0), [0, 2])
        assert np.array_equal(point_at_fraction(ctx2, [0, 2], [2, 0], 1), [2, 0])

    def test_domain_error(self, ctx2):
        with pytest.raises(DomainError):
            point_at_fraction(ctx2, [0, 2], [2, 0], 1.5)

    def test_scaled_isometry(self, rng):
        for _ in range(100):
            ctx = rand_space(rng)
            x1, x2 = rng.uniform(-5, 5, (2, ctx.n))
            s, t = rng.uniform(0, 1, 2)
            d = maxplus_dist(
                ctx,
                point_at_fraction(ctx, x1, x2, s),
                point_at_fraction(ctx, x1, x2, t),
            )
            want = abs(s - t) * maxplus_dist(ctx, x1, x2)
            assert d == pytest.approx(want, abs=1e-9 * (1 + want))


class TestMidpoint:
    def test_example(self, ctx2):
        assert np.array_equal(midpoint(ctx2, [0, 2], [2, 0]), [2, 2])

    def test_degenerate(self, ctx2):
        assert np.array_equal(midpoint(ctx2, [1, 3], [1, 3]), [1, 3])

    def test_comparable_example(self, ctx2):
        assert np.array_equal(midpoint(ctx2, [0, 0], [2, 2]), [1, 1])

    def test_symmetry_and_equidistance(self, rng):
        for _ in range(200):
            ctx = rand_space(rng)
            x1, x2 = rng.uniform(-5, 5, (2, ctx.n))
            m = midpoint(ctx, x1, x2)
            d = maxplus_dist(ctx, x1, x2)
            assert maxplus_dist(ctx, x1, m) == pytest.approx(d / 2, abs=1e-9)
            assert maxplus_dist(ctx, x2, m) == pytest.approx(d / 2, abs=1e-9)
            assert np.allclose(m, midpoint(ctx, x2, x1), atol=1e-12)

    def test_comparable_order(self, rng):
        for _ in range(100):
            ctx = rand_space(rng)
            x1 = rng.uniform(-5, 5, ctx.n)
            x2 = x1 + rng.uniform(0, 3, ctx.n)
            m = midpoint(ctx, x1, x2)
            assert ctx.leq(x1, m) and ctx.leq(m, x2)


class TestDyadicChain:
    def test_k1_is_midpoint(self, ctx2):
        chain = dyadic_chain(ctx2, [0, 2], [2, 0], 1)
        assert np.array_equal(chain, [[0, 2], [2, 2], [2, 0]])

    def test_k2_example(self, ctx2):
        chain = dyadic_chain(ctx2, [0, 2], [2, 0], 2)
        assert np.array_equal(chain, [[0, 2], [1, 2], [2, 2], [2, 1], [2, 0]])

    def test_k0_endpoints(self, ctx2):
        chain = dyadic_chain(ctx2, [0, 2], [2, 0], 0)
        assert np.array_equal(chain, [[0, 2], [2, 0]])

    def test_equal_spacing(self, rng):
        for _ in range(50):
            ctx = rand_space(rng)
            x1, x2 = rng.uniform(-5, 5, (2, ctx.n))
            k = int(rng.integers(1, 5))
            chain = dyadic_chain(ctx, x1, x2, k)
            d = maxplus_dist(ctx, x1, x2)
            for a, b in zip(chain[:-1], chain[1:]):
                assert maxplus_dist(ctx, a, b) == pytest.approx(d / 2**k, abs=1e-9)

    def test_recursive_route_matches(self, rng):
        for _ in range(20):
            ctx = rand_space(rng)
            x1, x2 = rng.uniform(-5, 5, (2, ctx.n))
            k = int(rng.integers(1, 7))
            direct = dyadic_chain(ctx, x1, x2, k)
            rec = midpoint_chain(ctx, x1, x2, k)
            diam = max(maxplus_dist(ctx, x1, x2), 1.0)
            assert np.abs(direct - rec).max() <= 1e-9 * diam

    def test_negative_k_rejected(self, ctx2):
        with pytest.raises(DomainError):
            dyadic_chain(ctx2, [0, 2], [2, 0], -1)


class TestBreakpoints:
    def test_hexagon_edge(self, ctx2):
        sp = span(ctx2, [0, 2], [2, 0])
        ts = breakpoints(ctx2, sp)
        pts = [point_at(ctx2, sp, t) for t in ts]
        assert np.allclose(pts, [[0, 2], [2, 2], [2, 0]])

    def test_three_branch_vertex(self, ctx2):
        sp = span(ctx2, [-8, 0], [-2, 3])
        pts = [point_at(ctx2, sp, t) for t in breakpoints(ctx2, sp)]
        assert np.allclose(pts, [[-8, 0], [-5, 0], [-2, 3]])

    def test_piecewise_affine_between_breakpoints(self, rng):
        for _ in range(50):
            ctx = Space(rng.uniform(0.5, 2.0, 2))
            x1, x2 = rng.uniform(-4, 4, (2, 2))
            sp = span(ctx, x1, x2)
            ts = breakpoints(ctx, sp)
            for a, b in zip(ts[:-1], ts[1:]):
                mid_t = 0.5 * (a + b)
                lin = 0.5 * (point_at(ctx, sp, a) + point_at(ctx, sp, b))
                assert np.allclose(point_at(ctx, sp, mid_t), lin, atol=1e-9)
