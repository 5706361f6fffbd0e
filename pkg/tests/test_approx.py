"""Nearest-point search and fixed-point location."""

import numpy as np
import pytest

from maxplus import (
    Polytope,
    SelfMap,
    Space,
    ball_polytope_2d,
    best_approx_point,
    fixpoint_search,
    hull_sample,
    maxplus_dist,
    member,
)

from conftest import rand_space
from oracles import segment_scan_mindist


@pytest.fixture
def seg(ctx2):
    return Polytope(ctx2, [[0, 2], [2, 0]])


class TestBestApprox:
    def test_member_target_is_fixed(self, seg):
        x0, d = best_approx_point(seg, [1, 2], grid_k=3)
        assert d <= 1e-9
        assert np.allclose(x0, [1, 2], atol=1e-9)

    def test_segment_example(self, ctx2, seg):
        x0, d = best_approx_point(seg, [0, 0], grid_k=4)
        assert d == pytest.approx(2.0, abs=1e-6)
        assert member(seg, x0).inside
        scan = segment_scan_mindist(ctx2.u, [0, 2], [2, 0], np.array([0.0, 0.0]))
        assert d == pytest.approx(scan, abs=5e-3)

    def test_ball_example(self, ctx2):
        B = ball_polytope_2d(ctx2, [0, 0], 2)
        x0, d = best_approx_point(B, [3, 0], grid_k=4)
        assert d == pytest.approx(1.0, abs=1e-6)
        assert maxplus_dist(ctx2, x0, [2, 0]) <= 1e-6

    def test_result_is_member(self, rng):
        for _ in range(20):
            ctx = rand_space(rng, nmax=3)
            P = Polytope(ctx, rng.uniform(-2, 2, (int(rng.integers(1, 5)), ctx.n)))
            x0, d = best_approx_point(P, rng.uniform(-4, 4, ctx.n), grid_k=3,
                                      seed=int(rng.integers(2**32)))
            assert member(P, x0).inside
            assert d >= 0

    def test_monotone_in_grid_k(self, rng):
        for _ in range(20):
            ctx = rand_space(rng, nmax=3)
            P = Polytope(ctx, rng.uniform(-2, 2, (3, ctx.n)))
            target = rng.uniform(-4, 4, ctx.n)
            seed = int(rng.integers(2**32))
            _, d1 = best_approx_point(P, target, grid_k=2, seed=seed)
            _, d2 = best_approx_point(P, target, grid_k=4, seed=seed)
            assert d2 <= d1 + 1e-9

    def test_interior_targets_reach_zero(self, rng):
        for _ in range(20):
            ctx = rand_space(rng, nmax=3)
            P = Polytope(ctx, rng.uniform(-2, 2, (3, ctx.n)))
            target = hull_sample(P, 1, int(rng.integers(2**32)))[0]
            _, d = best_approx_point(P, target, grid_k=2)
            assert d <= 1e-9

    def test_grid_k_validated(self, seg):
        with pytest.raises(ValueError):
            best_approx_point(seg, [0, 0], grid_k=0)


class TestSelfMap:
    def test_affine_clamp_snaps_into_domain(self, seg):
        f = SelfMap.affine_clamp(seg, np.eye(2), [10.0, 10.0])
        y, snap = f.apply([0, 2])
        assert member(seg, y).inside
        assert snap > 1.0  # the raw image is far outside, and that is reported

    def test_contraction_kind_and_rate(self, seg):
        f = SelfMap.contraction(seg, [2, 2], rate=0.5)
        assert f.kind == "affine_clamp"
        with pytest.raises(ValueError):
            SelfMap.contraction(seg, [2, 2], rate=1.0)

    def test_coordinate_perturb_stays_inside(self, seg):
        f = SelfMap.coordinate_perturb(seg, amplitude=0.3, frequency=2.0)
        for z in hull_sample(seg, 10, seed=4):
            assert member(seg, f(z)).inside

    def test_user_table_exact_on_anchors(self, seg):
        anchors = hull_sample(seg, 4, seed=5)
        values = anchors[::-1].copy()
        f = SelfMap.user_table(seg, anchors, values)
        got, snap = f.apply(anchors[0])
        assert np.allclose(got, values[0], atol=1e-8)
        assert snap <= 1e-8

    def test_user_table_shape_validated(self, seg):
        with pytest.raises(ValueError):
            SelfMap.user_table(seg, [[0, 2]], [[0, 2], [2, 0]])

    def test_matrix_shape_validated(self, seg):
        with pytest.raises(ValueError):
            SelfMap.affine_clamp(seg, np.eye(3), [0, 0])

    def test_unknown_kind_rejected(self, seg):
        with pytest.raises(ValueError):
            SelfMap("warp", seg, lambda x: x)


class TestFixpoint:
    def test_identity_map(self, seg):
        f = SelfMap.affine_clamp(seg, np.eye(2), [0.0, 0.0])
        res = fixpoint_search(f, tol=1e-9, budget=100, seed=0)
        assert res.found
        assert res.residual <= 1e-9

    def test_constant_map(self, ctx2, seg):
        c = np.array([1.0, 2.0])  # a member of the segment
        f = SelfMap.affine_clamp(seg, np.zeros((2, 2)), c)
        res = fixpoint_search(f, tol=1e-9, budget=200, seed=0)
        assert res.found
        assert maxplus_dist(ctx2, res.point, c) <= 1e-6

    def test_contraction_reaches_target(self, ctx2):
        B = ball_polytope_2d(ctx2, [0, 0], 2)
        f = SelfMap.contraction(B, [0, 0], rate=0.5)
        res = fixpoint_search(f, tol=1e-3, budget=500, seed=1)
        assert res.found
        # Banach iteration oracle: x -> x/2 from any start converges to 0
        assert maxplus_dist(ctx2, res.point, [0, 0]) <= 5e-3

    def test_residual_monotone_in_budget(self, rng):
        ctx = rand_space(rng, n=2)
        P = Polytope(ctx, rng.uniform(-2, 2, (3, 2)))
        target = hull_sample(P, 1, seed=8)[0]
        f = SelfMap.contraction(P, target, rate=0.7)
        r_small = fixpoint_search(f, tol=1e-15, budget=40, seed=3).residual
        r_large = fixpoint_search(f, tol=1e-15, budget=400, seed=3).residual
        assert r_large <= r_small + 1e-12

    def test_not_found_reported(self, seg):
        # quarter-turn-ish map with a tiny budget: search must not lie
        f = SelfMap.coordinate_perturb(seg, amplitude=1.5, frequency=9.0)
        res = fixpoint_search(f, tol=1e-12, budget=5, seed=0)
        if not res.found:
            assert res.residual > 1e-12
        assert res.evals <= 5

    def test_parameters_validated(self, seg):
        f = SelfMap.contraction(seg, [2, 2])
        with pytest.raises(ValueError):
            fixpoint_search(f, tol=0.0)
        with pytest.raises(ValueError):
            fixpoint_search(f, budget=0)
