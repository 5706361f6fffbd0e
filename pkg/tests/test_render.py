"""SVG rendering: exact breakpoint polylines, traced regions, determinism."""

import numpy as np
import pytest

from maxplus import DimensionMismatchError, Polytope, Space
from maxplus.geodesic import breakpoints, point_at, span
from maxplus.render import (
    Scene,
    ball_trace,
    geodesic_polyline,
    hull_outline,
    render_ball,
    render_extensions,
    render_geodesic,
    render_polytope,
    simplify_polyline,
    svg_document,
    trace_level,
    viewport_for,
)


@pytest.fixture
def scene(ctx2):
    return Scene(ctx2, (-4.0, 4.0, -4.0, 4.0), resolution=64)


def corners_of(loop, res):
    return simplify_polyline(loop, 0.5 / res)


def has_vertex(polyline, p, tol):
    return any(np.hypot(a - p[0], b - p[1]) <= tol for a, b in polyline)


class TestScene:
    def test_requires_2d(self):
        with pytest.raises(DimensionMismatchError):
            Scene(Space([1.0, 1.0, 1.0]), (-1, 1, -1, 1))

    def test_viewport_validated(self, ctx2):
        with pytest.raises(ValueError):
            Scene(ctx2, (1, -1, 0, 1))

    def test_pixel_mapping_flips_y(self, scene):
        assert scene.to_px((-4, 4)) == (0, 0)
        assert scene.to_px((4, -4)) == (512, 512)

    def test_viewport_for(self):
        vp = viewport_for([[0, 0], [2, 3]], pad=1.0)
        assert vp == (-1, 3, -1, 4)


class TestTraceLevel:
    def test_square_region(self):
        xs = ys = np.linspace(-2, 2, 41)
        gx, gy = np.meshgrid(xs, ys, indexing="ij")
        F = np.maximum(np.abs(gx), np.abs(gy)) - 1.0  # unit square boundary
        loops = trace_level(xs, ys, F, 1e-12)
        assert len(loops) == 1
        corners = corners_of(loops[0], 10)
        for c in [(1, 1), (1, -1), (-1, 1), (-1, -1)]:
            assert has_vertex(corners, c, 0.11)

    def test_empty_field(self):
        xs = ys = np.linspace(0, 1, 5)
        F = np.ones((5, 5))
        assert trace_level(xs, ys, F, 0.0) == []


class TestSimplify:
    def test_collinear_points_dropped(self):
        line = [(0, 0), (0.5, 0), (1, 0), (1, 0.5), (1, 1)]
        assert simplify_polyline(line, 1e-6) == [(0, 0), (1, 0), (1, 1)]

    def test_closed_ring(self):
        ring = [(0, 0), (1, 0), (2, 0), (2, 2), (0, 2), (0, 1), (0, 0)]
        slim = simplify_polyline(ring, 1e-6)
        assert slim[0] == slim[-1]
        assert len(slim) == 5


class TestBallFigure:
    def test_hexagon_trace_vertices(self, scene):
        loops = ball_trace(scene, (0, 0), 2.0)
        assert len(loops) == 1
        corners = corners_of(loops[0], scene.resolution)
        expected = [(0, 2), (2, 2), (2, 0), (0, -2), (-2, -2), (-2, 0)]
        px = 1.0 / scene.resolution
        for e in expected:
            assert has_vertex(corners, e, px), f"missing corner {e}"
        # and nothing else survives simplification: 6 corners + closure
        assert len(corners) == 7

    def test_hexagon_from_hull_raster(self, scene, ctx2):
        P = Polytope(ctx2, [[0, 2], [2, 0], [-2, -2]])
        loops = hull_outline(scene, P)
        assert len(loops) == 1
        corners = corners_of(loops[0], scene.resolution)
        px = 1.0 / scene.resolution
        for e in [(0, 2), (2, 2), (2, 0), (0, -2), (-2, -2), (-2, 0)]:
            assert has_vertex(corners, e, px)

    def test_ball_svg_contains_hexagon_polygon(self, scene):
        svg = svg_document(scene, [render_ball(scene, (0, 0), 2.0)])
        assert svg.count("<polygon") == 1
        assert svg.count("<circle") == 3  # the three generators


class TestGeodesicFigure:
    def test_polyline_passes_through_breakpoints(self, ctx2):
        poly = geodesic_polyline(ctx2, [0, 2], [2, 0])
        assert len(poly) >= 128
        for p in [(0, 2), (2, 2), (2, 0)]:
            assert has_vertex(poly, p, 1e-12)

    def test_three_branch_polytope_breakpoints(self, ctx2):
        gens = [[-8, 0], [-2, 3], [-5, -4]]
        polys = {
            (0, 1): [(-8, 0), (-5, 0), (-2, 3)],
            (0, 2): [(-8, 0), (-5, 0), (-5, -4)],
            (1, 2): [(-2, 3), (-5, 0), (-5, -4)],
        }
        for (i, j), expected in polys.items():
            sp = span(ctx2, gens[i], gens[j])
            pts = [point_at(ctx2, sp, t) for t in breakpoints(ctx2, sp)]
            assert np.allclose(pts, expected)

    def test_extension_figure_breakpoints(self, ctx2):
        x1 = [-9, 3]
        for x3, expected in [
            ([0, 3], [(-9, 3), (-4, 3), (0, 3)]),
            ([-1, 6], [(-9, 3), (-4, 3), (-1, 6)]),
            ([-4, -2], [(-9, 3), (-4, 3), (-4, -2)]),
        ]:
            poly = geodesic_polyline(ctx2, x1, x3)
            for p in expected:
                assert has_vertex(poly, p, 1e-9)

    def test_extensions_share_prefix(self, ctx2):
        # every point of the segment to x2 lies on each extension polyline
        x1, x2 = [-9, 3], [-4, 3]
        prefix = geodesic_polyline(ctx2, x1, x2, samples=16)
        for x3 in ([0, 3], [-1, 6], [-4, -2]):
            ext = geodesic_polyline(ctx2, x1, x3, samples=512)
            for p in prefix:
                assert min(np.abs(ext - p).max(axis=1)) <= 2e-2

    def test_coincident_endpoints_render_marker(self, scene):
        frag = render_geodesic(scene, [1, 1], [1, 1])
        assert "<circle" in frag and "<polyline" not in frag


class TestDeterminism:
    def test_ball_bytes_identical(self, scene):
        a = svg_document(scene, [render_ball(scene, (0, 0), 2.0)])
        b = svg_document(scene, [render_ball(scene, (0, 0), 2.0)])
        assert a == b

    def test_polytope_bytes_identical(self, ctx2):
        sc = Scene(ctx2, (-10, 0, -6, 5), resolution=32)
        P = Polytope(ctx2, [[-8, 0], [-2, 3], [-5, -4]])
        assert render_polytope(sc, P) == render_polytope(sc, P)

    def test_extensions_bytes_identical(self, ctx2):
        sc = Scene(ctx2, (-10, 1, -3, 7), resolution=32)
        args = ([-9, 3], [[0, 3], [-1, 6], [-4, -2]])
        assert render_extensions(sc, *args) == render_extensions(sc, *args)


class TestSvgStructure:
    def test_document_shape(self, scene):
        svg = svg_document(scene, ["<g/>"])
        assert svg.startswith('<?xml version="1.0"')
        assert 'width="512" height="512"' in svg
        assert svg.rstrip().endswith("</svg>")

    def test_degenerate_polytope_renders(self, ctx2):
        sc = Scene(ctx2, (-10, 0, -6, 5), resolution=32)
        P = Polytope(ctx2, [[-8, 0], [-2, 3], [-5, -4]])
        frag = render_polytope(sc, P)
        assert frag.count("<polyline") >= 3  # the three exact branches
        assert frag.count("<circle") == 3
