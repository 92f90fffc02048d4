import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cheegerpoly import (
    CollinearVertex,
    DegenerateEdge,
    NonConvex,
    NonSimple,
    RigidMotion,
    apply_motion,
    isoperimetric_gap,
    make_polygon,
    normalize_area,
    polygon_from_json,
    random_convex_ngon,
    regular_ngon,
    tau,
    tentacle_polygon,
)
from cheegerpoly import geometry as g

seeds = st.integers(min_value=0, max_value=2**32 - 1)
sides = st.integers(min_value=3, max_value=8)
motions = st.builds(
    RigidMotion,
    st.floats(-10, 10),
    st.tuples(st.floats(-100, 100), st.floats(-100, 100)),
    st.booleans(),
)


class TestMakePolygon:
    def test_unit_square(self, square):
        assert square.n == 4
        assert square.area == 1.0

    def test_bowtie(self):
        with pytest.raises(NonSimple):
            make_polygon([(0, 0), (1, 1), (1, 0), (0, 1)])

    def test_collinear_names_index(self):
        with pytest.raises(CollinearVertex) as err:
            make_polygon([(0, 0), (1, 0), (2, 0), (1, 1)])
        assert err.value.index == 1

    def test_repeated_vertex(self):
        with pytest.raises(DegenerateEdge) as err:
            make_polygon([(0, 0), (1, 0), (1, 0), (0, 1)])
        assert err.value.index == 1

    def test_too_few_points(self):
        with pytest.raises(ValueError):
            make_polygon([(0, 0), (1, 0)])

    def test_clockwise_is_reversed(self):
        p = make_polygon([(0, 0), (0, 1), (1, 1), (1, 0)])
        assert p.area == pytest.approx(1.0)
        assert np.array_equal(p.vertices, [[1, 0], [1, 1], [0, 1], [0, 0]])

    def test_vertices_read_only(self, square):
        with pytest.raises(ValueError):
            square.vertices[0, 0] = 5.0

    def test_nonconvex_simple_accepted(self):
        p = make_polygon([(0, 0), (2, 0), (2, 2), (1, 0.5), (0, 2)])
        assert not p.is_convex

    @given(seeds, sides)
    @settings(max_examples=50, deadline=None)
    def test_json_round_trip_bit_exact(self, seed, n):
        p = random_convex_ngon(n, seed)
        q = polygon_from_json(p.to_json())
        assert np.array_equal(p.vertices, q.vertices)

    def test_json_shape(self, square):
        assert json.loads(square.to_json()) == {"vertices": [[0, 0], [1, 0], [1, 1], [0, 1]]}


class TestMeasures:
    def test_square(self, square):
        assert g.area(square) == 1
        assert g.perimeter(square) == 4
        assert np.allclose(g.inner_angles(square), math.pi / 2)
        assert g.is_convex(square)
        assert g.diameter(square) == pytest.approx(math.sqrt(2))

    def test_triangle_area(self):
        assert make_polygon([(0, 0), (1, 0), (0, 1)]).area == 0.5

    def test_thin_rectangle_diameter(self):
        p = make_polygon([(0, 0), (10, 0), (10, 0.1), (0, 0.1)])
        assert p.diameter == pytest.approx(math.sqrt(100.01), rel=1e-15)

    @pytest.mark.parametrize("n", range(3, 13))
    def test_regular_ngon(self, n):
        p = regular_ngon(n)
        assert p.area == pytest.approx(1.0, abs=1e-12)
        assert p.perimeter == pytest.approx(2 * math.sqrt(n * math.tan(math.pi / n)), abs=1e-12)
        assert np.ptp(p.edge_lengths) < 1e-12
        assert np.allclose(p.centroid, 0, atol=1e-14)
        assert p.vertices[0, 1] == 0 and p.vertices[0, 0] > 0
        assert p.is_convex

    def test_regular_square_and_triangle(self):
        sq = regular_ngon(4)
        assert sq.vertices[0] == pytest.approx([math.sqrt(0.5), 0])
        assert sq.edge_lengths == pytest.approx([1.0] * 4)
        tri = regular_ngon(3)
        assert tri.edge_lengths == pytest.approx([2 / 3**0.25] * 3)
        assert regular_ngon(6).perimeter == pytest.approx(3.7224, abs=5e-5)

    def test_regular_ngon_needs_three(self):
        with pytest.raises(ValueError):
            regular_ngon(2)

    def test_hexagon_angles(self):
        assert np.allclose(regular_ngon(6).inner_angles, 2 * math.pi / 3)

    @pytest.mark.parametrize("k", [2, 10, 100])
    def test_tentacle_reflex(self, k):
        t = tentacle_polygon(k)
        assert not t.is_convex
        assert t.inner_angles.max() > math.pi
        assert t.diameter >= k

    @given(seeds, sides)
    @settings(max_examples=100, deadline=None)
    def test_angle_sum(self, seed, n):
        p = random_convex_ngon(n, seed)
        assert p.inner_angles.sum() == pytest.approx((n - 2) * math.pi, abs=1e-9)

    def test_angle_sum_nonconvex(self):
        p = tentacle_polygon(7)
        assert p.inner_angles.sum() == pytest.approx(4 * math.pi, abs=1e-9)

    def test_normalize_area(self, square):
        big = square.scaled(2)
        assert np.allclose(normalize_area(big).vertices, square.vertices)
        assert np.array_equal(normalize_area(square).vertices, square.vertices)

    @given(seeds, sides, st.floats(0.01, 100))
    @settings(max_examples=50, deadline=None)
    def test_scaling(self, seed, n, lam):
        p = random_convex_ngon(n, seed)
        q = p.scaled(lam)
        assert q.area == pytest.approx(lam**2 * p.area, rel=1e-12)
        assert q.perimeter == pytest.approx(lam * p.perimeter, rel=1e-12)
        assert tau(q) == pytest.approx(tau(p), rel=1e-10, abs=1e-12)


class TestTau:
    def test_square(self, square):
        assert tau(square) == pytest.approx(4 - math.pi, abs=1e-14)

    def test_hexagon(self):
        assert tau(regular_ngon(6)) == pytest.approx(6 * (math.tan(math.pi / 6) - math.pi / 6), abs=1e-13)
        assert tau(regular_ngon(6)) == pytest.approx(0.32251, abs=5e-6)

    def test_nonconvex(self):
        with pytest.raises(NonConvex):
            tau(tentacle_polygon(10))

    def test_direct_definition(self):
        # tan(a) - a summed over half turning angles, written out independently
        p = random_convex_ngon(7, 11)
        expected = sum(math.tan((math.pi - gam) / 2) - (math.pi - gam) / 2 for gam in p.inner_angles)
        assert tau(p) == pytest.approx(expected, rel=1e-12)


class TestIsoperimetricGap:
    @pytest.mark.parametrize("n", range(3, 13))
    def test_regular_is_circumscribed(self, n):
        assert abs(isoperimetric_gap(regular_ngon(n))) <= 1e-10

    def test_square(self, square):
        assert abs(isoperimetric_gap(square)) <= 1e-10

    def test_rectangle(self, rectangle):
        assert isoperimetric_gap(rectangle) == pytest.approx(2.25, abs=1e-12)

    def test_triangles_are_circumscribed(self):
        for seed in range(200):
            assert abs(isoperimetric_gap(random_convex_ngon(3, seed))) <= 1e-10

    @pytest.mark.slow
    @pytest.mark.parametrize("n", range(3, 9))
    def test_nonnegative_on_ensemble(self, n):
        from cheegerpoly import splitmix64

        worst = min(isoperimetric_gap(random_convex_ngon(n, splitmix64(7, i))) for i in range(10_000))
        assert worst >= -1e-10


class TestRigidMotion:
    @given(motions)
    def test_inverse(self, m):
        x = np.array([[0.3, -1.2], [5.0, 2.0]])
        for y in (m.compose(m.inverse()).apply(x), m.inverse().compose(m).apply(x)):
            assert np.allclose(y, x, atol=1e-9 * max(1, np.abs(m.translation).max()))

    @given(motions, motions)
    def test_compose_matches_sequential(self, m1, m2):
        x = np.array([[0.3, -1.2], [5.0, 2.0]])
        assert np.allclose(m1.compose(m2).apply(x), m1.apply(m2.apply(x)), atol=1e-9)

    def test_identity(self, square):
        assert np.array_equal(apply_motion(square, RigidMotion.identity()).vertices, square.vertices)

    @pytest.mark.parametrize("n", [3, 5, 6])
    def test_symmetry_of_regular(self, n):
        p = regular_ngon(n)
        q = apply_motion(p, RigidMotion(2 * math.pi / n))
        assert np.allclose(np.roll(q.vertices, 1, axis=0), p.vertices, atol=1e-14)

    @given(seeds, sides, motions)
    @settings(max_examples=100, deadline=None)
    def test_invariants(self, seed, n, m):
        p = random_convex_ngon(n, seed)
        q = apply_motion(p, m)
        assert q.area > 0
        assert q.area == pytest.approx(p.area, abs=1e-10)
        assert q.perimeter == pytest.approx(p.perimeter, abs=1e-10)
        assert q.diameter == pytest.approx(p.diameter, abs=1e-10)
        assert tau(q) == pytest.approx(tau(p), abs=1e-10)

    def test_reflection_keeps_orientation(self, square):
        q = apply_motion(square, RigidMotion(0.3, (1, 2), True))
        assert q.area == pytest.approx(1.0)


def test_point_queries(square):
    pts = [(0.5, 0.5), (2, 2), (0.5, -0.25)]
    assert g.point_in_polygon(pts, square).tolist() == [True, False, False]
    assert g.signed_clearance(pts, square) == pytest.approx([0.5, -math.sqrt(2), -0.25])
