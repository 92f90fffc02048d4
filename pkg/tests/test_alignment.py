import math

import numpy as np
import pytest

from cheegerpoly import (
    RigidMotion,
    align,
    aligned_deficit_record,
    apply_motion,
    hausdorff_boundary,
    make_polygon,
    normalize_area,
    perturb_ngon,
    random_convex_ngon,
    regular_ngon,
    symmetric_difference_area,
)
from cheegerpoly.alignment import DEGENERATE_DEFICIT

from .conftest import random_motion_params, rectangle_radius


def centroid_identity(moving, fixed):
    return moving.translated(fixed.centroid - moving.centroid)


def spiked_hexagon(k):
    v = np.array(regular_ngon(6).vertices)
    v[0] *= k / np.hypot(*v[0])
    return make_polygon(v)


@pytest.mark.parametrize("metric", ["hausdorff", "l1"])
@pytest.mark.parametrize("seed", range(4))
def test_recovers_known_motion(metric, seed):
    rng = np.random.default_rng(seed)
    fixed = random_convex_ngon(5 + seed, seed)
    moving = apply_motion(fixed, RigidMotion(*random_motion_params(rng)))
    res = align(moving, fixed, metric)
    assert res.distance <= 1e-6 * fixed.scale
    moved = apply_motion(moving, res.motion)
    assert hausdorff_boundary(moved, fixed, 1e-9).estimate <= 1e-6


@pytest.mark.parametrize("n", [3, 4, 5, 6, 8, 12])
def test_regular_half_step_rotation(n):
    p = regular_ngon(n)
    q = apply_motion(p, RigidMotion(math.pi / n))
    assert align(q, p, "hausdorff").distance <= 1e-6
    assert align(q, p, "l1").distance <= 1e-6


def test_reported_distance_is_real():
    a, b = random_convex_ngon(6, 10), regular_ngon(6)
    for metric, fn in (("hausdorff", lambda x, y: hausdorff_boundary(x, y, 1e-9).estimate), ("l1", symmetric_difference_area)):
        res = align(a, b, metric)
        assert fn(apply_motion(a, res.motion), b) == pytest.approx(res.distance, abs=1e-6)


@pytest.mark.parametrize("seed", range(6))
def test_never_worse_than_centroid_identity(seed):
    a, b = random_convex_ngon(3 + seed, seed), random_convex_ngon(3 + seed, 100 + seed)
    start = centroid_identity(a, b)
    assert align(a, b, "hausdorff").distance <= hausdorff_boundary(start, b, 1e-9).estimate + 1e-7
    assert align(a, b, "l1").distance <= symmetric_difference_area(start, b) + 1e-12


def test_reflection_detected():
    # a chiral quadrilateral is only matched by its mirror image through a reflection
    p = make_polygon([(0, 0), (3, 0), (2.2, 1.3), (0.4, 2.1)])
    mirror = apply_motion(p, RigidMotion(0.4, (2, -1), True))
    res = align(mirror, p, "hausdorff")
    assert res.motion.reflect
    assert res.distance <= 1e-6


@pytest.mark.parametrize("seed", range(3))
def test_motion_invariance_of_optimum(seed):
    rng = np.random.default_rng(50 + seed)
    a, b = random_convex_ngon(6, 200 + seed), regular_ngon(6)
    d0 = align(a, b, "hausdorff").distance
    d1 = align(apply_motion(a, RigidMotion(*random_motion_params(rng))), b, "hausdorff").distance
    assert d1 == pytest.approx(d0, abs=2e-7 * a.scale)


@pytest.mark.parametrize("seed", range(3))
def test_finer_grid_agrees(seed):
    # the coarse grid is a heuristic; a 4x finer grid must not find a better basin
    a, b = random_convex_ngon(7, 300 + seed), regular_ngon(7)
    for metric in ("hausdorff", "l1"):
        coarse = align(a, b, metric).distance
        fine = align(a, b, metric, n_angles=2048).distance
        assert coarse <= fine + 1e-6


@pytest.mark.parametrize("k", [5, 20])
def test_spike_lower_bound(k):
    p = normalize_area(spiked_hexagon(k))
    ref = regular_ngon(6)
    d = align(p, ref, "hausdorff").distance
    assert d > 0
    assert d >= 0.5 * (p.diameter - ref.diameter) - 1e-7
    if k >= 20:
        assert d >= 1


def test_unknown_metric():
    with pytest.raises(ValueError):
        align(regular_ngon(4), regular_ngon(4), "frechet")


class TestRecord:
    def test_regular(self):
        rec = aligned_deficit_record(regular_ngon(6), "hex")
        assert abs(rec.deficit) <= DEGENERATE_DEFICIT
        assert rec.hd_aligned <= 1e-6
        assert rec.ratio_hd is None and rec.ratio_l1 is None
        assert rec.cheeger_regular
        assert rec.shape_id == "hex"

    def test_perturbed_hexagon(self):
        rec = aligned_deficit_record(perturb_ngon(6, 0.05))
        assert rec.deficit > 0
        assert 0 < rec.ratio_hd < math.inf and 0 < rec.ratio_l1 < math.inf
        assert rec.ratio_hd == pytest.approx(rec.hd_aligned**2 / rec.deficit)

    def test_rectangle(self, rectangle):
        rec = aligned_deficit_record(rectangle)
        assert rec.deficit == pytest.approx(1 / rectangle_radius() - (2 + math.sqrt(math.pi)), abs=1e-10)
        assert rec.n == 4
        assert rec.diameter == pytest.approx(math.sqrt(4.25))
        assert math.isfinite(rec.ratio_hd) and math.isfinite(rec.ratio_l1)

    def test_rescales_to_unit_area(self):
        p = random_convex_ngon(5, 4)
        a = aligned_deficit_record(p)
        b = aligned_deficit_record(p.scaled(3.0))
        assert b.deficit == pytest.approx(a.deficit, abs=1e-12)
        assert b.hd_aligned == pytest.approx(a.hd_aligned, abs=1e-6)

    def test_to_dict(self):
        d = aligned_deficit_record(regular_ngon(4)).to_dict()
        assert set(d) == {"n", "deficit", "hd_aligned", "l1_aligned", "diameter", "ratio_hd", "ratio_l1",
                          "cheeger_regular", "shape_id"}
