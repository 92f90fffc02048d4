import math

import numpy as np
import pytest

from cheegerpoly import make_polygon, random_convex_ngon, regular_ngon
from cheegerpoly.cheeger import cheeger_constant
from cheegerpoly.geometry import GeometryError

# filled in by test_acceptance.py, printed at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    # first calls compile (or load) the numba kernels; keep that out of timings
    from cheegerpoly import align, hausdorff_boundary, symmetric_difference_area

    p = random_convex_ngon(5, 1)
    cheeger_constant(p)
    hausdorff_boundary(p, regular_ngon(5))
    symmetric_difference_area(p, regular_ngon(5))
    align(p, regular_ngon(5), "hausdorff", n_angles=8, n_starts=1)
    align(p, regular_ngon(5), "l1", n_angles=8, n_starts=1)


@pytest.fixture
def square():
    return make_polygon([(0, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture
def rectangle():
    """Unit-area 2 x 0.5 rectangle."""
    return make_polygon([(0, 0), (2, 0), (2, 0.5), (0, 0.5)])


def rectangle_radius() -> float:
    # (2 - 2r)(0.5 - 2r) = pi r^2  <=>  (4 - pi) r^2 - 5 r + 1 = 0, smaller root
    a = 4 - math.pi
    return (5 - math.sqrt(25 - 4 * a)) / (2 * a)


def star_polygon(rng: np.random.Generator, n: int, rmin: float = 0.3):
    """Random simple (star-shaped, usually nonconvex) polygon, or None if degenerate."""
    t = np.sort(rng.uniform(0, 2 * math.pi, n))
    r = rng.uniform(rmin, 1.0, n)
    try:
        return make_polygon(np.column_stack([r * np.cos(t), r * np.sin(t)]))
    except GeometryError:
        return None


def random_motion_params(rng: np.random.Generator):
    return float(rng.uniform(0, 2 * math.pi)), tuple(rng.uniform(-3, 3, 2)), bool(rng.integers(2))
