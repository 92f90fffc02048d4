"""Rigid registration of polygons under the boundary Hausdorff and L1 distances."""

from __future__ import annotations

import itertools
import math
from dataclasses import asdict, dataclass
from typing import NamedTuple

import numpy as np
from scipy.optimize import minimize

from . import _kernels
from .cheeger import cheeger_deficit, is_cheeger_regular
from .geometry import Polygon, RigidMotion, normalize_area, regular_ngon
from .metrics import DEFAULT_REL_TOL, convex_pieces, pack_pieces

METRICS = ("hausdorff", "l1")
DEGENERATE_DEFICIT = 1e-12

# poll directions in (angle, tx, ty): coordinate axes plus the cube corners
_DIRECTIONS = np.array(
    [d for d in itertools.product((-1.0, 0.0, 1.0), repeat=3) if sum(map(abs, d)) in (1, 3)]
)
_DIRECTIONS /= np.linalg.norm(_DIRECTIONS, axis=1, keepdims=True)


class Alignment(NamedTuple):
    motion: RigidMotion
    distance: float


class _Objective:
    """metric(rho(moving), fixed) for motions rotating about the moving centroid."""

    def __init__(self, moving: Polygon, fixed: Polygon, metric: str, err_tol: float):
        if metric not in METRICS:
            raise ValueError(f"metric must be one of {METRICS}")
        self.metric = metric
        self.err_tol = err_tol
        self.c_moving = moving.centroid
        self.c_fixed = fixed.centroid
        self.fixed = np.ascontiguousarray(fixed.vertices)
        self.fixed_area = fixed.area
        self.moving_area = moving.area
        self.base = np.ascontiguousarray(moving.vertices - self.c_moving)
        if metric == "l1":
            flat, self.off = pack_pieces(convex_pieces(moving))
            self.base = flat - self.c_moving
            self.fixed_flat, self.fixed_off = pack_pieces(convex_pieces(fixed))
        self.radius = float(np.hypot(*(moving.vertices - self.c_moving).T).max())

    def motion(self, angle: float, tx: float, ty: float, reflect: bool) -> RigidMotion:
        lin = RigidMotion(angle, (0.0, 0.0), reflect)
        t = self.c_fixed + np.array([tx, ty]) - lin.matrix @ self.c_moving
        return RigidMotion(angle, tuple(t), reflect)

    def points(self, angle, tx, ty, reflect) -> np.ndarray:
        return _kernels.rigid_transform(
            self.base, float(angle), bool(reflect), self.c_fixed[0] + tx, self.c_fixed[1] + ty
        )

    def with_reflection(self, reflect: bool):
        def g(angle, tx, ty, tol=None):
            return self(angle, tx, ty, reflect, tol=tol)

        return g

    def __call__(self, angle, tx, ty, reflect, tol=None) -> float:
        pts = self.points(angle, tx, ty, reflect)
        if self.metric == "hausdorff":
            return _kernels.hausdorff_pair(pts, self.fixed, tol or self.err_tol)[0]
        inter = _kernels.pieces_intersection_area(pts, self.off, self.fixed_flat, self.fixed_off)
        return max(self.moving_area + self.fixed_area - 2.0 * inter, 0.0)


def _pattern_search(f, x0, value, radius, step, stop, tol_for_step):
    """Opportunistic compass search over (angle * radius, tx, ty)."""
    x = np.array(x0, dtype=float)
    scale = np.array([1.0 / radius, 1.0, 1.0])
    last = 0
    while step >= stop:
        tol = tol_for_step(step)
        improved = False
        order = list(range(last, len(_DIRECTIONS))) + list(range(last))
        for k in order:
            y = x + step * _DIRECTIONS[k] * scale
            fy = f(*y, tol=tol)
            if fy < value:
                x, value, last, improved = y, fy, k, True
                break
        step = min(2.0 * step, 64 * radius) if improved else 0.5 * step
    return x, value


def _simplex_search(f, x0, radius, xatol, tol, maxfev, restarts):
    """Nelder-Mead from a simplex of size 0.02 * radius, restarted while it keeps improving.

    Restarting matters: the Hausdorff objective is a max of distances, and a
    collapsed simplex often sits on a kink that a fresh simplex walks off.
    """
    x = np.asarray(x0, dtype=float)
    value = f(*x, tol=tol)
    simplex_steps = 0.02 * radius * np.diag([1.0 / radius, 1.0, 1.0])
    for _ in range(restarts):
        res = minimize(
            lambda y: f(*y, tol=tol),
            x,
            method="Nelder-Mead",
            options={"xatol": xatol, "fatol": 0.0, "maxfev": maxfev, "initial_simplex": np.vstack([x, x + simplex_steps])},
        )
        if not res.fun < value - xatol:
            if res.fun < value:
                x, value = res.x, float(res.fun)
            break
        x, value = res.x, float(res.fun)
    return x, value


def _grid_minima(f, n_angles, tol):
    """Local minima in angle of the centroid-matched objective, deduplicated by value."""
    found = []
    for ri, reflect in enumerate((False, True)):
        v = np.array([f(2 * math.pi * k / n_angles, 0.0, 0.0, reflect, tol=tol) for k in range(n_angles)])
        local = (v <= np.roll(v, 1)) & (v <= np.roll(v, -1))
        found += [(float(v[k]), ri, int(k), reflect) for k in np.flatnonzero(local)]
    # lowest value first, ties to no reflection and the smallest angle index
    found.sort(key=lambda g: g[:3])
    distinct = []
    for g in found:
        # symmetric copies of one basin give the same value up to rounding
        if not distinct or g[0] - distinct[-1][0] > 1e-12 * (1.0 + g[0]):
            distinct.append(g)
    return distinct


def align(
    moving: Polygon,
    fixed: Polygon,
    metric: str = "hausdorff",
    *,
    n_angles: int = 512,
    n_starts: int = 5,
    err_tol: float | None = None,
) -> Alignment:
    """Rigid motion bringing ``moving`` as close as possible to ``fixed``.

    Centroids are matched and rotations (with and without reflection) scanned on
    a grid of ``n_angles``.  Every distinct local minimum of that scan gets a
    short simplex search over (angle, translation), since the best basin often
    needs an off-centroid translation before it shows; the ``n_starts`` best are
    then refined to ``1e-9 * scale`` and finished by a compass search.  The
    result is never worse than the centroid-matched identity.
    """
    scale = max(moving.scale, fixed.scale)
    if err_tol is None:
        err_tol = DEFAULT_REL_TOL * scale
    f = _Objective(moving, fixed, metric, err_tol)
    coarse_tol = max(err_tol, 1e-4 * scale)
    stop = 1e-9 * scale

    screened = []
    for _, ri, k, reflect in _grid_minima(f, n_angles, coarse_tol):
        g = f.with_reflection(reflect)
        x, v = _simplex_search(g, (2 * math.pi * k / n_angles, 0.0, 0.0), f.radius, 1e-4 * scale, coarse_tol, 150, 1)
        screened.append((v, ri, k, x, reflect))
    screened.sort(key=lambda s: s[:3])

    def tol_for_step(step):
        return min(coarse_tol, max(err_tol, 1e-2 * step))

    best = None
    for _, _, _, x, reflect in screened[:n_starts]:
        g = f.with_reflection(reflect)
        x, v = _simplex_search(g, x, f.radius, stop, err_tol, 2000, 10)
        x, v = _pattern_search(g, x, v, f.radius, 1e-3 * f.radius, stop, tol_for_step)
        final = g(*x, tol=err_tol)
        if best is None or final < best[0]:
            best = (final, x, reflect)

    identity = f(0.0, 0.0, 0.0, False, tol=err_tol)
    if best is None or identity <= best[0]:
        return Alignment(f.motion(0.0, 0.0, 0.0, False), identity)
    value, x, reflect = best
    return Alignment(f.motion(x[0], x[1], x[2], reflect), value)


@dataclass(frozen=True)
class StabilityRecord:
    """Both sides of the stability inequalities for one polygon.

    Ratios are None when the deficit is at most ``DEGENERATE_DEFICIT``.
    """

    n: int
    deficit: float
    hd_aligned: float
    l1_aligned: float
    diameter: float
    ratio_hd: float | None
    ratio_l1: float | None
    cheeger_regular: bool
    shape_id: str = ""

    def to_dict(self) -> dict:
        return asdict(self)


def aligned_deficit_record(p: Polygon, shape_id: str = "", err_tol: float | None = None) -> StabilityRecord:
    """Deficit, aligned distances to the unit-area regular polygon and their ratios.

    ``p`` is rescaled to unit area first if necessary.
    """
    if abs(p.area - 1.0) > 1e-12:
        p = normalize_area(p)
    ref = regular_ngon(p.n)
    deficit = cheeger_deficit(p)
    hd = align(p, ref, "hausdorff", err_tol=err_tol).distance
    l1 = align(p, ref, "l1", err_tol=err_tol).distance
    degenerate = deficit <= DEGENERATE_DEFICIT
    return StabilityRecord(
        n=p.n,
        deficit=deficit,
        hd_aligned=hd,
        l1_aligned=l1,
        diameter=p.diameter,
        ratio_hd=None if degenerate else hd**2 / deficit,
        ratio_l1=None if degenerate else l1**2 / deficit,
        cheeger_regular=is_cheeger_regular(p),
        shape_id=shape_id,
    )


__all__ = ["Alignment", "StabilityRecord", "align", "aligned_deficit_record"]
