"""Distances between polygons: boundary Hausdorff distance and symmetric-difference area."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .geometry import EPS_GEOM, Polygon, RigidMotion, segments_intersect

DEFAULT_REL_TOL = 1e-7


@dataclass(frozen=True)
class CertifiedDistance:
    """The true distance lies in ``[estimate - error_bound, estimate + error_bound]``."""

    estimate: float
    error_bound: float

    def to_dict(self) -> dict:
        return {"estimate": self.estimate, "error_bound": self.error_bound}


def _default_tol(a: Polygon, b: Polygon) -> float:
    return DEFAULT_REL_TOL * max(a.scale, b.scale)


def hausdorff_bounds(va: np.ndarray, vb: np.ndarray, err_tol: float) -> tuple[float, float]:
    """Lower/upper bounds on the boundary Hausdorff distance of two vertex loops."""
    return _kernels.hausdorff_pair(np.ascontiguousarray(va), np.ascontiguousarray(vb), float(err_tol))


def hausdorff_boundary(a: Polygon, b: Polygon, err_tol: float | None = None) -> CertifiedDistance:
    """Hausdorff distance between the boundary curves of ``a`` and ``b``.

    Each boundary is refined adaptively; on every piece the distance to the other
    curve is bounded above both by the 1-Lipschitz estimate and by convexity of
    the distance to a single edge, so the result carries a rigorous error bound
    no larger than ``err_tol`` (default ``1e-7 * scale``).
    """
    if err_tol is None:
        err_tol = _default_tol(a, b)
    if err_tol <= 0:
        raise ValueError("err_tol must be positive")
    lo, hi = hausdorff_bounds(a.vertices, b.vertices, err_tol)
    return CertifiedDistance(lo, hi - lo)


def _ear_clip(v: np.ndarray) -> list[np.ndarray]:
    """Triangulate a simple counterclockwise polygon."""
    idx = list(range(len(v)))
    tris = []

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    while len(idx) > 3:
        n = len(idx)
        for k in range(n):
            i0, i1, i2 = idx[k - 1], idx[k], idx[(k + 1) % n]
            a, b, c = v[i0], v[i1], v[i2]
            if cross(a, b, c) <= 0:
                continue
            inside = False
            for j in idx:
                if j in (i0, i1, i2):
                    continue
                p = v[j]
                if cross(a, b, p) >= 0 and cross(b, c, p) >= 0 and cross(c, a, p) >= 0:
                    inside = True
                    break
            if not inside:
                tris.append(np.array([a, b, c]))
                del idx[k]
                break
        else:
            raise RuntimeError("ear clipping found no ear; polygon is not simple")
    tris.append(v[idx])
    return tris


def convex_pieces(p: Polygon) -> list[np.ndarray]:
    """``p`` itself when convex, otherwise an ear-clipping triangulation."""
    if p.is_convex:
        return [np.asarray(p.vertices)]
    cached = p.__dict__.get("_pieces")
    if cached is None:
        cached = _ear_clip(np.asarray(p.vertices))
        p.__dict__["_pieces"] = cached
    return cached


def pack_pieces(pieces: list[np.ndarray]) -> tuple[np.ndarray, np.ndarray]:
    flat = np.ascontiguousarray(np.concatenate(pieces), dtype=float)
    off = np.cumsum([0] + [len(q) for q in pieces]).astype(np.int64)
    return flat, off


def intersection_area(a: Polygon, b: Polygon) -> float:
    fa, oa = pack_pieces(convex_pieces(a))
    fb, ob = pack_pieces(convex_pieces(b))
    return _kernels.pieces_intersection_area(fa, oa, fb, ob)


def symmetric_difference_area(a: Polygon, b: Polygon) -> float:
    """|a| + |b| - 2|a ∩ b| with the intersection clipped piece by piece."""
    return max(a.area + b.area - 2.0 * intersection_area(a, b), 0.0)


def _closest_boundary_points(a: Polygon, b: Polygon):
    best = (math.inf, None, None)
    va, vb = a.vertices, b.vertices
    for i in range(a.n):
        p0, p1 = va[i], va[(i + 1) % a.n]
        for j in range(b.n):
            q0, q1 = vb[j], vb[(j + 1) % b.n]
            if segments_intersect(p0, p1, q0, q1):
                return 0.0, p0, p0
            for x, s0, s1, x_on_a in ((p0, q0, q1, True), (p1, q0, q1, True), (q0, p0, p1, False), (q1, p0, p1, False)):
                d = s1 - s0
                t = min(1.0, max(0.0, float(np.dot(x - s0, d) / np.dot(d, d))))
                y = s0 + t * d
                dist = float(np.hypot(*(x - y)))
                if dist < best[0]:
                    best = (dist, x, y) if x_on_a else (dist, y, x)
    return best


def boundary_touch_normalize(a: Polygon, b: Polygon) -> RigidMotion:
    """Translation of ``b`` moving its closest boundary point onto the boundary of ``a``.

    Zero when the boundaries already meet.  Afterwards
    ``hd(boundary a, boundary b') <= diam(a) + diam(b)``.
    """
    dist, pa, pb = _closest_boundary_points(a, b)
    if dist <= EPS_GEOM * max(a.scale, b.scale):
        return RigidMotion.identity()
    return RigidMotion(0.0, tuple(pa - pb), False)
