"""Inner parallel sets of convex polygons and their dilation by a disk."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

import numpy as np

from . import _kernels
from .geometry import (
    EPS_GEOM,
    NonConvex,
    Polygon,
    _next,
    make_polygon,
    point_in_polygon,
    point_segment_distance,
    segment_segment_distance,
)


def _require_convex(p: Polygon) -> None:
    if not p.is_convex:
        raise NonConvex("operation needs a convex polygon")


def _clean(v: np.ndarray, tol: float) -> np.ndarray:
    """Drop near-duplicate and near-collinear vertices of a convex vertex loop."""
    pts = [tuple(x) for x in v]
    changed = True
    while changed and len(pts) >= 3:
        changed = False
        n = len(pts)
        for i in range(n):
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
            base = math.dist(a, c)
            if math.dist(a, b) <= tol or base <= tol:
                off = 0.0
            else:
                off = abs((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])) / base
            if off <= tol:
                del pts[i]
                changed = True
                break
    return np.array(pts, dtype=float).reshape(-1, 2)


def _offset_vertices(p: Polygon, r: float) -> np.ndarray:
    nx, ny, c = p.halfplanes
    return _kernels.offset_polygon(p.vertices, nx, ny, c, float(r))


def inner_parallel(p: Polygon, r: float) -> Polygon | None:
    """Closed inner parallel set at distance ``r``, or None when it has no interior."""
    _require_convex(p)
    if r < 0:
        raise ValueError("offset distance must be nonnegative")
    if r == 0:
        return p
    v = _clean(_offset_vertices(p, r), p.tol)
    if len(v) < 3:
        return None
    q = Polygon(v)
    if q.area <= p.tol * p.scale:
        return None
    return make_polygon(v)


def offset_edge_lengths(p: Polygon, r: float) -> np.ndarray:
    """Length of the inner parallel set's boundary carried by each (offset) edge of ``p``."""
    q = inner_parallel(p, r)
    if q is None:
        return np.zeros(p.n)
    nx, ny, c = p.halfplanes
    a = q.vertices
    b = _next(a)
    tol = p.tol
    on_a = np.abs(np.outer(nx, a[:, 0]) + np.outer(ny, a[:, 1]) - (c - r)[:, None]) <= tol
    on_b = np.abs(np.outer(nx, b[:, 0]) + np.outer(ny, b[:, 1]) - (c - r)[:, None]) <= tol
    return (on_a & on_b) @ q.edge_lengths


def inner_area(p: Polygon, r: float) -> float:
    """Area of the inner parallel set at distance ``r`` (0 once it is empty)."""
    _require_convex(p)
    if r < 0:
        raise ValueError("offset distance must be nonnegative")
    nx, ny, c = p.halfplanes
    return _kernels.offset_area(p.vertices, nx, ny, c, float(r))


def inradius_upper_bound(p: Polygon) -> float:
    # |p| = sum of edge-triangles from the incentre, each of height >= inradius
    return 2.0 * p.area / p.perimeter


def inradius(p: Polygon) -> float:
    """Largest r with a nonempty inner parallel set, by bisection to 1e-12 * scale."""
    _require_convex(p)
    nx, ny, c = p.halfplanes
    v = p.vertices
    lo, hi = 0.0, inradius_upper_bound(p)
    while _kernels.offset_area(v, nx, ny, c, hi) > 0.0:
        lo, hi = hi, 2.0 * hi
    stop = 1e-12 * p.scale
    while hi - lo > stop:
        mid = 0.5 * (lo + hi)
        if _kernels.offset_area(v, nx, ny, c, mid) > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


class Segment(NamedTuple):
    start: np.ndarray
    end: np.ndarray

    @property
    def length(self) -> float:
        return float(np.hypot(*(self.end - self.start)))

    def point(self, t: float) -> np.ndarray:
        return self.start + t * (self.end - self.start)


class Arc(NamedTuple):
    """Counterclockwise circular arc from ``start_angle`` through ``extent`` radians."""

    center: np.ndarray
    radius: float
    start_angle: float
    extent: float

    @property
    def length(self) -> float:
        return self.radius * self.extent

    def point(self, t: float) -> np.ndarray:
        phi = self.start_angle + t * self.extent
        return self.center + self.radius * np.array([math.cos(phi), math.sin(phi)])


@dataclass(frozen=True, eq=False)
class ArcPolygon:
    """Boundary of ``inner`` dilated by a disk of ``radius``: offset edges joined by arcs."""

    inner: Polygon
    radius: float

    @property
    def centers(self) -> np.ndarray:
        return self.inner.vertices

    @cached_property
    def elements(self) -> list:
        q = self.inner
        nx, ny, _ = q.halfplanes
        normals = np.column_stack([nx, ny])
        r = self.radius
        out: list = []
        for i in range(q.n):
            j = (i + 1) % q.n
            if r > 0:
                start = math.atan2(normals[i - 1, 1], normals[i - 1, 0])
                out.append(Arc(q.vertices[i], r, start, float(q.turning_angles[i])))
            out.append(Segment(q.vertices[i] + r * normals[i], q.vertices[j] + r * normals[i]))
        return out

    @property
    def arcs(self) -> list:
        return [e for e in self.elements if isinstance(e, Arc)]

    @property
    def segments(self) -> list:
        return [e for e in self.elements if isinstance(e, Segment)]

    def to_dict(self) -> dict:
        return {"radius": self.radius, "inner_vertices": self.inner.vertices.tolist()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def sample(self, spacing: float) -> np.ndarray:
        """Boundary points at arc-length spacing at most ``spacing``, element endpoints included."""
        pts = []
        for e in self.elements:
            k = max(1, math.ceil(e.length / spacing))
            pts.extend(e.point(t) for t in np.arange(k) / k)
        return np.array(pts)


def arc_polygon_from_dict(data: dict) -> ArcPolygon:
    return ArcPolygon(make_polygon(data["inner_vertices"]), float(data["radius"]))


def minkowski_disk(p: Polygon, r: float) -> ArcPolygon:
    _require_convex(p)
    if r < 0:
        raise ValueError("radius must be nonnegative")
    return ArcPolygon(p, float(r))


def arc_polygon_measures(a: ArcPolygon) -> tuple[float, float]:
    """(perimeter, area); the area comes from Green's theorem along the boundary elements."""
    per = 0.0
    twice_area = 0.0
    for e in a.elements:
        per += e.length
        if isinstance(e, Segment):
            (x0, y0), (x1, y1) = e.start, e.end
            twice_area += x0 * y1 - x1 * y0
        else:
            cx, cy = e.center
            p0, p1 = e.start_angle, e.start_angle + e.extent
            r = e.radius
            twice_area += (
                r * cx * (math.sin(p1) - math.sin(p0)) - r * cy * (math.cos(p1) - math.cos(p0)) + r * r * e.extent
            )
    return per, 0.5 * twice_area


def contains_arc_polygon(outer: Polygon, a: ArcPolygon, margin: float = 1e-6) -> bool:
    """True when every boundary point of ``a`` lies in ``outer`` or within ``margin`` of it.

    ``outer`` may be nonconvex.  Boundary pieces are refined adaptively:

    * all points of a piece are within ``margin`` of ``outer`` when some edge of
      ``outer`` is that close to both piece endpoints (distance to a segment is
      convex along a line; arcs add their sagitta);
    * a piece that stays clear of the boundary is wholly inside or outside, decided
      by one winding-number test;
    * otherwise split, falling back on the 1-Lipschitz bound of the signed clearance
      once pieces are shorter than ``margin``.
    """
    edges = [(outer.vertices[i], outer.vertices[(i + 1) % outer.n]) for i in range(outer.n)]

    def clearance(x):
        d = min(point_segment_distance(x, s, t) for s, t in edges)
        return d if point_in_polygon(x, outer)[0] else -d

    stack = []
    for e in a.elements:
        if e.length > 0:
            stack.append((e, 0.0, 1.0))
    while stack:
        e, t0, t1 = stack.pop()
        x0, x1 = e.point(t0), e.point(t1)
        length = e.length * (t1 - t0)
        sag = e.radius * (1 - math.cos(0.5 * e.extent * (t1 - t0))) if isinstance(e, Arc) else 0.0
        near = min(max(point_segment_distance(x0, s, t), point_segment_distance(x1, s, t)) for s, t in edges)
        if near + sag <= margin:
            continue
        lower = min(segment_segment_distance(x0, x1, s, t) for s, t in edges) - sag
        if lower > 0:
            if point_in_polygon(e.point(0.5 * (t0 + t1)), outer)[0]:
                continue
            if lower > margin:
                return False
        if length <= margin:
            c0, c1 = clearance(x0), clearance(x1)
            if 0.5 * (c0 + c1 - length) >= -margin:
                continue
            if min(c0, c1) < -margin:
                return False
        if length <= EPS_GEOM * margin:
            return False
        tm = 0.5 * (t0 + t1)
        stack.append((e, t0, tm))
        stack.append((e, tm, t1))
    return True
