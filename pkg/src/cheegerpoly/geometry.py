"""Planar polygons, rigid motions and the elementary measures built on them."""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

log = logging.getLogger(__name__)

#: Relative tolerance for degeneracy tests; multiplied by the bounding-box scale.
EPS_GEOM = 1e-9


class GeometryError(ValueError):
    """Invalid polygon input.  ``index`` names the offending vertex or edge."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class NonSimple(GeometryError):
    pass


class DegenerateEdge(GeometryError):
    pass


class CollinearVertex(GeometryError):
    pass


class NonConvex(GeometryError):
    pass


def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


def point_segment_distance(p, a, b) -> float:
    dx, dy = b[0] - a[0], b[1] - a[1]
    l2 = dx * dx + dy * dy
    t = 0.0 if l2 == 0.0 else min(1.0, max(0.0, ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / l2))
    return math.hypot(a[0] + t * dx - p[0], a[1] + t * dy - p[1])


def segments_intersect(a, b, c, d) -> bool:
    """Closed segments ab and cd share a point (exact predicate on doubles)."""

    def orient(p, q, r):
        v = _cross(q[0] - p[0], q[1] - p[1], r[0] - p[0], r[1] - p[1])
        return int(v > 0) - int(v < 0)

    def on_seg(p, q, r):
        return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])

    o1, o2, o3, o4 = orient(a, b, c), orient(a, b, d), orient(c, d, a), orient(c, d, b)
    if o1 != o2 and o3 != o4:
        return True
    return (
        (o1 == 0 and on_seg(a, b, c))
        or (o2 == 0 and on_seg(a, b, d))
        or (o3 == 0 and on_seg(c, d, a))
        or (o4 == 0 and on_seg(c, d, b))
    )


def segment_segment_distance(a, b, c, d) -> float:
    if segments_intersect(a, b, c, d):
        return 0.0
    return min(
        point_segment_distance(a, c, d),
        point_segment_distance(b, c, d),
        point_segment_distance(c, a, b),
        point_segment_distance(d, a, b),
    )


def _next(a: np.ndarray) -> np.ndarray:
    """Cyclic shift a[i] -> a[i+1] along the first axis (cheaper than np.roll)."""
    return np.concatenate((a[1:], a[:1]))


def _prev(a: np.ndarray) -> np.ndarray:
    return np.concatenate((a[-1:], a[:-1]))


def _validate(v: np.ndarray) -> None:
    n = len(v)
    tol = EPS_GEOM * float(np.ptp(v, axis=0).max())
    if not tol > 0:
        raise DegenerateEdge("all vertices coincide", 0)
    e = _next(v) - v
    bad = np.flatnonzero(np.hypot(e[:, 0], e[:, 1]) <= tol)
    if len(bad):
        raise DegenerateEdge(f"edge {bad[0]} has length below {tol:g}", int(bad[0]))
    prev, nxt = _prev(v), _next(v)
    chord = nxt - prev
    base = np.hypot(chord[:, 0], chord[:, 1])
    folded = np.flatnonzero(base <= tol)
    if len(folded):
        raise CollinearVertex(f"vertex {folded[0]} folds back onto its neighbours", int(folded[0]))
    rel = v - prev
    off = np.abs(_cross(rel[:, 0], rel[:, 1], chord[:, 0], chord[:, 1])) / base
    bad = np.flatnonzero(off <= tol)
    if len(bad):
        raise CollinearVertex(f"vertex {bad[0]} is collinear with its neighbours", int(bad[0]))

    f = _next(e)
    cr = _cross(e[:, 0], e[:, 1], f[:, 0], f[:, 1])
    dots = e[:, 0] * f[:, 0] + e[:, 1] * f[:, 1]
    turning = np.arctan2(cr, dots).sum()
    # Strictly convex with total turning of one revolution is simple; skip the O(N^2) scan.
    if (np.all(cr > 0) or np.all(cr < 0)) and abs(abs(turning) - 2 * math.pi) < 1e-6:
        return
    for i in range(n):
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            if segment_segment_distance(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]) <= tol:
                raise NonSimple(f"edges {i} and {j} intersect", i)


@dataclass(frozen=True, eq=False)
class Polygon:
    """Simple polygon with counterclockwise vertices and no collinear vertex triples.

    Build through :func:`make_polygon`; the constructor itself does not validate.
    """

    vertices: np.ndarray

    def __post_init__(self):
        v = np.array(self.vertices, dtype=float)
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"Polygon(n={len(self)}, vertices={self.vertices.tolist()!r})"

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def scale(self) -> float:
        """Largest bounding-box extent."""
        return float(np.ptp(self.vertices, axis=0).max())

    @property
    def tol(self) -> float:
        return EPS_GEOM * self.scale

    @cached_property
    def edges(self) -> np.ndarray:
        return _next(self.vertices) - self.vertices

    @cached_property
    def edge_lengths(self) -> np.ndarray:
        return np.hypot(self.edges[:, 0], self.edges[:, 1])

    @cached_property
    def area(self) -> float:
        v = self.vertices - self.vertices[0]
        w = _next(v)
        return 0.5 * float(np.sum(v[:, 0] * w[:, 1] - v[:, 1] * w[:, 0]))

    @cached_property
    def perimeter(self) -> float:
        return float(self.edge_lengths.sum())

    @cached_property
    def turning_angles(self) -> np.ndarray:
        e = self.edges
        nxt = _next(e)
        cr = _cross(e[:, 0], e[:, 1], nxt[:, 0], nxt[:, 1])
        dt = e[:, 0] * nxt[:, 0] + e[:, 1] * nxt[:, 1]
        # turning at vertex i+1; rotate so entry i belongs to vertex i
        return _prev(np.arctan2(cr, dt))

    @cached_property
    def inner_angles(self) -> np.ndarray:
        return math.pi - self.turning_angles

    @cached_property
    def is_convex(self) -> bool:
        e = self.edges
        nxt = _next(e)
        cr = _cross(e[:, 0], e[:, 1], nxt[:, 0], nxt[:, 1])
        norm = self.edge_lengths * _next(self.edge_lengths)
        return bool(np.all(cr / norm >= -EPS_GEOM))

    @cached_property
    def diameter(self) -> float:
        d = self.vertices[:, None, :] - self.vertices[None, :, :]
        return float(np.sqrt((d**2).sum(-1)).max())

    @cached_property
    def centroid(self) -> np.ndarray:
        v = self.vertices - self.vertices[0]
        w = _next(v)
        cr = v[:, 0] * w[:, 1] - v[:, 1] * w[:, 0]
        c = ((v + w) * cr[:, None]).sum(axis=0) / (3.0 * cr.sum())
        return c + self.vertices[0]

    @cached_property
    def halfplanes(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Outward unit normals (nx, ny) and offsets c with the polygon on ``n.x <= c``.

        Only the intersection of these halfplanes for convex polygons.
        """
        e = self.edges
        nx = e[:, 1] / self.edge_lengths
        ny = -e[:, 0] / self.edge_lengths
        c = nx * self.vertices[:, 0] + ny * self.vertices[:, 1]
        return nx, ny, c

    def scaled(self, factor: float) -> "Polygon":
        if factor <= 0:
            raise ValueError("scale factor must be positive")
        return Polygon(self.vertices * factor)

    def translated(self, vector: Sequence[float]) -> "Polygon":
        return Polygon(self.vertices + np.asarray(vector, dtype=float))

    def to_dict(self) -> dict:
        return {"vertices": self.vertices.tolist()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def make_polygon(points: Iterable[Sequence[float]]) -> Polygon:
    """Validate ``points`` and return a counterclockwise :class:`Polygon`.

    Raises :class:`DegenerateEdge`, :class:`CollinearVertex` or :class:`NonSimple`;
    indices refer to the input order.  Clockwise input is reversed.
    """
    v = np.asarray(list(points), dtype=float)
    if v.ndim != 2 or v.shape[1] != 2:
        raise GeometryError("expected a sequence of planar points")
    if len(v) < 3:
        raise GeometryError("a polygon needs at least 3 vertices")
    if not np.all(np.isfinite(v)):
        raise GeometryError("non-finite coordinate")
    _validate(v)
    p = Polygon(v)
    if p.area < 0:
        log.debug("clockwise input reversed")
        p = Polygon(v[::-1])
    return p


def polygon_from_dict(data: dict) -> Polygon:
    try:
        pts = data["vertices"]
    except (KeyError, TypeError):
        raise GeometryError('polygon JSON needs a "vertices" list') from None
    return make_polygon(pts)


def polygon_from_json(text: str) -> Polygon:
    return polygon_from_dict(json.loads(text))


def area(p: Polygon) -> float:
    return p.area


def perimeter(p: Polygon) -> float:
    return p.perimeter


def inner_angles(p: Polygon) -> np.ndarray:
    return p.inner_angles


def is_convex(p: Polygon) -> bool:
    return p.is_convex


def diameter(p: Polygon) -> float:
    return p.diameter


def regular_ngon(n: int) -> Polygon:
    """Unit-area regular ``n``-gon centred at the origin with a vertex on the positive x-axis."""
    if n < 3:
        raise ValueError("a regular polygon needs n >= 3")
    r = math.sqrt(2.0 / (n * math.sin(2 * math.pi / n)))
    t = 2 * math.pi * np.arange(n) / n
    return Polygon(np.column_stack([r * np.cos(t), r * np.sin(t)]))


def normalize_area(p: Polygon) -> Polygon:
    """Rescale about the origin to unit area."""
    return p.scaled(1.0 / math.sqrt(p.area))


def _half_angle_cotangents(p: Polygon) -> tuple[np.ndarray, np.longdouble, np.longdouble]:
    """cot(gamma_i / 2) per vertex, perimeter and area, in extended precision.

    cot(g/2) = (|u||w| + u.w) / (u x w) for the edge vectors u, w leaving the
    vertex; the ratio is ill-conditioned for needle-like polygons, hence longdouble.
    """
    v = p.vertices.astype(np.longdouble)
    u = _prev(v) - v
    w = _next(v) - v
    nu = np.sqrt(u[:, 0] ** 2 + u[:, 1] ** 2)
    nw = np.sqrt(w[:, 0] ** 2 + w[:, 1] ** 2)
    cr = w[:, 0] * u[:, 1] - w[:, 1] * u[:, 0]
    cot = (nu * nw + u[:, 0] * w[:, 0] + u[:, 1] * w[:, 1]) / cr
    rel = v - v[0]
    nxt = _next(rel)
    two_area = np.sum(rel[:, 0] * nxt[:, 1] - rel[:, 1] * nxt[:, 0])
    return cot, nw.sum(), two_area / 2


def tau(p: Polygon) -> float:
    """Angle functional sum of tan(a) - a with a = (pi - inner angle)/2."""
    if not p.is_convex:
        raise NonConvex("tau needs a convex polygon")
    cot, _, _ = _half_angle_cotangents(p)
    return float(cot.sum() - np.longdouble(0.5) * p.turning_angles.sum())


def isoperimetric_gap(p: Polygon) -> float:
    """P^2/(4|p|) - (tau + pi); zero exactly for circumscribed polygons."""
    if not p.is_convex:
        raise NonConvex("isoperimetric gap needs a convex polygon")
    # tau + pi = sum cot(gamma_i / 2) once the turning angles add up to 2 pi
    cot, per, ar = _half_angle_cotangents(p)
    return float(per * per / (4 * ar) - cot.sum())


@dataclass(frozen=True)
class RigidMotion:
    """x -> R(angle) F x + translation, with F the reflection y -> -y when ``reflect``."""

    angle: float = 0.0
    translation: tuple[float, float] = (0.0, 0.0)
    reflect: bool = False

    def __post_init__(self):
        object.__setattr__(self, "translation", (float(self.translation[0]), float(self.translation[1])))

    @classmethod
    def identity(cls) -> "RigidMotion":
        return cls()

    @property
    def matrix(self) -> np.ndarray:
        c, s = math.cos(self.angle), math.sin(self.angle)
        m = np.array([[c, -s], [s, c]])
        if self.reflect:
            m = m @ np.diag([1.0, -1.0])
        return m

    def apply(self, points) -> np.ndarray:
        pts = np.asarray(points, dtype=float)
        return pts @ self.matrix.T + np.asarray(self.translation)

    def compose(self, other: "RigidMotion") -> "RigidMotion":
        """self after other."""
        angle = self.angle - other.angle if self.reflect else self.angle + other.angle
        t = self.matrix @ np.asarray(other.translation) + np.asarray(self.translation)
        return RigidMotion(angle, tuple(t), self.reflect != other.reflect)

    def inverse(self) -> "RigidMotion":
        angle = self.angle if self.reflect else -self.angle
        inv = RigidMotion(angle, (0.0, 0.0), self.reflect)
        t = -inv.matrix @ np.asarray(self.translation)
        return RigidMotion(angle, tuple(t), self.reflect)

    def to_dict(self) -> dict:
        return {"angle": self.angle, "translation": list(self.translation), "reflect": self.reflect}


def apply_motion(p: Polygon, m: RigidMotion) -> Polygon:
    v = m.apply(p.vertices)
    if m.reflect:
        v = v[::-1]
    return Polygon(v)


def point_in_polygon(points, p: Polygon) -> np.ndarray:
    """Winding-number test; boundary points count as inside only by accident of rounding."""
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    a = p.vertices
    b = _next(a)
    x = pts[:, 0:1]
    y = pts[:, 1:2]
    up = (a[:, 1] <= y) & (b[:, 1] > y)
    down = (a[:, 1] > y) & (b[:, 1] <= y)
    side = _cross(b[:, 0] - a[:, 0], b[:, 1] - a[:, 1], x - a[:, 0], y - a[:, 1])
    wn = np.sum(up & (side > 0), axis=1) - np.sum(down & (side < 0), axis=1)
    return wn != 0


def boundary_distance(points, p: Polygon) -> np.ndarray:
    """Unsigned distance from each point to the boundary of ``p``."""
    pts = np.atleast_2d(np.asarray(points, dtype=float))
    a = p.vertices
    e = p.edges
    l2 = (e**2).sum(axis=1)
    rel = pts[:, None, :] - a[None, :, :]
    t = np.clip((rel * e[None]).sum(-1) / l2, 0.0, 1.0)
    d = rel - t[..., None] * e[None]
    return np.sqrt((d**2).sum(-1)).min(axis=1)


def signed_clearance(points, p: Polygon) -> np.ndarray:
    """Distance to the boundary, positive inside and negative outside; 1-Lipschitz."""
    d = boundary_distance(points, p)
    return np.where(point_in_polygon(points, p), d, -d)
