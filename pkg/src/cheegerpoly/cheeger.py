"""Cheeger constant and Cheeger set of convex polygons.

Two independent routes are available:

``root``
    The Cheeger radius R solves ``|inner_parallel(p, R)| = pi R^2``; the left
    side minus the right side is continuous and strictly decreasing in R, so a
    bracketed root finder locates it.  Valid for every convex polygon.
``formula``
    The closed form ``h = (P + sqrt(P^2 - 4 tau |p|)) / (2 |p|)``, valid only when
    every side of ``p`` touches the Cheeger set.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from functools import lru_cache

from scipy.optimize import brentq

from . import _kernels
from .geometry import EPS_GEOM, NonConvex, Polygon, regular_ngon, tau
from .offsetting import (
    ArcPolygon,
    arc_polygon_measures,
    contains_arc_polygon,
    inner_area,
    inner_parallel,
    inradius_upper_bound,
    minkowski_disk,
    offset_edge_lengths,
)

SQRT_PI = math.sqrt(math.pi)


class NotCheegerRegular(ValueError):
    pass


class NotContained(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class CheegerReport:
    h: float
    radius: float
    inner_polygon: Polygon
    cheeger_regular: bool
    method: str
    residual: float | None = None
    cross_error: float | None = None

    def to_dict(self) -> dict:
        return {
            "h": self.h,
            "radius": self.radius,
            "cheeger_regular": self.cheeger_regular,
            "method": self.method,
            "residual": self.residual,
            "cross_error": self.cross_error,
        }


def _require_convex(p: Polygon) -> None:
    if not p.is_convex:
        raise NonConvex("exact Cheeger constants need a convex polygon; see cheeger_upper_bound")


def cheeger_radius(p: Polygon) -> float:
    """Root of r -> |inner_parallel(p, r)| - pi r^2 (brentq, xtol 1e-13 * scale)."""
    _require_convex(p)
    cached = p.__dict__.get("_cheeger_radius")
    if cached is not None:
        return cached
    nx, ny, c = p.halfplanes
    v = p.vertices

    def gap(r):
        return _kernels.offset_area(v, nx, ny, c, r) - math.pi * r * r

    lo = EPS_GEOM * p.scale
    # 2|p|/P bounds the inradius; beyond it the inner set is empty and gap < 0
    hi = inradius_upper_bound(p)
    r = brentq(gap, lo, hi, xtol=1e-13 * p.scale, rtol=4 * sys.float_info.epsilon, maxiter=200)
    p.__dict__["_cheeger_radius"] = r
    return r


def is_cheeger_regular(p: Polygon) -> bool:
    """Every side survives offsetting by the Cheeger radius, so the Cheeger set touches it."""
    _require_convex(p)
    lengths = offset_edge_lengths(p, cheeger_radius(p))
    return bool(lengths.min() > p.tol)


def cheeger_formula(p: Polygon) -> float:
    """Closed form for Cheeger-regular convex polygons (no regularity check)."""
    _require_convex(p)
    a, per = p.area, p.perimeter
    return (per + math.sqrt(max(per * per - 4 * tau(p) * a, 0.0))) / (2 * a)


def cheeger_constant(p: Polygon, method: str = "auto") -> CheegerReport:
    """Cheeger constant of a convex polygon.

    ``method`` is ``"auto"`` (root always, formula as a cross-check when
    regular), ``"root"`` or ``"formula"``.
    """
    if method not in ("auto", "root", "formula"):
        raise ValueError(f"unknown method {method!r}")
    _require_convex(p)
    r_root = cheeger_radius(p)
    regular = is_cheeger_regular(p)
    inner = inner_parallel(p, r_root)
    residual = abs(inner_area(p, r_root) - math.pi * r_root**2)

    if method == "formula":
        if not regular:
            raise NotCheegerRegular("closed form needs every side to touch the Cheeger set")
        h = cheeger_formula(p)
        return CheegerReport(h, 1.0 / h, inner, True, "formula")
    if method == "root" or not regular:
        return CheegerReport(1.0 / r_root, r_root, inner, regular, "radius-root", residual)
    h = 1.0 / r_root
    return CheegerReport(h, r_root, inner, True, "both", residual, abs(cheeger_formula(p) - h))


def cheeger_set(p: Polygon) -> ArcPolygon:
    """The unique Cheeger set: inner parallel set at the Cheeger radius dilated by that radius."""
    r = cheeger_radius(p)
    return minkowski_disk(inner_parallel(p, r), r)


def cheeger_upper_bound(outer: Polygon, test_set: ArcPolygon, margin: float = 1e-6) -> float:
    """P(test_set)/|test_set|, an upper bound on h(outer) for any simple polygon containing it."""
    if not contains_arc_polygon(outer, test_set, margin):
        raise NotContained("test set is not inside the polygon")
    per, ar = arc_polygon_measures(test_set)
    return per / ar


def h_ball() -> float:
    """Cheeger constant of the unit-area disk."""
    return 2 * SQRT_PI


@lru_cache(maxsize=None)
def h_regular(n: int) -> float:
    """Cheeger constant of the unit-area regular n-gon, by the root method."""
    return 1.0 / cheeger_radius(regular_ngon(n))


def h_regular_closed_form(n: int) -> float:
    p0 = 2 * math.sqrt(n * math.tan(math.pi / n))
    return 0.5 * p0 + SQRT_PI


def scaled_cheeger(p: Polygon) -> float:
    """sqrt(|p|) h(p), the scale-invariant Cheeger constant."""
    return math.sqrt(p.area) / cheeger_radius(p)


def cheeger_deficit(p: Polygon) -> float:
    """sqrt(|p|) h(p) - h(regular n-gon) with n the side count of ``p``."""
    return scaled_cheeger(p) - h_regular(p.n)
