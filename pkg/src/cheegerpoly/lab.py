"""Shape generators and experiment drivers for the polygonal Cheeger stability inequalities."""

from __future__ import annotations

import csv
import math
from dataclasses import asdict, dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .alignment import DEGENERATE_DEFICIT, StabilityRecord, align, aligned_deficit_record
from .cheeger import (
    SQRT_PI,
    cheeger_deficit,
    cheeger_set,
    cheeger_upper_bound,
    h_ball,
    h_regular,
    is_cheeger_regular,
    scaled_cheeger,
)
from .geometry import GeometryError, Polygon, isoperimetric_gap, make_polygon, normalize_area, regular_ngon

H_SQUARE = 2.0 + SQRT_PI
TENTACLE_BOUND = math.sqrt(1.5) * H_SQUARE

_MASK = (1 << 64) - 1
_BATCH = 64


def splitmix64(seed: int, index: int) -> int:
    """Per-item seed: one splitmix64 step on ``seed * golden + index``."""
    z = (seed * 0x9E3779B97F4A7C15 + index + 0x9E3779B97F4A7C15) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class EpsTooLarge(ValueError):
    pass


def random_convex_ngon(n: int, seed: int) -> Polygon:
    """Unit-area convex polygon with exactly ``n`` sides, deterministic in ``seed``.

    Draws ``n`` sorted direction angles and radii in [0.5, 1]; the star-shaped
    polygon through them is accepted when it is its own convex hull (all ``n``
    points are hull vertices) and passes validation, otherwise redrawn.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    rng = np.random.default_rng(seed)
    while True:
        # candidates are drawn in batches; the first acceptable one wins
        t = np.sort(rng.uniform(0.0, 2 * math.pi, (_BATCH, n)), axis=1)
        r = rng.uniform(0.5, 1.0, (_BATCH, n))
        pts = np.stack([r * np.cos(t), r * np.sin(t)], axis=-1)
        e = np.roll(pts, -1, axis=1) - pts
        f = np.roll(e, -1, axis=1)
        left = np.all(e[..., 0] * f[..., 1] - e[..., 1] * f[..., 0] > 0, axis=1)
        for b in np.flatnonzero(left):
            try:
                p = make_polygon(pts[b])
            except GeometryError:
                continue
            # all turns left and sorted angles: one revolution, hence convex and simple
            return normalize_area(p)


def _radial_displace(n: int, out: float, inward: float) -> np.ndarray:
    v = np.array(regular_ngon(n).vertices)
    r = math.hypot(*v[0])
    k = n // 2
    v[0] *= (r + out) / r
    v[k] *= (r - inward) / r
    return v


def _shoelace(v: np.ndarray) -> float:
    w = np.roll(v, -1, axis=0)
    return 0.5 * float(np.sum(v[:, 0] * w[:, 1] - v[:, 1] * w[:, 0]))


def perturb_ngon(n: int, eps: float) -> Polygon:
    """Regular unit-area n-gon with vertex 0 pushed out radially by ``eps`` and
    vertex ``n // 2`` pulled in by the amount that restores unit area.

    Area is affine in the inward displacement, so that amount is solved exactly.
    Raises :class:`EpsTooLarge` once the result stops being strictly convex
    (see :func:`perturbation_eps_max`).
    """
    if eps < 0:
        raise ValueError("eps must be nonnegative")
    if eps == 0:
        return regular_ngon(n)
    a0 = _shoelace(_radial_displace(n, eps, 0.0))
    a1 = _shoelace(_radial_displace(n, eps, 1.0))
    inward = (a0 - 1.0) / (a0 - a1)
    v = _radial_displace(n, eps, inward)
    r = math.hypot(*regular_ngon(n).vertices[0])
    if not 0 <= inward < r:
        raise EpsTooLarge(f"eps={eps} is too large for n={n}")
    try:
        p = make_polygon(v)
    except GeometryError as exc:
        raise EpsTooLarge(f"eps={eps} is too large for n={n}") from exc
    if not p.is_convex:
        raise EpsTooLarge(f"eps={eps} is too large for n={n}: convexity lost")
    return p


def perturbation_eps_max(n: int) -> float:
    """Supremum of the eps accepted by :func:`perturb_ngon` (bisection, 1e-12)."""
    lo, hi = 0.0, 1.0
    while True:
        try:
            perturb_ngon(n, hi)
        except EpsTooLarge:
            break
        lo, hi = hi, 2 * hi
    while hi - lo > 1e-12:
        mid = 0.5 * (lo + hi)
        try:
            perturb_ngon(n, mid)
            lo = mid
        except EpsTooLarge:
            hi = mid
    return lo


def tentacle_polygon(k: float) -> Polygon:
    """Unit square with the corner (1, 1) cut off by a chord of length ``1/k`` and
    replaced by a triangle on that chord whose apex lies at height ``k`` along the
    diagonal.  Six vertices, nonconvex, area ``3/2 - 1/(4 k^2)``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    cut = 1.0 / (k * math.sqrt(2.0))
    mid = 1.0 - 0.5 * cut
    apex = mid + k / math.sqrt(2.0)
    return make_polygon([(0.0, 0.0), (1.0, 0.0), (1.0, 1.0 - cut), (apex, apex), (1.0 - cut, 1.0), (0.0, 1.0)])


def tentacle_area(k: float) -> float:
    return 1.5 - 1.0 / (4.0 * k * k)


@dataclass
class SweepRow:
    eps: float
    deficit: float
    hd: float
    l1: float
    ratio_hd: float | None
    ratio_l1: float | None
    order_estimate: float | None

    @property
    def deficit_over_hd2(self) -> float | None:
        if self.deficit <= DEGENERATE_DEFICIT or self.hd == 0:
            return None
        return self.deficit / self.hd**2


SWEEP_COLUMNS = ("eps", "deficit", "hd", "l1", "ratio_hd", "ratio_l1", "order_estimate")


def sweep_perturbation(n: int, eps_list: Sequence[float]) -> tuple[list[StabilityRecord], list[SweepRow]]:
    """Stability records along a sequence of perturbation sizes.

    ``order_estimate`` in row i is log(deficit_{i-1}/deficit_i) / log(eps_{i-1}/eps_i),
    which tends to 2 when the deficit is quadratic in eps.
    """
    records, rows = [], []
    prev = None
    for eps in eps_list:
        rec = aligned_deficit_record(perturb_ngon(n, eps), shape_id=f"perturb-{n}-{eps:g}")
        order = None
        if prev is not None and prev[0] > 0 and eps > 0 and prev[1] > DEGENERATE_DEFICIT and rec.deficit > DEGENERATE_DEFICIT:
            order = math.log(prev[1] / rec.deficit) / math.log(prev[0] / eps)
        records.append(rec)
        rows.append(SweepRow(eps, rec.deficit, rec.hd_aligned, rec.l1_aligned, rec.ratio_hd, rec.ratio_l1, order))
        prev = (eps, rec.deficit)
    return records, rows


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return f"{x:.17g}"
    return str(x)


def write_sweep_csv(rows: Iterable[SweepRow], path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(SWEEP_COLUMNS)
        for r in rows:
            w.writerow([_fmt(getattr(r, c)) for c in SWEEP_COLUMNS])


def read_sweep_csv(path) -> list[SweepRow]:
    def num(s):
        return float(s) if s not in ("", None) else None

    with open(path, newline="") as fh:
        return [SweepRow(*(num(row[c]) for c in SWEEP_COLUMNS)) for row in csv.DictReader(fh)]


@dataclass
class EnsembleReport:
    """Summary of one ensemble of random convex unit-area N-gons.

    ``c_emp_*`` are the largest observed ratios (the stability constants are
    only known to exist); they are None when distances were not computed.
    """

    n: int
    samples: int
    seed: int
    deficit_min: float
    deficit_max: float
    deficit_mean: float
    regular_count: int
    bound2_checked: int
    c_emp_hd: float | None
    c_emp_l1: float | None
    c_emp_iso: float | None
    violations: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())

    def to_dict(self) -> dict:
        return asdict(self)


INEQUALITIES = ("cheeger", "regular_minimal", "polyisop", "bound1", "bound2", "isoperimetric_stability")


def _max_or_none(values):
    return max(values) if values else None


def verify_ensemble(n: int, samples: int, seed: int, *, distances: bool = True) -> EnsembleReport:
    """Check the Cheeger and isoperimetric inequalities on random convex n-gons.

    Polygon i is ``random_convex_ngon(n, splitmix64(seed, i))``.  The bound chain
    ``2(h - h0) >= P - P0`` is only checked on Cheeger-regular samples; the
    ``P - P0 >= (P^2 - P0^2)/(3 P0)`` bound only when ``P < 2 P0``.  With
    ``distances`` the aligned Hausdorff and L1 distances to the regular n-gon are
    computed (slow) and the empirical constants filled in.
    """
    h0 = h_regular(n)
    ref = regular_ngon(n)
    p0 = ref.perimeter
    v = dict.fromkeys(INEQUALITIES, 0)
    deficits = []
    regular_count = bound2_checked = 0
    r_hd, r_l1, r_iso = [], [], []
    for i in range(samples):
        p = random_convex_ngon(n, splitmix64(seed, i))
        h = scaled_cheeger(p)
        deficit = h - h0
        deficits.append(deficit)
        per = p.perimeter
        if h < h_ball() - 1e-9:
            v["cheeger"] += 1
        if deficit < -1e-9:
            v["regular_minimal"] += 1
        if isoperimetric_gap(p) < -1e-10:
            v["polyisop"] += 1
        if is_cheeger_regular(p):
            regular_count += 1
            if 2 * deficit < per - p0 - 1e-9:
                v["bound1"] += 1
        if per < 2 * p0:
            bound2_checked += 1
            if per - p0 < (per * per - p0 * p0) / (3 * p0) - 1e-9:
                v["bound2"] += 1
        iso = per * per - p0 * p0
        if iso < -1e-9:
            v["isoperimetric_stability"] += 1
        if distances:
            hd = align(p, ref, "hausdorff").distance
            l1 = align(p, ref, "l1").distance
            if deficit > DEGENERATE_DEFICIT:
                r_hd.append(hd**2 / deficit)
                r_l1.append(l1**2 / deficit)
            if iso > DEGENERATE_DEFICIT:
                r_iso.append(hd**2 / iso)
    return EnsembleReport(
        n=n,
        samples=samples,
        seed=seed,
        deficit_min=min(deficits),
        deficit_max=max(deficits),
        deficit_mean=float(np.mean(deficits)),
        regular_count=regular_count,
        bound2_checked=bound2_checked,
        c_emp_hd=_max_or_none(r_hd),
        c_emp_l1=_max_or_none(r_l1),
        c_emp_iso=_max_or_none(r_iso),
        violations=v,
    )


@dataclass
class TentacleRow:
    k: float
    area: float
    scaled_bound: float
    hd_aligned: float
    hd_lower_bound: float
    diameter: float


@dataclass
class TentacleSeries:
    rows: list[TentacleRow]
    bound_ok: bool
    hd_increasing: bool

    @property
    def ok(self) -> bool:
        return self.bound_ok and self.hd_increasing


TENTACLE_COLUMNS = ("k", "area", "scaled_bound", "hd_aligned", "hd_lower_bound", "diameter")


def tentacle_series(k_list: Sequence[float]) -> TentacleSeries:
    """Cheeger upper bounds and aligned Hausdorff distances for the tentacle family.

    The Cheeger set of the unit square lies in every tentacle polygon, so
    ``sqrt(|T_k|) * h(square)`` bounds the scale-invariant Cheeger constant of
    ``T_k`` while the normalised tentacle drifts away from the regular hexagon.
    """
    square = make_polygon([(0, 0), (1, 0), (1, 1), (0, 1)])
    c0 = cheeger_set(square)
    ref = regular_ngon(6)
    rows = []
    for k in k_list:
        t = tentacle_polygon(k)
        bound = math.sqrt(t.area) * float(cheeger_upper_bound(t, c0))
        tk = normalize_area(t)
        hd = align(tk, ref, "hausdorff").distance
        lower = 0.5 * (tk.diameter - ref.diameter)
        rows.append(TentacleRow(float(k), t.area, bound, hd, lower, tk.diameter))
    bound_ok = all(r.scaled_bound <= TENTACLE_BOUND + 1e-9 for r in rows if r.k >= 2)
    hds = [r.hd_aligned for r in rows]
    increasing = all(b > a for a, b in zip(hds, hds[1:]))
    return TentacleSeries(rows, bound_ok, increasing)


def write_tentacle_csv(series: TentacleSeries, path) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(TENTACLE_COLUMNS)
        for r in series.rows:
            w.writerow([_fmt(getattr(r, c)) for c in TENTACLE_COLUMNS])


__all__ = [
    "EnsembleReport",
    "EpsTooLarge",
    "StabilityRecord",
    "SweepRow",
    "TentacleSeries",
    "aligned_deficit_record",
    "cheeger_deficit",
    "perturb_ngon",
    "perturbation_eps_max",
    "random_convex_ngon",
    "splitmix64",
    "sweep_perturbation",
    "tentacle_polygon",
    "tentacle_series",
    "verify_ensemble",
]
