"""Cheeger constant of a few convex polygons, computed two ways.

The Cheeger set of a convex polygon is the inner parallel set at radius R,
dilated back by R, where R solves |inner set at R| = pi R^2.  Then h = 1/R.
For polygons whose Cheeger set touches every side there is also a closed form;
we print both so the agreement is visible.
"""

import math

from cheegerpoly import cheeger_constant, cheeger_set, make_polygon, regular_ngon, scaled_cheeger
from cheegerpoly.offsetting import arc_polygon_measures

shapes = {
    "unit square": make_polygon([(0, 0), (1, 0), (1, 1), (0, 1)]),
    "2 x 0.5 rectangle": make_polygon([(0, 0), (2, 0), (2, 0.5), (0, 0.5)]),
    "equilateral triangle": regular_ngon(3),
    "regular hexagon": regular_ngon(6),
    "clipped square": make_polygon([(0, 0), (1, 0), (1, 0.8), (0.8, 1), (0, 1)]),
}

print(f"{'shape':22s} {'h':>12s} {'radius':>10s} {'regular':>8s} {'formula gap':>12s}")
for name, p in shapes.items():
    rep = cheeger_constant(p)
    gap = "-" if rep.cross_error is None else f"{rep.cross_error:.1e}"
    print(f"{name:22s} {rep.h:12.8f} {rep.radius:10.6f} {str(rep.cheeger_regular):>8s} {gap:>12s}")

# The Cheeger set really attains h: perimeter / area of the arc-polygon equals h.
sq = shapes["unit square"]
per, ar = arc_polygon_measures(cheeger_set(sq))
print(f"\nsquare Cheeger set: P/|E| = {per / ar:.12f}, 2 + sqrt(pi) = {2 + math.sqrt(math.pi):.12f}")

# Among unit-area polygons the disk does best; regular N-gons approach it.
for n in (3, 4, 6, 12, 48):
    print(f"N={n:3d}  sqrt|O| h = {scaled_cheeger(regular_ngon(n)):.6f}")
print(f"disk   2 sqrt(pi)  = {2 * math.sqrt(math.pi):.6f}")
