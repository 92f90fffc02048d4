"""Inner parallel sets and disk dilations.

Shrinking a convex polygon by r moves every edge inward; short edges vanish
along the way.  Dilating by a disk adds arcs at the corners and obeys the
Steiner formula.
"""

import math

from cheegerpoly import inner_parallel, inradius, minkowski_disk, random_convex_ngon
from cheegerpoly.offsetting import arc_polygon_measures, inner_area

p = random_convex_ngon(7, 42)
rin = inradius(p)
print(f"random 7-gon: area {p.area:.6f}, perimeter {p.perimeter:.6f}, inradius {rin:.6f}")

for frac in (0.0, 0.25, 0.5, 0.75, 0.95):
    r = frac * rin
    q = inner_parallel(p, r)
    print(f"  r = {r:.4f}: {q.n} sides, area {inner_area(p, r):.6f}")

print("\nSteiner formula check for the disk dilation:")
for r in (0.1, 0.5, 2.0):
    per, ar = arc_polygon_measures(minkowski_disk(p, r))
    print(f"  r = {r}: perimeter {per:.10f} vs {p.perimeter + 2 * math.pi * r:.10f}, "
          f"area {ar:.10f} vs {p.area + p.perimeter * r + math.pi * r * r:.10f}")
