"""Why the stability estimate needs convexity.

A unit square with a thin spike of height k keeps its Cheeger constant
bounded (the square's Cheeger set still fits inside), while its Hausdorff
distance to the regular hexagon grows without bound.
"""

from cheegerpoly import tentacle_series
from cheegerpoly.lab import TENTACLE_BOUND

s = tentacle_series([5, 10, 20, 40, 80, 160])
print(f"{'k':>5s} {'area':>9s} {'h bound':>9s} {'aligned hd':>11s} {'lower bound':>11s}")
for r in s.rows:
    print(f"{r.k:5.0f} {r.area:9.6f} {r.scaled_bound:9.5f} {r.hd_aligned:11.4f} {r.hd_lower_bound:11.4f}")
print(f"\nevery bound <= {TENTACLE_BOUND:.5f}: {s.bound_ok}; hd strictly increasing: {s.hd_increasing}")
