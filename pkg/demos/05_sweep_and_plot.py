"""Quadratic sharpness: the Cheeger deficit of a perturbed hexagon scales like hd^2.

Writes sweep.csv and, if matplotlib is installed, sweep.svg into the current
directory (or the directory given as the first argument).
"""

import sys
from pathlib import Path

from cheegerpoly.lab import sweep_perturbation, write_sweep_csv

out = Path(sys.argv[1] if len(sys.argv) > 1 else ".")
out.mkdir(parents=True, exist_ok=True)

_, rows = sweep_perturbation(6, [0.16, 0.08, 0.04, 0.02, 0.01, 0.005])
print(f"{'eps':>7s} {'deficit':>12s} {'hd':>10s} {'deficit/hd^2':>13s} {'order':>7s}")
for r in rows:
    order = "" if r.order_estimate is None else f"{r.order_estimate:.4f}"
    print(f"{r.eps:7.3f} {r.deficit:12.4e} {r.hd:10.6f} {r.deficit_over_hd2:13.6f} {order:>7s}")

write_sweep_csv(rows, out / "sweep.csv")
try:
    from cheegerpoly.plotting import plot_sweep
except ImportError:
    print("matplotlib missing, skipping the plot")
else:
    plot_sweep(rows, out / "sweep.svg")
    print(f"wrote {out / 'sweep.csv'} and {out / 'sweep.svg'}")
