"""SVG figures for sweep tables (needs the ``plot`` extra, i.e. matplotlib)."""

from __future__ import annotations

from typing import Sequence

from .lab import SweepRow


def plot_sweep(rows: Sequence[SweepRow], path) -> None:
    """Three panels: deficit against eps on log-log axes with a slope-2 guide,
    then hd^2/deficit and l1^2/deficit against eps.

    Rows with eps <= 0 or a degenerate deficit are left out of the log panel.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    pos = [r for r in rows if r.eps > 0 and r.deficit > 0]
    fig, axes = plt.subplots(1, 3, figsize=(12, 3.8))

    ax = axes[0]
    if pos:
        eps = [r.eps for r in pos]
        ax.loglog(eps, [r.deficit for r in pos], "o-", label="deficit")
        anchor = pos[-1]
        ax.loglog(eps, [anchor.deficit * (e / anchor.eps) ** 2 for e in eps], "k--", lw=0.8, label="slope 2")
        ax.legend()
    ax.set_xlabel("eps")
    ax.set_ylabel("deficit")

    for ax, attr, label in ((axes[1], "ratio_hd", "hd^2 / deficit"), (axes[2], "ratio_l1", "l1^2 / deficit")):
        pts = [(r.eps, getattr(r, attr)) for r in rows if getattr(r, attr) is not None]
        if pts:
            ax.semilogx(*zip(*pts), "s-")
        ax.set_xlabel("eps")
        ax.set_ylabel(label)
        ax.set_ylim(bottom=0)

    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)
