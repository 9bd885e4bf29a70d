"""Matplotlib figures written next to the CSV/JSON reports.

Figures are rendered with the non-interactive Agg backend and saved to
files; nothing here opens a window.
"""
from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .bounds import (  # noqa: E402
    TABLE1_KS,
    bound_branching,
    bound_leafstrip,
    caterpillar_lower_bound,
    table1,
    threshold_closed_form,
)
from .burning import BurnTrace  # noqa: E402

STYLE = {
    "font.size": 10,
    "axes.labelsize": 10,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
}


def _finish(fig, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path


def plot_threshold(path: str | Path, ks=TABLE1_KS) -> Path:
    """Largest ``n`` where the branching bound matches or beats the leaf-strip one, per ``k``."""
    values = table1(ks)
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(5.5, 3.4))
        dense = list(range(3, max(ks) + 1))
        ax.plot(dense, [threshold_closed_form(k) for k in dense], color="0.6", lw=1,
                label="closed form (float)")
        ax.plot(list(values), list(values.values()), "o", color="C0", ms=4, label="exact threshold")
        for i, (k, n) in enumerate(values.items()):
            # alternate sides so the crowded small-k labels stay legible
            offset = (3, 5) if i % 2 == 0 else (4, -10)
            ax.annotate(str(n), (k, n), textcoords="offset points", xytext=offset, fontsize=7)
        ax.set_xscale("log")
        ax.set_yscale("log")
        ax.set_xlabel("k")
        ax.set_ylabel("largest n")
        ax.legend(frameon=False)
        return _finish(fig, path)


def plot_bounds(k: int, n_max: int, path: str | Path) -> Path:
    """Step plot of the upper and lower bounds for ``k+``-branching trees on ``1..n_max`` vertices."""
    ns = list(range(1, n_max + 1))
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(5.5, 3.4))
        ax.step(ns, [bound_branching(n, k) for n in ns], where="post", label="branching bound")
        ax.step(ns, [bound_leafstrip(n, k) for n in ns], where="post", label="leaf-strip bound")
        ax.step(ns, [caterpillar_lower_bound(n, k) for n in ns], where="post", ls="--",
                label="caterpillar lower bound")
        ax.set_xlabel("n")
        ax.set_ylabel("rounds")
        ax.set_title(f"k = {k}", fontsize=10)
        ax.legend(frameon=False)
        return _finish(fig, path)


def plot_trace(trace: BurnTrace, path: str | Path, sources=()) -> Path:
    """Bar chart of how many vertices first catch fire in each round."""
    rounds = list(range(1, trace.rounds_used + 1))
    counts = [len(trace.burned_in(r)) for r in rounds]
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4.5, 3))
        ax.bar(rounds, counts, color="C1")
        if trace.unburned:
            ax.bar([trace.rounds_used + 1], [len(trace.unburned)], color="0.7", label="unburned")
            ax.legend(frameon=False)
        ticks = rounds + ([trace.rounds_used + 1] if trace.unburned else [])
        names = [str(s) for s in sources] + [""] * len(ticks)
        ax.set_xticks(ticks)
        ax.set_xticklabels([f"{r}\n{name}" if name else str(r) for r, name in zip(ticks, names)])
        ax.yaxis.get_major_locator().set_params(integer=True)
        ax.set_xlabel("round (source)")
        ax.set_ylabel("newly burned")
        return _finish(fig, path)
