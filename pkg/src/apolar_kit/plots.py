"""Figure rendering for the reporting paths of the CLI.

Figures are written straight to files with the Agg backend, so no display
is ever required.  The JSON sent to stdout is unchanged by any of this;
plots are a side output.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)

_STYLE = {
    "figure.figsize": (5.2, 3.4),
    "font.size": 9,
    "axes.grid": True,
    "grid.alpha": 0.35,
    "savefig.dpi": 160,
    "savefig.bbox": "tight",
}


def hilbert_figure(values: list[int], limit: int, regularity: int, path: str,
                   title: str = "Hilbert function") -> str:
    """Step plot of a Hilbert function with its plateau marked."""
    tail = 2
    xs = list(range(len(values) + tail))
    ys = list(values) + [limit] * tail
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        ax.step(xs, ys, where="post", lw=1.6)
        ax.plot(xs, ys, "o", ms=3.5)
        ax.axhline(limit, color="tab:gray", lw=0.9, ls="--",
                   label=f"length = {limit}")
        ax.axvline(regularity, color="tab:red", lw=0.9, ls=":",
                   label=f"regularity = {regularity}")
        ax.set_xlabel("degree")
        ax.set_ylabel("dimension")
        ax.set_xticks(xs)
        ax.set_title(title)
        ax.legend(loc="lower right", frameon=False)
        fig.savefig(path)
        plt.close(fig)
    return path


def corpus_figure(reports: list[dict], path: str) -> str:
    """Per-fixture pass/fail bars for a corpus run."""
    names = [r["id"] for r in reports]
    passed = [sum(1 for c in r["checks"] if c["passed"]) for r in reports]
    failed = [sum(1 for c in r["checks"] if not c["passed"]) for r in reports]
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        ax.bar(names, passed, color="tab:green", label="passed")
        ax.bar(names, failed, bottom=passed, color="tab:red", label="failed")
        ax.set_ylabel("checks")
        ax.set_title("fixture results")
        ax.tick_params(axis="x", rotation=45)
        ax.legend(frameon=False)
        fig.savefig(path)
        plt.close(fig)
    return path


def ensure_plot_dir(directory: str) -> str:
    os.makedirs(directory, exist_ok=True)
    return directory
