"""Figures for the report command, written straight to files."""

from __future__ import annotations

from collections import defaultdict
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib import ticker  # noqa: E402

from .closed_forms import padovan_number  # noqa: E402
from .report import ReportRow  # noqa: E402

STYLE = {
    "figure.figsize": (7.0, 4.3),
    "font.size": 10,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
    "savefig.bbox": "tight",
}


def _save(fig, path: Path) -> Path:
    # no Software tag, so repeated runs write identical PNGs
    fig.savefig(path, metadata={"Software": None})
    plt.close(fig)
    return path


def plot_orders(rows: list[ReportRow], path: Path) -> Path:
    """Stacked |V(Phi^n_k)| per n, one layer per weight offset k - kmin, against P(n+2)."""
    ns = sorted({r.n for r in rows})
    layers: dict[int, dict[int, int]] = defaultdict(dict)
    for r in rows:
        if r.k is not None:
            layers[r.k - r.kmin][r.n] = r.order
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        bottom = [0] * len(ns)
        for offset in sorted(layers):
            heights = [layers[offset].get(n, 0) for n in ns]
            ax.bar(ns, heights, bottom=bottom, label=f"k = kmin + {offset}", width=0.8)
            bottom = [b + h for b, h in zip(bottom, heights)]
        ax.plot(ns, [padovan_number(n + 2) for n in ns], "k.", markersize=8, label="P(n+2)")
        ax.set_xlabel("word length n")
        ax.set_ylabel("number of Padovan words")
        ax.legend(frameon=False, fontsize=8)
        return _save(fig, path)


def plot_cube_counts(rows: list[ReportRow], path: Path) -> Path:
    """Induced d-cubes summed over all weights k, per word length n."""
    ns = sorted({r.n for r in rows})
    totals: dict[int, dict[int, int]] = defaultdict(lambda: defaultdict(int))
    for r in rows:
        for d, c in enumerate(r.cubes):
            totals[d][r.n] += c
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots()
        for d in sorted(totals):
            xs = [n for n in ns if totals[d].get(n)]
            ax.plot(xs, [totals[d][n] for n in xs], marker="o", markersize=3, label=f"Q{d}")
        ax.set_yscale("log")
        ax.yaxis.set_major_formatter(ticker.FuncFormatter(lambda y, _: f"{y:g}"))
        ax.yaxis.set_minor_formatter(ticker.NullFormatter())
        ax.set_xlabel("word length n")
        ax.set_ylabel("induced cubes, summed over k")
        ax.legend(frameon=False, fontsize=8, ncol=2)
        return _save(fig, path)


def render_report_figures(rows: list[ReportRow], outdir: str | Path) -> list[Path]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    return [
        plot_orders(rows, outdir / "orders.png"),
        plot_cube_counts(rows, outdir / "cube_counts.png"),
    ]
