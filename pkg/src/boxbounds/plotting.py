"""Figure rendering for the CLI report paths (written next to the CSV output)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .moments import ExponentPair, gamma_box


def plot_series(path: str, title: str, xlabel: str, ylabel: str,
                series: dict[str, tuple[list, list]], logy: bool = False) -> None:
    """One line per named series against a shared x axis."""
    fig, ax = plt.subplots(figsize=(6.4, 4.2))
    for label, (xs, ys) in series.items():
        ax.plot(xs, ys, marker="o", markersize=3, linewidth=1.2, label=label)
    if logy:
        ax.set_yscale("log")
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    if len(series) > 1:
        ax.legend(fontsize=8)
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_table_cells(path: str, table_id: int, cells) -> None:
    """Computed vs reference curves, one panel per (function, column)."""
    groups: dict[tuple[str, str], list] = {}
    for c in cells:
        groups.setdefault((c.function, c.column), []).append(c)
    ncols = min(3, max(1, len(groups)))
    nrows = (len(groups) + ncols - 1) // ncols
    fig, axes = plt.subplots(nrows, ncols, figsize=(4.2 * ncols, 3.2 * nrows),
                             squeeze=False)
    for ax in axes.ravel()[len(groups):]:
        ax.axis("off")
    for ax, ((func, column), items) in zip(axes.ravel(), sorted(groups.items())):
        items = sorted(items, key=lambda c: (c.k, c.r or 0))
        ks = [c.k if c.r in (None, 1) else c.k + 0.15 * (c.r - 1) for c in items]
        ref = [c.reference if c.reference is not None else np.nan for c in items]
        com = [c.computed if c.computed is not None else np.nan for c in items]
        ax.plot(ks, ref, "o-", markersize=3, linewidth=1, label="reference")
        ax.plot(ks, com, "x--", markersize=4, linewidth=1, label="computed")
        ax.set_title(f"{func} / {column}", fontsize=9)
        ax.grid(True, alpha=0.3)
        ax.legend(fontsize=7)
    fig.suptitle(f"table {table_id}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_density(path: str, pair: ExponentPair, r: int = 1,
                 marks: dict[str, tuple[float, ...]] | None = None) -> None:
    """Contour of the normalized density (x^eta (1-x)^beta)^r on the square.

    Only defined for two variables; marks are labeled points such as the mode
    or the mean.
    """
    if pair.n != 2:
        raise ValueError("density plots require exactly 2 variables")
    powered = ExponentPair(tuple(r * e for e in pair.eta),
                           tuple(r * b for b in pair.beta))
    norm = gamma_box(powered)
    t = np.linspace(0.0, 1.0, 201)
    X, Y = np.meshgrid(t, t, indexing="ij")
    Z = (X ** powered.eta[0] * (1 - X) ** powered.beta[0]
         * Y ** powered.eta[1] * (1 - Y) ** powered.beta[1]) / norm
    fig, ax = plt.subplots(figsize=(5.2, 4.6))
    cs = ax.contourf(X, Y, Z, levels=24, cmap="viridis")
    fig.colorbar(cs, ax=ax, label="density")
    for label, point in (marks or {}).items():
        ax.plot([point[0]], [point[1]], "r*", markersize=10)
        ax.annotate(label, point, textcoords="offset points", xytext=(6, 4),
                    color="white", fontsize=8)
    ax.set_xlabel("x1")
    ax.set_ylabel("x2")
    ax.set_title(f"density eta={pair.eta} beta={pair.beta} r={r}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_histogram(path: str, values, title: str,
                   marks: dict[str, float] | None = None) -> None:
    """Histogram of sampled objective values with labeled vertical marks."""
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    ax.hist(np.asarray(values), bins=40, alpha=0.75)
    for label, x in (marks or {}).items():
        ax.axvline(x, linestyle="--", linewidth=1.2, color="k")
        ax.annotate(label, (x, ax.get_ylim()[1] * 0.95), fontsize=8, rotation=90)
    ax.set_xlabel("f value")
    ax.set_ylabel("count")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
