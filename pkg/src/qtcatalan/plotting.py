"""Static figures for the CLI's ``--figure`` flag.

Everything renders off-screen to a file; the format follows the extension.
"""

from __future__ import annotations

from collections import Counter
from typing import Callable, Iterable

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .chainfw import ChainDecomposition, ChainSystem, CycleDrawing  # noqa: E402
from .qtpoly import Poly  # noqa: E402


def _save(fig, path) -> None:
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_genfun(p: Poly, path, title: str = "") -> None:
    """Coefficient grid: cell (j, k) holds the coefficient of q^j t^k."""
    top = max(p.degree(), 0)
    grid = [[p.coeff(j, k) for j in range(top + 1)] for k in range(top + 1)]
    fig, ax = plt.subplots(figsize=(5, 5))
    ax.imshow(grid, origin="lower", cmap="Blues")
    if top <= 20:
        for (j, k), c in p.terms.items():
            ax.text(j, k, str(c), ha="center", va="center", fontsize=7)
    ax.set_xlabel("q-degree")
    ax.set_ylabel("t-degree")
    ax.set_title(title)
    _save(fig, path)


def plot_stats(pairs: Iterable[tuple[int, int]], path, title: str = "",
               xlabel: str = "area", ylabel: str = "dinv") -> None:
    """Scatter of statistic pairs, marker size growing with multiplicity."""
    counts = Counter(pairs)
    xs, ys, ss = [], [], []
    for (a, d), c in sorted(counts.items()):
        xs.append(a)
        ys.append(d)
        ss.append(20 * c)
    fig, ax = plt.subplots(figsize=(5, 5))
    ax.scatter(xs, ys, s=ss, alpha=0.6)
    lim = max(xs + ys + [1]) + 1
    ax.plot([0, lim], [0, lim], ls=":", color="grey", lw=0.8)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    _save(fig, path)


def plot_chains(s: ChainSystem, dec: ChainDecomposition, path, title: str = "",
                label: Callable = str) -> None:
    """Chains as polylines in the (a, d) plane; heads green, tails red."""
    fig, ax = plt.subplots(figsize=(6, 6))
    for i, chain in enumerate(dec.chains):
        pts = [s.bidegree(w) for w in chain]
        # small offset so parallel chains stay distinguishable
        off = 0.08 * ((i % 5) - 2)
        ax.plot([a + off for a, _ in pts], [d + off for _, d in pts], lw=1, alpha=0.7, marker=".", ms=4)
    # heads are drawn larger so a length-zero chain shows both colours
    for subset, colour, size in ((dec.initial, "tab:green", 60), (dec.terminal, "tab:red", 20)):
        pts = [s.bidegree(w) for w in subset]
        ax.scatter([a for a, _ in pts], [d for _, d in pts], c=colour, s=size, zorder=3)
    if len(dec.initial) <= 12:
        for w in dec.initial:
            a, d = s.bidegree(w)
            ax.annotate(label(w), (a, d), fontsize=7, xytext=(3, 3), textcoords="offset points")
    ax.set_xlabel("a")
    ax.set_ylabel("d")
    ax.set_title(title)
    _save(fig, path)


def plot_cycle_drawings(drawings: list[CycleDrawing], path, label: Callable = str) -> None:
    """One row per cycle; black dots filled, white dots hollow."""
    fig, axes = plt.subplots(len(drawings), 1, figsize=(7, 1.8 * max(len(drawings), 1)), squeeze=False)
    for ax, drawing in zip(axes[:, 0], drawings):
        xs = [p.x for p in drawing.dots]
        ys = [p.y for p in drawing.dots]
        ax.plot(xs, ys, color="grey", lw=0.8)
        ax.axhline(0, color="grey", ls=":", lw=0.8)
        for p in drawing.dots:
            face = "black" if p.color == "black" else "white"
            ax.scatter([p.x], [p.y], facecolors=face, edgecolors="black", s=30, zorder=3)
            ax.annotate(label(p.element), (p.x, p.y), fontsize=7, xytext=(2, 4), textcoords="offset points")
    _save(fig, path)


def plot_gm(con, path) -> None:
    """The X and Y lattice sets of the Gorsky-Mazin construction, coloured by region."""
    colours = {1: "tab:blue", 2: "tab:orange", 3: "tab:green"}
    fig, (left, right) = plt.subplots(1, 2, figsize=(9, 4.5))
    for p in con.X:
        left.scatter([p[0]], [p[1]], c=colours[con.region_x(p)], s=12)
    for p in con.Y:
        right.scatter([p[0]], [p[1]], c=colours[con.region_y(p)], s=12)
    left.set_title(f"X (r={con.r})")
    left.set_xlabel("c")
    left.set_ylabel("d")
    right.set_title("Y")
    right.set_xlabel("a")
    right.set_ylabel("b")
    _save(fig, path)
