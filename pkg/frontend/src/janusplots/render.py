"""Static figure rendering from scan files.

Strictly a presentation layer: every number drawn (including the annotated
minimum) comes from the input files. Heatmaps mask infeasible (null) cells in
a neutral gray distinct from the data colormap, and the g2 = 1 classical
boundary contour is always drawn when it crosses the data range.
"""

from __future__ import annotations

from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt        # noqa: E402
import numpy as np                     # noqa: E402
from matplotlib import colormaps       # noqa: E402

from .recipes import AXIS_LABELS, TITLES, FigureRecipe  # noqa: E402
from .scanfile import ScanData                          # noqa: E402

# Infeasible cells: dark neutral gray, far from every coolwarm entry
# (the colormap passes through a light gray near its midpoint).
MASK_COLOR = (0.35, 0.35, 0.35, 1.0)
CLASSICAL_LEVEL = 1.0


@dataclass(frozen=True)
class RenderInfo:
    """What was drawn: the annotated minimum and masking statistics."""

    output: str
    min_value: float
    min_coords: tuple[float, ...]
    masked_cells: int


def _axis_label(name: str) -> str:
    return AXIS_LABELS.get(name, name)


def _render_curve(ax, scan: ScanData):
    axis = scan.axes[0]
    ax.plot(axis.grid(), scan.values, lw=1.8)
    ax.set_xlabel(_axis_label(axis.name))
    ax.set_ylabel("g2")
    ax.axhline(CLASSICAL_LEVEL, color="0.4", lw=0.8, ls="--")
    mn, coords = scan.min_entry()
    ax.plot([coords[0]], [mn], "o", ms=5, color="C3")
    ax.annotate(f"min g2 = {mn:.5f}", xy=(coords[0], mn),
                xytext=(0.35, 0.15), textcoords="axes fraction",
                arrowprops={"arrowstyle": "->", "lw": 0.8})
    return mn, coords


def _render_heatmap(ax, fig, scan: ScanData, recipe: FigureRecipe):
    x_axis, y_axis = scan.axes[0], scan.axes[1]
    data = scan.masked.T  # rows = second axis for a natural x/y orientation
    cmap = colormaps["coolwarm"].copy()
    cmap.set_bad(MASK_COLOR)
    vmin, vmax = recipe.color_limits or (None, None)
    mesh = ax.pcolormesh(x_axis.grid(), y_axis.grid(), data,
                         cmap=cmap, vmin=vmin, vmax=vmax, shading="nearest")
    fig.colorbar(mesh, ax=ax, label="g2")
    ax.set_xlabel(_axis_label(x_axis.name))
    ax.set_ylabel(_axis_label(y_axis.name))
    finite = scan.values[np.isfinite(scan.values)]
    if finite.size == 0:
        # fully infeasible scan: still a valid (all-masked) image
        return float("nan"), ()
    levels = [lv for lv in recipe.contour_levels if finite.min() < lv < finite.max()]
    if CLASSICAL_LEVEL not in levels and finite.min() < CLASSICAL_LEVEL < finite.max():
        levels = sorted(set(levels) | {CLASSICAL_LEVEL})
    if levels:
        cs = ax.contour(x_axis.grid(), y_axis.grid(), data, levels=levels,
                        colors="white", linewidths=0.7)
        ax.clabel(cs, fmt="%.2g", fontsize=7)
    mn, coords = scan.min_entry()
    ax.plot([coords[0]], [coords[1]], "x", ms=7, color="black")
    ax.annotate(f"min g2 = {mn:.5f}", xy=(coords[0], coords[1]),
                xytext=(0.03, 0.96), textcoords="axes fraction", va="top",
                bbox={"boxstyle": "round", "fc": "white", "alpha": 0.85, "lw": 0.4})
    return mn, coords


def render(recipe: FigureRecipe) -> RenderInfo:
    """Render one figure; returns the annotated minimum taken from the file."""
    scans = recipe.load()
    scan = scans[0]
    fig, ax = plt.subplots(figsize=(6.0, 4.4), dpi=150)
    try:
        if len(scan.axes) == 1:
            mn, coords = _render_curve(ax, scan)
        elif len(scan.axes) == 2:
            mn, coords = _render_heatmap(ax, fig, scan, recipe)
        else:
            raise ValueError(f"cannot render a {len(scan.axes)}-axis scan")
        title = TITLES.get(recipe.figure_id, f"scan ({scan.formula})")
        ax.set_title(title, fontsize=11)
        fig.tight_layout()
        fig.savefig(recipe.output)
    finally:
        plt.close(fig)
    masked = int(np.sum(~np.isfinite(scan.values)))
    return RenderInfo(output=recipe.output, min_value=mn, min_coords=coords,
                      masked_cells=masked)
