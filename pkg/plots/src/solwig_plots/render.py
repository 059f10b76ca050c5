"""Turn solwig CSV tables into raster figures.

Surface plots reshape the flat (x, k, value) rows back onto their rectangular
grid; line plots draw (x, value).  Rendering only ever reads the CSV, and a
fixed figure size and dpi keep re-renders pixel-compatible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .csvio import Table, read_table

__all__ = ["FigureSpec", "RenderSummary", "render"]

KINDS = ("surface3d", "line")


@dataclass(frozen=True)
class FigureSpec:
    """One figure: which CSV, surface or line, which value column, where to."""

    csv_path: str
    kind: str
    column: str
    out_path: str
    x_label: str = "x"
    y_label: str = ""
    title: str = ""
    dpi: int = 150
    size: tuple[float, float] = (8.0, 6.0)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown figure kind {self.kind!r}; choose from {', '.join(KINDS)}")


@dataclass(frozen=True)
class RenderSummary:
    """What was drawn: pixel dimensions and the data extents on each axis."""

    out_path: str
    width_px: int
    height_px: int
    extents: dict = field(default_factory=dict)


def _surface_grid(table: Table, column: str):
    x = table.column("x")
    k = table.column("k")
    values = table.column(column)
    x_axis = np.unique(x)
    k_axis = np.unique(k)
    if x_axis.size * k_axis.size != values.size:
        raise ValueError(
            f"rows do not tile a rectangular grid: {x_axis.size} x values times "
            f"{k_axis.size} k values != {values.size} rows"
        )
    order = np.lexsort((k, x))
    surface = values[order].reshape(x_axis.size, k_axis.size)
    return x_axis, k_axis, surface


def render(spec: FigureSpec) -> RenderSummary:
    """Render one figure; raises before touching the output file on bad input."""
    table = read_table(spec.csv_path)
    if spec.column not in table.columns:
        raise ValueError(
            f"column {spec.column!r} not in {spec.csv_path}; available columns: {', '.join(table.columns)}"
        )

    fig = plt.figure(figsize=spec.size)
    try:
        if spec.kind == "surface3d":
            x_axis, k_axis, surface = _surface_grid(table, spec.column)
            ax = fig.add_subplot(projection="3d")
            xg, kg = np.meshgrid(x_axis, k_axis, indexing="ij")
            ax.plot_surface(xg, kg, surface, cmap="viridis", linewidth=0.0, antialiased=True)
            ax.set_xlabel(spec.x_label)
            ax.set_ylabel("k")
            ax.set_zlabel(spec.y_label or spec.column)
            extents = {
                "x": (float(x_axis[0]), float(x_axis[-1])),
                "k": (float(k_axis[0]), float(k_axis[-1])),
                spec.column: (float(surface.min()), float(surface.max())),
            }
        else:
            x = table.column("x")
            values = table.column(spec.column)
            ax = fig.add_subplot()
            ax.plot(x, values, lw=1.5)
            ax.set_xlabel(spec.x_label)
            ax.set_ylabel(spec.y_label or spec.column)
            ax.grid(True, alpha=0.3)
            extents = {
                "x": (float(x.min()), float(x.max())),
                spec.column: (float(values.min()), float(values.max())),
            }
        if spec.title:
            ax.set_title(spec.title)
        fig.savefig(spec.out_path, dpi=spec.dpi)
    finally:
        plt.close(fig)

    width = int(round(spec.size[0] * spec.dpi))
    height = int(round(spec.size[1] * spec.dpi))
    return RenderSummary(out_path=spec.out_path, width_px=width, height_px=height, extents=extents)
