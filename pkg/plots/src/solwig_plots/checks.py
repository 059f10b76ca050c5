"""Scripted feature checks for the four standard figures.

Each check inspects the plotted data (not the pixels) for the qualitative
behavior the figure is supposed to show, and raises ``FeatureError`` with a
concrete measurement when the shape is wrong.
"""

from __future__ import annotations

import numpy as np

from .csvio import Table
from .render import _surface_grid

__all__ = [
    "FeatureError",
    "check_kink_charge_profile",
    "check_kink_wigner_surface",
    "check_sg_charge_profile",
    "check_sg_wigner_surface",
]


class FeatureError(AssertionError):
    """A rendered dataset does not show the expected qualitative feature."""


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise FeatureError(message)


def check_sg_wigner_surface(table: Table, column: str = "abs_w") -> None:
    """Magnitude minimum sits near the origin and the surface rises outward."""
    x_axis, k_axis, surface = _surface_grid(table, column)
    i, j = np.unravel_index(np.argmin(surface), surface.shape)
    x_span = max(abs(x_axis[0]), abs(x_axis[-1]))
    k_span = max(abs(k_axis[0]), abs(k_axis[-1]))
    _require(abs(x_axis[i]) <= 0.5 * x_span, f"minimum at x={x_axis[i]:.3f}, not near the origin")
    _require(abs(k_axis[j]) <= 0.5 * k_span, f"minimum at k={k_axis[j]:.3f}, not near the origin")
    corners = [surface[0, 0], surface[0, -1], surface[-1, 0], surface[-1, -1]]
    _require(min(corners) > surface[i, j], "surface does not rise toward the corners")
    # outward growth along both axes through the minimum
    _require(surface[0, j] > surface[i, j] and surface[-1, j] > surface[i, j], "no growth along x")
    _require(surface[i, 0] > surface[i, j] and surface[i, -1] > surface[i, j], "no growth along k")


def check_sg_charge_profile(table: Table, column: str = "value") -> None:
    """|Q(x)| dips near the origin and grows toward both domain edges."""
    x = table.column("x")
    magnitude = np.abs(table.column(column))
    i = int(np.argmin(magnitude))
    _require(0 < i < x.size - 1, "minimum sits on the domain edge")
    span = max(abs(x[0]), abs(x[-1]))
    _require(abs(x[i]) <= 0.35 * span, f"minimum at x={x[i]:.3f}, not near the origin")
    _require(magnitude[0] == np.max(magnitude[: i + 1]), "left branch is not largest at the edge")
    _require(magnitude[-1] == np.max(magnitude[i:]), "right branch is not largest at the edge")
    _require(magnitude[0] > 3.0 * magnitude[i] and magnitude[-1] > 3.0 * magnitude[i], "growth is not pronounced")


def check_kink_wigner_surface(table: Table, column: str = "re_w") -> None:
    """Momentum-symmetric surface with its magnitude peaked at k = 0."""
    x_axis, k_axis, surface = _surface_grid(table, column)
    asymmetry = np.max(np.abs(surface - surface[:, ::-1])) / np.max(np.abs(surface))
    _require(asymmetry <= 1e-8, f"surface is not symmetric in momentum (defect {asymmetry:.2e})")
    i, j = np.unravel_index(np.argmax(np.abs(surface)), surface.shape)
    _require(abs(k_axis[j]) <= 1e-12, f"peak at k={k_axis[j]:.3f}, expected zero momentum")
    # every position slice also peaks at zero momentum
    j0 = int(np.argmin(np.abs(k_axis)))
    slice_peaks = np.argmax(np.abs(surface), axis=1)
    _require(np.all(slice_peaks == j0), "some position slices peak away from k = 0")


def check_kink_charge_profile(table: Table, column: str = "value") -> None:
    """Peak near the origin, sharp decay to the right, damped oscillation into
    a plateau on the left."""
    x = table.column("x")
    q = table.column(column)
    peak = int(np.argmax(q))
    _require(abs(x[peak]) <= 1.0, f"peak at x={x[peak]:.3f}, not near the origin")
    _require(q[-1] <= 0.01 * q[peak], f"right side does not decay (ends at {q[-1] / q[peak]:.3f} of peak)")

    left = q[x <= x[peak] - 1.0]
    _require(left.size >= 10, "left side too short to judge")
    # oscillation: alternating local extrema whose swing clears numerical noise
    interior = (left[1:-1] - left[:-2]) * (left[1:-1] - left[2:])
    extrema = left[np.flatnonzero(interior > 0.0) + 1]
    swings = np.abs(np.diff(extrema))
    cycles = int(np.sum(swings > 2e-4 * q[peak]))
    _require(cycles >= 3, f"left side shows {cycles} oscillation swings above noise, expected at least 3")
    # plateau: the far-left fifth is flat but far from zero
    tail = left[: max(3, left.size // 5)]
    _require(np.ptp(tail) <= 0.05 * np.mean(tail), "far-left values are not plateau-like")
    _require(np.mean(tail) > 0.1 * q[peak], "left plateau is not well above zero")
