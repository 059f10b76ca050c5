"""Phase-space functionals: densities, fidelity and the speed-limit time.

Charge is the momentum marginal Q(x) = Int W(x, k) dk, current the first
moment J(x) = Int k W(x, k) dk.  Current is only defined here on momentum
grids symmetric about zero, because the J = 0 statements for real states hold
for symmetric bounds; an asymmetric grid is a hard error rather than a silent
nonzero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .numerics import simpson_weights
from .states import PhysicalParams, sg_constants
from .wigner import WignerField

__all__ = [
    "DensityProfile",
    "FidelityResult",
    "QSLInputs",
    "charge_density",
    "current_density",
    "fidelity",
    "qsl_time",
    "sg_charge_closed",
]

CLAMP_TOLERANCE = 1e-4


@dataclass(frozen=True)
class DensityProfile:
    """One-dimensional observable series; the real part is the physical density."""

    x: np.ndarray
    values: np.ndarray
    kind: str

    def __post_init__(self):
        if self.x.shape != self.values.shape:
            raise ValueError(f"x and values must match, got {self.x.shape} vs {self.values.shape}")
        if self.kind not in ("charge", "current"):
            raise ValueError(f"unknown profile kind {self.kind!r}")

    def integral(self) -> complex:
        """Simpson integral of the profile over its (uniform, odd-length) x grid."""
        if self.x.size < 3 or self.x.size % 2 == 0:
            raise ValueError(f"profile integral needs an odd sample count of at least 3, got {self.x.size}")
        step = float(self.x[1] - self.x[0])
        return complex(np.dot(simpson_weights(self.x.size), self.values) * (step / 3.0))


def _k_quadrature(field: WignerField) -> np.ndarray:
    if field.grid.nk % 2 == 0:
        raise ValueError(f"momentum integration needs an odd nk, got {field.grid.nk}")
    return simpson_weights(field.grid.nk) * (field.grid.k_step / 3.0)


def charge_density(field: WignerField) -> DensityProfile:
    """Momentum marginal of the field at every grid x."""
    weights = _k_quadrature(field)
    return DensityProfile(x=field.grid.x_values(), values=field.values @ weights, kind="charge")


def current_density(field: WignerField) -> DensityProfile:
    """First momentum moment of the field; requires k_min = -k_max."""
    if field.grid.k_min != -field.grid.k_max:
        raise ValueError(
            f"current density requires a momentum grid symmetric about zero, "
            f"got [{field.grid.k_min}, {field.grid.k_max}]"
        )
    weights = _k_quadrature(field) * field.grid.k_values()
    return DensityProfile(x=field.grid.x_values(), values=field.values @ weights, kind="current")


def sg_charge_closed(x, params: PhysicalParams):
    """Closed sine-Gordon charge ``-2 exp{(A + [m x + pi/2]^2 / 2k0) / 2pi}``.

    The sign is the product of the two principal-branch imaginary units picked
    up on the way (y-integral and formal k-integral); the source's opposite
    branch convention squares to the same -1, and the modulus is branch-free.
    """
    der = sg_constants(params)
    x = np.asarray(x, dtype=float)
    exponent = (der.A + (params.m * x + math.pi / 2.0) ** 2 / (2.0 * params.k0)) / (2.0 * math.pi)
    with np.errstate(over="ignore"):
        return -2.0 * np.exp(exponent) + 0j


class FidelityResult(NamedTuple):
    """Phase-space overlap fidelity.

    ``value`` always lies in [0, 1] (quadrature noise at the ulp level is
    snapped back into range so it can feed :class:`QSLInputs` directly);
    ``clamped`` flags only material excursions beyond the noise tolerance,
    and the raw complex overlap is always retained."""

    value: float
    raw: complex
    clamped: bool


def fidelity(w0: WignerField, wt: WignerField) -> FidelityResult:
    """Overlap fidelity ``2 pi hbar * Int Int W0 Wt dx dk`` by double Simpson.

    The two fields must share the grid and hbar.  Normalizable states give a
    value in [0, 1] up to quadrature noise; window-truncated soliton fields
    give a window-truncated number that may fall outside, reported raw with
    the headline value clamped.
    """
    if w0.grid != wt.grid:
        raise ValueError("fields live on different grids")
    if w0.hbar != wt.hbar:
        raise ValueError(f"fields carry different hbar: {w0.hbar} vs {wt.hbar}")
    grid = w0.grid
    if grid.nx % 2 == 0 or grid.nk % 2 == 0:
        raise ValueError(f"double Simpson needs odd nx and nk, got {grid.nx} x {grid.nk}")
    wx = simpson_weights(grid.nx) * (grid.x_step / 3.0)
    wk = simpson_weights(grid.nk) * (grid.k_step / 3.0)
    # spelled out over real parts so the product commutes bit-for-bit (numpy's
    # fused complex multiply is argument-order sensitive at one ulp), keeping
    # F(W0, Wt) == F(Wt, W0) an exact identity
    a, b = w0.values, wt.values
    product = (a.real * b.real - a.imag * b.imag) + 1j * (a.real * b.imag + a.imag * b.real)
    raw = complex(2.0 * math.pi * w0.hbar * (wx @ product @ wk))
    clamped = raw.real < -CLAMP_TOLERANCE or raw.real > 1.0 + CLAMP_TOLERANCE
    value = float(min(1.0, max(0.0, raw.real)))
    return FidelityResult(value=value, raw=raw, clamped=clamped)


@dataclass(frozen=True)
class QSLInputs:
    """Inputs of the speed-limit bound: fidelity in [0, 1], energy variance
    delta_e > 0 (never computed from soliton states; it is caller-supplied)."""

    fidelity: float
    delta_e: float
    hbar: float = 1.0

    def __post_init__(self):
        if not 0.0 <= self.fidelity <= 1.0:
            raise ValueError(f"fidelity must lie in [0, 1], got {self.fidelity}")
        if not self.delta_e > 0:
            raise ValueError(f"delta_e must be positive, got {self.delta_e}")
        if not self.hbar > 0:
            raise ValueError(f"hbar must be positive, got {self.hbar}")


def qsl_time(inputs: QSLInputs) -> float:
    """Mandelstam-Tamm speed-limit time ``(1 - F) hbar / (sqrt(2) delta_e)``."""
    return (1.0 - inputs.fidelity) / math.sqrt(2.0) * inputs.hbar / inputs.delta_e
