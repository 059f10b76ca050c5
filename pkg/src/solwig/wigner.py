"""Phase-space transforms.

The generic transform evaluates, for every grid node,

    W(x, k) = (1 / pi hbar) * Int_{-y_cutoff}^{y_cutoff} dy
              conj(psi(x + y)) * psi(x - y) * exp(2 i k y / hbar)

with composite Simpson in y.  Soliton states are not normalizable, so their
fields are meaningful only on the finite window and are tagged
"window-truncated".  The sine-Gordon state additionally has a closed Wigner
form that exists by analytic continuation; it is served from
:func:`sg_wigner_closed` rather than from the (divergent) exact transform.

Values are stored as complex everywhere, even when provably real, so realness
is a testable property instead of an assumption.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .numerics import GridSpec, QuadraticExponent, simpson_weights
from .states import Kink, PhysicalParams, WaveFunction, eval_kink_wavefunction, sg_constants

__all__ = [
    "EvaluationOverflowError",
    "WignerField",
    "kink_integrand_f",
    "kink_wigner_numeric",
    "kink_wigner_field",
    "sg_wigner_closed",
    "sg_wigner_exponent",
    "sg_wigner_field",
    "wigner_transform",
]


class EvaluationOverflowError(ArithmeticError):
    """A phase-space integrand sample overflowed; carries the offending point."""

    def __init__(self, x: float, y: float):
        self.x = float(x)
        self.y = float(y)
        super().__init__(
            f"non-finite Wigner integrand at x={self.x:.6g}, y={self.y:.6g}; "
            "shrink the integration window or the grid extents"
        )


@dataclass(frozen=True)
class WignerField:
    """Complex Wigner values on a rectangular (x, k) grid."""

    grid: GridSpec
    values: np.ndarray
    source: str
    hbar: float = 1.0

    def __post_init__(self):
        expected = (self.grid.nx, self.grid.nk)
        if self.values.shape != expected:
            raise ValueError(f"field shape {self.values.shape} does not match grid {expected}")
        if not np.all(np.isfinite(self.values.real) & np.isfinite(self.values.imag)):
            raise ValueError("field contains non-finite values")
        if not self.hbar > 0:
            raise ValueError(f"hbar must be positive, got {self.hbar}")


def _windowed_transform(psi, x: np.ndarray, k: np.ndarray, y_cutoff: float, ny: int, hbar: float) -> np.ndarray:
    """Simpson-in-y transform on the window [-y_cutoff, y_cutoff]; returns (nx, nk)."""
    if not (ny >= 3 and ny % 2 == 1):
        raise ValueError(f"ny must be odd and at least 3, got {ny}")
    if not y_cutoff > 0:
        raise ValueError(f"y_cutoff must be positive, got {y_cutoff}")
    y = np.linspace(-y_cutoff, y_cutoff, ny)
    with np.errstate(over="ignore", invalid="ignore"):
        integrand = np.conjugate(psi(x[:, None] + y[None, :])) * psi(x[:, None] - y[None, :])
    finite = np.isfinite(integrand.real) & np.isfinite(integrand.imag)
    if not finite.all():
        i, j = np.argwhere(~finite)[0]
        raise EvaluationOverflowError(x[i], y[j])
    step = 2.0 * y_cutoff / (ny - 1)
    weights = simpson_weights(ny) * (step / 3.0)
    phase = np.exp((2j / hbar) * np.outer(y, k))
    return (integrand * weights) @ phase / (math.pi * hbar)


def wigner_transform(psi: WaveFunction, grid: GridSpec, hbar: float = 1.0) -> WignerField:
    """Numerical Wigner transform of ``psi`` on ``grid``.

    Non-normalizable states only make sense on the finite y-window, so their
    output is tagged window-truncated.  A non-finite integrand sample raises
    :class:`EvaluationOverflowError` naming the offending (x, y).
    """
    values = _windowed_transform(psi, grid.x_values(), grid.k_values(), grid.y_cutoff, grid.ny, hbar)
    label = getattr(psi, "label", type(psi).__name__)
    source = f"wigner_transform[{label}]"
    if not getattr(psi, "normalizable", True):
        source += ";window-truncated"
    return WignerField(grid=grid, values=values, source=source, hbar=hbar)


def sg_wigner_exponent(x: float, params: PhysicalParams) -> QuadraticExponent:
    """Momentum dependence of the closed sine-Gordon Wigner form at fixed x.

    The amplitude carries the principal-branch unit imaginary: completing the
    y-integral formally produces ``sqrt(k0 / -m^2)``, which the principal
    branch resolves to ``+i sqrt(k0)/m`` (the source prints the opposite sign
    convention ``-i``; moduli agree).
    """
    der = sg_constants(params)
    c = (der.A + (params.m * float(x) + math.pi / 2.0) ** 2 / (2.0 * params.k0)) / (2.0 * math.pi)
    amplitude = 2j * math.pi * math.sqrt(params.k0) / params.m
    return QuadraticExponent(amplitude=amplitude, a=complex(der.B), b=0j, c=complex(c))


def sg_wigner_closed(x, k, params: PhysicalParams):
    """Closed sine-Gordon Wigner form, verbatim apart from the branch choice.

    ``2 i pi sqrt(k0)/m * exp{(A + [m x + pi/2]^2 / 2k0) / 2pi + B k^2}``: the
    value grows without bound in |k| and |x|, so callers clamp their domains.
    """
    der = sg_constants(params)
    x = np.asarray(x, dtype=float)
    k = np.asarray(k, dtype=float)
    exponent = (der.A + (params.m * x + math.pi / 2.0) ** 2 / (2.0 * params.k0)) / (2.0 * math.pi) + der.B * k * k
    with np.errstate(over="ignore", invalid="ignore"):
        return (2j * math.pi * math.sqrt(params.k0) / params.m) * np.exp(exponent)


def sg_wigner_field(params: PhysicalParams, grid: GridSpec) -> WignerField:
    """Closed-form sine-Gordon field on ``grid`` (the default route for this state)."""
    x = grid.x_values()[:, None]
    k = grid.k_values()[None, :]
    values = sg_wigner_closed(x, k, params)
    if not np.all(np.isfinite(values.real) & np.isfinite(values.imag)):
        i, j = np.argwhere(~(np.isfinite(values.real) & np.isfinite(values.imag)))[0]
        raise EvaluationOverflowError(grid.x_values()[i], grid.k_values()[j])
    return WignerField(grid=grid, values=values, source="sg_closed_form", hbar=params.hbar)


def kink_integrand_f(x, y, params: PhysicalParams):
    """Shifted kink profile f(x, y): identically the kink wavefunction at x + y.

    The Wigner integrand is then ``f(x, y) * f(x, -y)`` (the state is real, so
    no conjugate is needed).
    """
    return eval_kink_wavefunction(np.asarray(x, dtype=float) + np.asarray(y, dtype=float), params)


def kink_wigner_numeric(x, k, params: PhysicalParams, y_cutoff: float = 10.0, ny: int = 2001):
    """Windowed kink Wigner values at the requested coordinates.

    Scalars give a complex scalar; arrays give the (len(x), len(k)) table.
    """
    x_arr = np.atleast_1d(np.asarray(x, dtype=float))
    k_arr = np.atleast_1d(np.asarray(k, dtype=float))
    values = _windowed_transform(Kink(params), x_arr, k_arr, y_cutoff, ny, params.hbar)
    if np.isscalar(x) and np.isscalar(k):
        return complex(values[0, 0])
    return values


def kink_wigner_field(params: PhysicalParams, grid: GridSpec) -> WignerField:
    """Windowed numeric kink field on ``grid`` (uses the grid's y window)."""
    return wigner_transform(Kink(params), grid, hbar=params.hbar)
