"""Deterministic quadrature and the analytically-continued Gaussian integral.

Every integral in this package reduces to composite Simpson sums on uniform
grids, which keeps results bit-reproducible for a fixed grid, plus one formal
rule for Gaussian integrals of the shape ``amplitude * exp(a k^2 + b k + c)``
evaluated on the principal square-root branch.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "DegenerateExponentError",
    "GridSpec",
    "QuadraticExponent",
    "formal_gaussian_integral",
    "integrate_uniform",
    "simpson_weights",
]


class DegenerateExponentError(ValueError):
    """Raised when the quadratic coefficient vanishes and no Gaussian form exists."""


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


@dataclass(frozen=True)
class GridSpec:
    """Rectangular (x, k) phase-space grid plus the y-integration window.

    ``y_cutoff`` is the half-width of the finite window used for the phase-space
    transform integral; ``ny`` must be odd so composite Simpson applies.
    """

    x_min: float
    x_max: float
    nx: int
    k_min: float
    k_max: float
    nk: int
    y_cutoff: float = 10.0
    ny: int = 2001

    def __post_init__(self):
        _require(self.x_max > self.x_min, f"x_max must exceed x_min, got [{self.x_min}, {self.x_max}]")
        _require(self.k_max > self.k_min, f"k_max must exceed k_min, got [{self.k_min}, {self.k_max}]")
        _require(self.y_cutoff > 0, f"y_cutoff must be positive, got {self.y_cutoff}")
        _require(self.nx >= 2, f"nx must be at least 2, got {self.nx}")
        _require(self.nk >= 2, f"nk must be at least 2, got {self.nk}")
        _require(self.ny >= 3 and self.ny % 2 == 1, f"ny must be odd and at least 3, got {self.ny}")

    def x_values(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.nx)

    def k_values(self) -> np.ndarray:
        return np.linspace(self.k_min, self.k_max, self.nk)

    def y_values(self) -> np.ndarray:
        return np.linspace(-self.y_cutoff, self.y_cutoff, self.ny)

    @property
    def x_step(self) -> float:
        return (self.x_max - self.x_min) / (self.nx - 1)

    @property
    def k_step(self) -> float:
        return (self.k_max - self.k_min) / (self.nk - 1)

    @property
    def y_step(self) -> float:
        return 2.0 * self.y_cutoff / (self.ny - 1)


def _finite_complex(value, name: str) -> complex:
    z = complex(value)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"{name} must be finite, got {z}")
    return z


@dataclass(frozen=True)
class QuadraticExponent:
    """The formal object ``amplitude * exp(a k^2 + b k + c)``."""

    amplitude: complex
    a: complex
    b: complex = 0j
    c: complex = 0j

    def __post_init__(self):
        for name in ("amplitude", "a", "b", "c"):
            object.__setattr__(self, name, _finite_complex(getattr(self, name), name))

    def evaluate(self, k):
        """Pointwise value of the integrand at momentum ``k``."""
        k = np.asarray(k, dtype=complex)
        return self.amplitude * np.exp(self.a * k * k + self.b * k + self.c)


def simpson_weights(n: int) -> np.ndarray:
    """Composite Simpson weight pattern 1,4,2,...,2,4,1 for an odd sample count."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"Simpson requires an odd sample count of at least 3, got {n}")
    w = np.ones(n)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return w


def integrate_uniform(samples, step: float) -> complex:
    """Composite-Simpson estimate of an integral from uniform samples.

    ``samples`` must hold an odd number (>= 3) of finite values spaced by
    ``step``; the rule is exact for cubics and fourth-order accurate otherwise.
    """
    values = np.asarray(samples, dtype=complex)
    if values.ndim != 1:
        raise ValueError(f"samples must be one-dimensional, got shape {values.shape}")
    if not step > 0:
        raise ValueError(f"step must be positive, got {step}")
    if not np.all(np.isfinite(values.real) & np.isfinite(values.imag)):
        bad = int(np.flatnonzero(~(np.isfinite(values.real) & np.isfinite(values.imag)))[0])
        raise ValueError(f"non-finite sample at index {bad}: {values[bad]}")
    w = simpson_weights(values.size)
    return complex(np.dot(w, values) * (step / 3.0))


def formal_gaussian_integral(q: QuadraticExponent) -> complex:
    """Gaussian integral of ``q`` over the real line by the completed-square rule.

    Returns ``amplitude * sqrt(pi / (-a)) * exp(c - b^2 / (4a))`` on the
    principal square-root branch.  For Re(a) < 0 this equals the convergent
    integral; otherwise it is the analytic continuation of that formula (the
    divergent case is then a formal value, not a limit of Riemann sums).
    """
    if q.a == 0:
        raise DegenerateExponentError("quadratic coefficient is zero; exponent has no Gaussian form")
    z = math.pi / (-q.a)
    if z.imag == 0.0:
        # map a signed-zero imaginary part onto the principal side of the cut
        z = complex(z.real, 0.0)
    return q.amplitude * cmath.sqrt(z) * cmath.exp(q.c - q.b * q.b / (4.0 * q.a))
