"""Evaluable one-dimensional states.

Two families live here: the kink and sine-Gordon soliton wavefunctions exactly
as their closed forms are printed (no normalization constant is invented; a
growing ``exp(+quadratic)`` has none), and exact reference states (Gaussian
packet, harmonic-oscillator eigenfunctions) that serve as verification oracles
for the numerical phase-space machinery.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from typing import Union

import numpy as np

__all__ = [
    "GaussianPacket",
    "HarmonicOscillator",
    "Kink",
    "KinkDerived",
    "MAX_OSCILLATOR_ORDER",
    "PhysicalParams",
    "SGDerived",
    "SineGordon",
    "WaveFunction",
    "eval_kink_wavefunction",
    "eval_sg_wavefunction",
    "kink_constants",
    "sg_constants",
]

TWO_PI = 2.0 * math.pi

MAX_OSCILLATOR_ORDER = 10


def _check_positive(value: float, name: str) -> None:
    if not value > 0:
        raise ValueError(f"{name} must be positive, got {value}")


def _check_quantum_number(value, name: str) -> None:
    if not isinstance(value, numbers.Integral) or value < 0:
        raise ValueError(f"{name} must be a non-negative integer, got {value!r}")


@dataclass(frozen=True)
class PhysicalParams:
    """Soliton parameters and quantum numbers.

    ``lam`` is the field coupling constant, ``k0`` the mode-cutoff momentum and
    ``beta`` the kink width parameter, defaulting to ``m / 2``.  The figure
    bundles override ``beta`` to 1 even when ``m`` is 1; keeping the field
    independent preserves that choice instead of hiding it.

    ``n_k``/``n_minus_k`` are the sine-Gordon excitation numbers; ``n_bo`` is
    the kink bound-mode number and ``n_k2``/``n_minus_k2`` the kink continuum
    numbers.
    """

    m: float = 1.0
    lam: float = 1.0
    hbar: float = 1.0
    k0: float = 1.0
    beta: float | None = None
    n_k: int = 0
    n_minus_k: int = 0
    n_bo: int = 0
    n_k2: int = 0
    n_minus_k2: int = 0

    def __post_init__(self):
        _check_positive(self.m, "m")
        _check_positive(self.lam, "lam")
        _check_positive(self.hbar, "hbar")
        _check_positive(self.k0, "k0")
        if self.beta is None:
            object.__setattr__(self, "beta", self.m / 2.0)
        _check_positive(self.beta, "beta")
        for name in ("n_k", "n_minus_k", "n_bo", "n_k2", "n_minus_k2"):
            _check_quantum_number(getattr(self, name), name)


@dataclass(frozen=True)
class SGDerived:
    """Closed-form constants of the sine-Gordon state: A and B sit in the
    Wigner exponent, C in the wavefunction exponent."""

    A: float
    B: float
    C: float


@dataclass(frozen=True)
class KinkDerived:
    """Closed-form constant D of the kink wavefunction exponent."""

    D: float


def sg_constants(params: PhysicalParams) -> SGDerived:
    """Constants of the sine-Gordon closed forms, implemented verbatim.

    Note the asymmetry between the ``k0**4`` denominator in A and the ``k0**3``
    denominators elsewhere: that is how the source expressions are printed, and
    with ``k0 = 1`` (all figure bundles) the difference is invisible.
    """
    m, k0, hbar = params.m, params.k0, params.hbar
    occupancy = params.n_k + params.n_minus_k + 1
    a = m**2 / (6.0 * k0**4) - math.pi**2 * m**2 / (12.0 * k0**3) - (k0 / 2.0) * occupancy
    b = math.pi * k0 / (m**2 * hbar**2)
    c = (m**2 / (12.0 * k0**3) - math.pi**2 * m**2 / (24.0 * k0**3)) / TWO_PI - (k0 / (4.0 * math.pi)) * occupancy
    return SGDerived(A=a, B=b, C=c)


def kink_constants(params: PhysicalParams) -> KinkDerived:
    """Constant D of the kink wavefunction exponent."""
    occupancy = params.n_k2 + params.n_minus_k2 + 1
    d = -0.25 * (2 * params.n_bo + 1) - (params.k0 / (4.0 * math.pi)) * occupancy
    return KinkDerived(D=d)


def eval_sg_wavefunction(x, params: PhysicalParams):
    """Sine-Gordon wavefunction ``exp{C + (pi/2 + m x)^2 / (8 pi k0)}``.

    Positive and even about ``x = -pi/(2m)``; it grows super-exponentially, so
    for |x| beyond roughly 130 (natural units) the value overflows float64 to
    inf.  The transform layer reports the offending coordinate in that case.
    """
    c = sg_constants(params).C
    quad = (math.pi / 2.0 + params.m * np.asarray(x, dtype=float)) ** 2
    with np.errstate(over="ignore"):
        return np.exp(c + quad / (8.0 * math.pi * params.k0))


def _sech(z: np.ndarray) -> np.ndarray:
    # 2 e^{-|z|} / (1 + e^{-2|z|}) never overflows, unlike 1/cosh
    e = np.exp(-np.abs(z))
    return 2.0 * e / (1.0 + e * e)


def _arctan_sinh(z: np.ndarray) -> np.ndarray:
    # sinh overflows past ~710, but arctan has saturated to +-pi/2 long before
    return np.arctan(np.sinh(np.clip(z, -700.0, 700.0)))


def eval_kink_wavefunction(x, params: PhysicalParams):
    """Kink wavefunction, evaluated through overflow-safe sech/tanh forms.

    The exponent is ``D`` minus a bound-mode bracket scaled by
    ``3 sqrt(3) beta^3 / (4 lam)`` minus a continuum term scaled by
    ``beta^2 / (2 pi lam)``; for ``k0 = 1`` the logarithmic part of the
    continuum term vanishes identically.
    """
    d = kink_constants(params).D
    beta, lam, k0 = params.beta, params.lam, params.k0
    bx = beta * np.asarray(x, dtype=float)
    bracket = _arctan_sinh(bx) - _sech(bx) * np.tanh(bx) - 2.0 * _sech(bx)
    log_term = math.log(k0) * (1.0 + 2.0 * bx + bx * bx) + beta**2 / k0**2
    exponent = d - (3.0 * math.sqrt(3.0) * beta**3 / (4.0 * lam)) * bracket - (beta**2 / (TWO_PI * lam)) * log_term
    with np.errstate(over="ignore"):
        return np.exp(exponent)


@dataclass(frozen=True)
class SineGordon:
    """Sine-Gordon soliton state; real, positive, not normalizable."""

    params: PhysicalParams = PhysicalParams()

    label = "sine_gordon"
    normalizable = False

    def __call__(self, x):
        return eval_sg_wavefunction(x, self.params)


@dataclass(frozen=True)
class Kink:
    """Kink soliton state; real, positive, not normalizable (finite limits at
    both infinities make the phase-space integral window-truncated)."""

    params: PhysicalParams = PhysicalParams()

    label = "kink"
    normalizable = False

    def __call__(self, x):
        return eval_kink_wavefunction(x, self.params)


@dataclass(frozen=True)
class GaussianPacket:
    """L2-normalized Gaussian ``(pi w^2)^{-1/4} e^{-(x-c)^2/2w^2} e^{i p0 x / hbar}``."""

    center: float = 0.0
    width: float = 1.0
    boost: float = 0.0
    hbar: float = 1.0

    label = "gaussian"
    normalizable = True

    def __post_init__(self):
        _check_positive(self.width, "width")
        _check_positive(self.hbar, "hbar")

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        norm = (math.pi * self.width**2) ** -0.25
        envelope = np.exp(-((x - self.center) ** 2) / (2.0 * self.width**2))
        return norm * envelope * np.exp(1j * self.boost * x / self.hbar)


@dataclass(frozen=True)
class HarmonicOscillator:
    """Unit-frequency oscillator eigenfunction of order ``n`` (hbar = 1),
    built from the normalized Hermite recurrence."""

    n: int = 0

    label = "ho"
    normalizable = True

    def __post_init__(self):
        _check_quantum_number(self.n, "n")
        if self.n > MAX_OSCILLATOR_ORDER:
            raise ValueError(
                f"oscillator order {self.n} unsupported; the recurrence is validated up to n={MAX_OSCILLATOR_ORDER}"
            )

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        u = math.pi**-0.25 * np.exp(-0.5 * x * x)
        u_prev = np.zeros_like(u)
        for j in range(1, self.n + 1):
            u, u_prev = math.sqrt(2.0 / j) * x * u - math.sqrt((j - 1) / j) * u_prev, u
        return u.astype(complex)


WaveFunction = Union[SineGordon, Kink, GaussianPacket, HarmonicOscillator]
