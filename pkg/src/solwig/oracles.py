"""Closed-form references the numerical machinery is checked against.

These deliberately avoid the transform code paths: the Gaussian and oscillator
Wigner functions come from their textbook closed forms, and the momentum
spectrum from a direct Fourier quadrature of the wavefunction.
"""

from __future__ import annotations

import math

import numpy as np

from .numerics import simpson_weights

__all__ = [
    "gaussian_wigner_exact",
    "ho_wigner_exact",
    "momentum_spectrum",
]


def gaussian_wigner_exact(x, k, center: float = 0.0, width: float = 1.0, boost: float = 0.0, hbar: float = 1.0):
    """Wigner function of the normalized Gaussian packet:
    ``(1 / pi hbar) exp(-(x - c)^2 / w^2 - w^2 (k - p0)^2 / hbar^2)``."""
    x = np.asarray(x, dtype=float)
    k = np.asarray(k, dtype=float)
    return (
        np.exp(-((x - center) ** 2) / width**2 - width**2 * (k - boost) ** 2 / hbar**2)
        / (math.pi * hbar)
    )


def ho_wigner_exact(n: int, x, k):
    """Wigner function of the n-th unit-frequency oscillator eigenstate
    (hbar = 1): ``(-1)^n / pi * L_n(2 x^2 + 2 k^2) exp(-x^2 - k^2)``."""
    x = np.asarray(x, dtype=float)
    k = np.asarray(k, dtype=float)
    z = 2.0 * (x * x + k * k)
    lag_prev = np.ones_like(z)
    lag = 1.0 - z
    if n == 0:
        lag = lag_prev
    else:
        for j in range(1, n):
            lag, lag_prev = ((2 * j + 1 - z) * lag - j * lag_prev) / (j + 1), lag
    return (-1.0) ** n / math.pi * lag * np.exp(-z / 2.0)


def momentum_spectrum(psi, k, x_min: float, x_max: float, n: int, hbar: float = 1.0) -> np.ndarray:
    """|phi(k)|^2 with ``phi(k) = (2 pi hbar)^{-1/2} Int psi(x) e^{-i k x / hbar} dx``
    by Simpson on [x_min, x_max] with an odd sample count ``n``."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"Fourier quadrature needs an odd sample count of at least 3, got {n}")
    x = np.linspace(x_min, x_max, n)
    weights = simpson_weights(n) * ((x[1] - x[0]) / 3.0)
    k = np.atleast_1d(np.asarray(k, dtype=float))
    kernel = np.exp(-1j * np.outer(k, x) / hbar)
    phi = kernel @ (weights * psi(x)) / math.sqrt(2.0 * math.pi * hbar)
    return np.abs(phi) ** 2
