# Sine-Gordon soliton state: closed-form wavefunction, Wigner field and charge.
#
# The wavefunction is exp(C + (pi/2 + m x)^2 / (8 pi k0)) -- a growing
# exponential, so no normalization exists and the exact transform integral
# diverges.  Its Wigner function exists only as an analytic continuation: the
# momentum dependence exp(B k^2) with B > 0 comes from the formal Gaussian
# rule, and carries one unit imaginary from the principal square-root branch.

import math

import numpy as np

from solwig import (
    PhysicalParams,
    QuadraticExponent,
    formal_gaussian_integral,
    sg_charge_closed,
    sg_constants,
    sg_wigner_closed,
    sg_wigner_exponent,
)
from solwig.states import eval_sg_wavefunction

params = PhysicalParams()  # k0 = hbar = m = 1, zero occupations
der = sg_constants(params)
print(f"A = {der.A:.10f}, B = {der.B:.10f}, C = {der.C:.10f}")

# The exponent is even about x = -pi/(2m), where the wavefunction is smallest.
x_min = -math.pi / 2.0
print("psi at its minimum:", eval_sg_wavefunction(x_min, params))
print("psi at the origin:", eval_sg_wavefunction(0.0, params))

# The closed Wigner form is imaginary-valued; magnitude is the meaningful part.
w = sg_wigner_closed(x_min, 0.0, params)
print("W at (x_min, 0):", w, "-> modulus", abs(w))

# Rederivation check: integrating the field over momentum with the formal rule
# and dividing by pi*hbar must reproduce the closed charge expression.
for x in (-3.0, x_min, 1.0):
    q: QuadraticExponent = sg_wigner_exponent(x, params)
    via_formal = formal_gaussian_integral(q) / (math.pi * params.hbar)
    closed = complex(sg_charge_closed(x, params))
    print(f"x = {x:+.3f}: |Q| via formal rule {abs(via_formal):.12f}  closed {abs(closed):.12f}")

# |Q(x)| / psi(x)^2 is exactly constant: the same quadratic sits in both
# exponents, so the "approximately |psi|^2" statement is a constant factor.
xs = np.linspace(-5.0, 5.0, 11)
ratio = np.abs(sg_charge_closed(xs, params)) / eval_sg_wavefunction(xs, params) ** 2
print("charge / psi^2 ratio:", ratio.mean(), "+-", ratio.std())
