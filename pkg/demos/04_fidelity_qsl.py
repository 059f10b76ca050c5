# Phase-space fidelity and the Mandelstam-Tamm speed-limit time.
#
# Fidelity between pure states is the overlap 2*pi*hbar * IntInt W0 Wt; fed
# into tau = (1 - F) hbar / (sqrt(2) dE) it bounds how fast one state can
# evolve into the other.  dE is always caller-supplied here: soliton states
# have no finite energy variance to compute it from.

import numpy as np

from solwig import GaussianPacket, GridSpec, HarmonicOscillator, QSLInputs, fidelity, qsl_time, wigner_transform

grid = GridSpec(-8, 8, 161, -8, 8, 161)

gauss = wigner_transform(GaussianPacket(), grid)
ho0 = wigner_transform(HarmonicOscillator(0), grid)
ho1 = wigner_transform(HarmonicOscillator(1), grid)

print("F(gauss, gauss) =", fidelity(gauss, gauss).value)
print("F(gauss, ho0)  =", fidelity(gauss, ho0).value, "(same state, different construction)")
print("F(ho0, ho1)    =", fidelity(ho0, ho1).value, "(orthogonal)")

# A displaced packet interpolates smoothly between the two extremes.
print("\ndisplacement sweep:")
for shift in (0.0, 0.5, 1.0, 2.0, 4.0):
    shifted = wigner_transform(GaussianPacket(center=shift), grid)
    result = fidelity(gauss, shifted)
    tau = qsl_time(QSLInputs(result.value, delta_e=1.0, hbar=1.0))
    print(f"  shift {shift:3.1f}: F = {result.value:.6f}  tau_qsl = {tau:.6f}")

# tau falls monotonically in both fidelity and energy spread.
taus = [qsl_time(QSLInputs(f, 1.0, 1.0)) for f in np.linspace(0.0, 1.0, 5)]
print("\ntau over F in [0, 1]:", np.round(taus, 6))
