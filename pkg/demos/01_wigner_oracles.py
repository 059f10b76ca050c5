# Generic phase-space transform against closed-form oracles.
#
# The transform is pure quadrature: for each (x, k) node it integrates
# conj(psi(x+y)) psi(x-y) exp(2iky/hbar) over the finite y window with
# composite Simpson.  For states whose Wigner function is known in closed
# form, that gives an end-to-end accuracy witness.

import numpy as np

from solwig import GaussianPacket, GridSpec, HarmonicOscillator, charge_density, fidelity, wigner_transform
from solwig.oracles import gaussian_wigner_exact, ho_wigner_exact

grid = GridSpec(x_min=-4, x_max=4, nx=81, k_min=-4, k_max=4, nk=81)
x = grid.x_values()[:, None]
k = grid.k_values()[None, :]

# The unit Gaussian packet has W(x,k) = exp(-x^2 - k^2)/pi.
field = wigner_transform(GaussianPacket(), grid)
print("Gaussian vs closed form, max |error|:", np.max(np.abs(field.values - gaussian_wigner_exact(x, k))))

# Excited oscillator states go negative near the origin: W_1(0,0) = -1/pi.
for n in range(4):
    field_n = wigner_transform(HarmonicOscillator(n), grid)
    err = np.max(np.abs(field_n.values - ho_wigner_exact(n, x, k)))
    origin = field_n.values[40, 40].real
    print(f"oscillator n={n}: W(0,0) = {origin:+.7f}, max oracle error = {err:.2e}")

# Marginals and purity close the loop: integrating over k recovers |psi(x)|^2,
# the double integral is 1 and 2*pi*hbar * Int W^2 is 1 for pure states.
wide = GridSpec(-8, 8, 161, -8, 8, 161)
packet = GaussianPacket(center=0.5, width=1.3, boost=0.7)
field = wigner_transform(packet, wide)
marginal = charge_density(field)
print("max |marginal - |psi|^2|:", np.max(np.abs(marginal.values - np.abs(packet(wide.x_values())) ** 2)))
print("total probability:", marginal.integral().real)
print("purity 2*pi*hbar Int W^2:", fidelity(field, field).raw.real)
