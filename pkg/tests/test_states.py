import math

import numpy as np
import pytest

from solwig.numerics import integrate_uniform
from solwig.states import (
    GaussianPacket,
    HarmonicOscillator,
    Kink,
    PhysicalParams,
    SineGordon,
    eval_kink_wavefunction,
    eval_sg_wavefunction,
    kink_constants,
    sg_constants,
)

# Frozen by direct arithmetic of the printed closed forms (independent of the
# library code paths).
A_REF = -1.1558003667574466
B_REF = math.pi
C_REF = -0.13176440657141042
D_REF = -0.3295774715459477
PSI_SG_AT_MIN = 0.8765474795812584
PSI_SG_AT_ZERO = 0.9669682320403368
PSI_K_AT_ZERO = 8.242830537073434
PSI_K_LEFT_LIMIT = 4.719920093569437
PSI_K_RIGHT_LIMIT = 0.07971825289445492

UNIT = PhysicalParams()
KINK_FIG = PhysicalParams(beta=1.0)


class TestPhysicalParams:
    def test_beta_defaults_to_half_m(self):
        assert PhysicalParams(m=3.0).beta == 1.5

    def test_beta_override(self):
        assert PhysicalParams(m=1.0, beta=1.0).beta == 1.0

    @pytest.mark.parametrize("kwargs", [dict(m=0.0), dict(lam=-1.0), dict(hbar=0.0), dict(k0=-2.0), dict(beta=0.0)])
    def test_nonpositive_scales_rejected(self, kwargs):
        with pytest.raises(ValueError):
            PhysicalParams(**kwargs)

    @pytest.mark.parametrize("kwargs", [dict(n_k=-1), dict(n_bo=0.5), dict(n_minus_k2=-3)])
    def test_bad_quantum_numbers_rejected(self, kwargs):
        with pytest.raises(ValueError):
            PhysicalParams(**kwargs)


class TestSGConstants:
    def test_reference_values(self):
        der = sg_constants(UNIT)
        assert der.B == pytest.approx(B_REF, abs=1e-15)
        assert der.A == pytest.approx(A_REF, abs=1e-14)
        assert der.C == pytest.approx(C_REF, abs=1e-15)

    def test_b_positive_and_scales(self):
        der = sg_constants(PhysicalParams(m=2.0, k0=3.0, hbar=0.5))
        assert der.B == pytest.approx(math.pi * 3.0 / (4.0 * 0.25), abs=1e-14)
        assert der.B > 0

    def test_occupation_numbers_lower_the_constants(self):
        excited = sg_constants(PhysicalParams(n_k=2, n_minus_k=1))
        base = sg_constants(UNIT)
        assert excited.A == pytest.approx(base.A - 0.5 * 3, abs=1e-14)
        assert excited.C == pytest.approx(base.C - 3 / (4.0 * math.pi), abs=1e-14)


class TestSGWavefunction:
    def test_value_at_quadratic_minimum(self):
        assert eval_sg_wavefunction(-math.pi / 2.0, UNIT) == pytest.approx(PSI_SG_AT_MIN, abs=1e-13)

    def test_value_at_origin(self):
        assert eval_sg_wavefunction(0.0, UNIT) == pytest.approx(PSI_SG_AT_ZERO, abs=1e-13)

    @pytest.mark.parametrize("d", [0.1, 0.7, 2.5, 9.0])
    def test_even_about_minimum(self, d):
        center = -math.pi / 2.0
        left = eval_sg_wavefunction(center - d, UNIT)
        right = eval_sg_wavefunction(center + d, UNIT)
        assert left == pytest.approx(right, rel=1e-13)

    def test_positive_on_sane_domain(self):
        x = np.linspace(-50.0, 50.0, 501)
        psi = eval_sg_wavefunction(x, UNIT)
        assert np.all(psi > 0) and np.all(np.isfinite(psi))

    def test_minimum_located_by_sign_change(self):
        # derivative sign flips exactly once, bracketing x = -pi/(2m)
        params = PhysicalParams(m=0.7)
        x = np.linspace(-6.0, 4.0, 4001)
        psi = eval_sg_wavefunction(x, params)
        signs = np.sign(np.diff(psi))
        flips = np.flatnonzero(np.diff(signs) > 0)
        assert flips.size == 1
        bracket = (x[flips[0]], x[flips[0] + 2])
        assert bracket[0] <= -math.pi / (2.0 * 0.7) <= bracket[1]


class TestKinkConstants:
    def test_ground_state_value(self):
        assert kink_constants(UNIT).D == pytest.approx(D_REF, abs=1e-15)

    def test_bound_mode_excitation(self):
        assert kink_constants(PhysicalParams(n_bo=1)).D == pytest.approx(-0.75 - 1.0 / (4.0 * math.pi), abs=1e-15)

    def test_small_k0_limit(self):
        assert kink_constants(PhysicalParams(k0=1e-12)).D == pytest.approx(-0.25, abs=1e-12)

    def test_always_at_most_minus_quarter(self):
        for n_bo in range(3):
            for n_k2 in range(3):
                d = kink_constants(PhysicalParams(k0=0.3, n_bo=n_bo, n_k2=n_k2)).D
                assert d <= -0.25


class TestKinkWavefunction:
    def test_value_at_origin(self):
        assert eval_kink_wavefunction(0.0, KINK_FIG) == pytest.approx(PSI_K_AT_ZERO, abs=1e-3)
        assert eval_kink_wavefunction(0.0, KINK_FIG) == pytest.approx(PSI_K_AT_ZERO, rel=1e-13)

    def test_left_asymptote(self):
        assert eval_kink_wavefunction(-40.0, KINK_FIG) == pytest.approx(PSI_K_LEFT_LIMIT, rel=1e-12)

    def test_right_asymptote_strictly_smaller(self):
        right = eval_kink_wavefunction(40.0, KINK_FIG)
        assert right == pytest.approx(PSI_K_RIGHT_LIMIT, rel=1e-12)
        assert right < PSI_K_LEFT_LIMIT

    def test_positive_and_finite_for_large_arguments(self):
        x = np.linspace(-500.0, 500.0, 201)
        psi = eval_kink_wavefunction(x, KINK_FIG)
        assert np.all(psi > 0) and np.all(np.isfinite(psi))

    def test_log_term_contributes_nothing_at_unit_k0(self):
        # ln(k0) = 0 exactly, so deleting the logarithmic product changes no bit
        params = KINK_FIG
        x = np.linspace(-8.0, 8.0, 161)
        bx = params.beta * x
        e = np.exp(-np.abs(bx))
        sech = 2.0 * e / (1.0 + e * e)
        bracket = np.arctan(np.sinh(bx)) - sech * np.tanh(bx) - 2.0 * sech
        without_log = np.exp(
            kink_constants(params).D
            - (3.0 * math.sqrt(3.0) * params.beta**3 / (4.0 * params.lam)) * bracket
            - (params.beta**2 / (2.0 * math.pi * params.lam)) * (params.beta**2 / params.k0**2)
        )
        assert np.array_equal(eval_kink_wavefunction(x, params), without_log)

    def test_nonunit_k0_changes_values(self):
        psi_1 = eval_kink_wavefunction(2.0, KINK_FIG)
        psi_2 = eval_kink_wavefunction(2.0, PhysicalParams(beta=1.0, k0=2.0))
        assert psi_1 != psi_2


class TestReferenceStates:
    def test_ho_ground_at_origin(self):
        assert HarmonicOscillator(0)(0.0) == pytest.approx(math.pi**-0.25, abs=1e-15)

    def test_ho_first_excited_vanishes_at_origin(self):
        assert abs(HarmonicOscillator(1)(0.0)) == 0.0

    def test_unsupported_order_rejected(self):
        with pytest.raises(ValueError, match="unsupported"):
            HarmonicOscillator(11)
        with pytest.raises(ValueError):
            HarmonicOscillator(-1)

    def test_gaussian_requires_positive_width(self):
        with pytest.raises(ValueError):
            GaussianPacket(width=0.0)

    def test_gaussian_norm(self):
        x = np.linspace(-10.0, 10.0, 2001)
        norm = integrate_uniform(np.abs(GaussianPacket()(x)) ** 2, step=float(x[1] - x[0]))
        assert norm == pytest.approx(1.0, abs=1e-10)

    @pytest.mark.parametrize("center,width,boost", [(0.0, 1.0, 0.0), (1.5, 0.7, 2.0), (-2.0, 2.5, -0.3)])
    def test_gaussian_norm_any_parameters(self, center, width, boost):
        x = np.linspace(center - 12.0 * width, center + 12.0 * width, 4001)
        psi = GaussianPacket(center, width, boost)(x)
        norm = integrate_uniform(np.abs(psi) ** 2, step=float(x[1] - x[0]))
        assert norm == pytest.approx(1.0, abs=1e-8)

    def test_hermite_orthonormality(self):
        x = np.linspace(-12.0, 12.0, 2001)
        step = float(x[1] - x[0])
        states = [HarmonicOscillator(n)(x) for n in range(6)]
        for i, left in enumerate(states):
            for j, right in enumerate(states):
                overlap = integrate_uniform(np.conjugate(left) * right, step)
                assert overlap == pytest.approx(1.0 if i == j else 0.0, abs=1e-8)

    def test_state_wrappers_delegate(self):
        x = np.linspace(-3.0, 3.0, 7)
        assert np.array_equal(SineGordon(UNIT)(x), eval_sg_wavefunction(x, UNIT))
        assert np.array_equal(Kink(KINK_FIG)(x), eval_kink_wavefunction(x, KINK_FIG))
        assert not SineGordon(UNIT).normalizable and not Kink(KINK_FIG).normalizable
        assert GaussianPacket().normalizable and HarmonicOscillator(0).normalizable
