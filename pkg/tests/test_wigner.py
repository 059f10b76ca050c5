import math

import numpy as np
import pytest

from solwig.numerics import GridSpec
from solwig.oracles import gaussian_wigner_exact, ho_wigner_exact, momentum_spectrum
from solwig.states import GaussianPacket, HarmonicOscillator, Kink, PhysicalParams, SineGordon, eval_kink_wavefunction
from solwig.wigner import (
    EvaluationOverflowError,
    WignerField,
    kink_integrand_f,
    kink_wigner_field,
    kink_wigner_numeric,
    sg_wigner_closed,
    sg_wigner_exponent,
    sg_wigner_field,
    wigner_transform,
)

UNIT = PhysicalParams()
KINK_FIG = PhysicalParams(beta=1.0)
FIG3_GRID = GridSpec(-6.0, 6.0, 121, -2.0, 2.0, 81)

# 2*pi*exp(A / 2 pi) for m = k0 = hbar = 1 and zero occupations, by direct
# arithmetic of the printed constants
SG_W_MODULUS_AT_MIN = 5.227461172845187


@pytest.fixture(scope="module")
def kink_field():
    return kink_wigner_field(KINK_FIG, FIG3_GRID)


class TestWignerTransform:
    def test_gaussian_matches_analytic_wigner(self):
        grid = GridSpec(-4.0, 4.0, 81, -4.0, 4.0, 81)
        field = wigner_transform(GaussianPacket(), grid)
        exact = gaussian_wigner_exact(grid.x_values()[:, None], grid.k_values()[None, :])
        assert np.max(np.abs(field.values - exact)) <= 1e-8
        assert field.source == "wigner_transform[gaussian]"

    def test_gaussian_origin_value(self):
        field = wigner_transform(GaussianPacket(), GridSpec(-1.0, 1.0, 3, -1.0, 1.0, 3))
        assert complex(field.values[1, 1]) == pytest.approx(1.0 / math.pi, abs=1e-8)

    def test_ho1_negative_at_origin(self):
        field = wigner_transform(HarmonicOscillator(1), GridSpec(-1.0, 1.0, 3, -1.0, 1.0, 3))
        assert complex(field.values[1, 1]) == pytest.approx(-1.0 / math.pi, abs=1e-6)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_oscillator_matches_laguerre_oracle(self, n):
        grid = GridSpec(-4.0, 4.0, 41, -4.0, 4.0, 41)
        field = wigner_transform(HarmonicOscillator(n), grid)
        exact = ho_wigner_exact(n, grid.x_values()[:, None], grid.k_values()[None, :])
        assert np.max(np.abs(field.values - exact)) <= 1e-8

    def test_zero_wavefunction_gives_zero_field(self):
        field = wigner_transform(lambda x: np.zeros_like(np.asarray(x, dtype=float)), GridSpec(-2, 2, 5, -2, 2, 5))
        assert np.all(field.values == 0)

    def test_realness_for_real_states(self):
        field = wigner_transform(HarmonicOscillator(2), GridSpec(-4, 4, 41, -4, 4, 41))
        assert np.max(np.abs(field.values.imag)) <= 1e-10 * np.max(np.abs(field.values))

    def test_marginal_identity(self):
        grid = GridSpec(-4.0, 4.0, 41, -12.0, 12.0, 1001)
        for state in (GaussianPacket(), HarmonicOscillator(3)):
            field = wigner_transform(state, grid)
            wk = np.ones(grid.nk)
            wk[1:-1:2], wk[2:-1:2] = 4.0, 2.0
            marginal = field.values @ (wk * grid.k_step / 3.0)
            target = np.abs(state(grid.x_values())) ** 2
            assert np.max(np.abs(marginal - target)) <= 1e-6

    def test_momentum_marginal_matches_fourier_spectrum(self):
        grid = GridSpec(-8.0, 8.0, 161, -8.0, 8.0, 161)
        field = wigner_transform(GaussianPacket(), grid)
        wx = np.ones(grid.nx)
        wx[1:-1:2], wx[2:-1:2] = 4.0, 2.0
        marginal = (wx * grid.x_step / 3.0) @ field.values
        spectrum = momentum_spectrum(GaussianPacket(), grid.k_values(), -8.0, 8.0, 2001)
        assert np.max(np.abs(marginal - spectrum)) <= 1e-5

    def test_boost_covariance(self):
        boost = 0.7
        grid = GridSpec(-6.0, 6.0, 61, -5.0, 5.0, 61)
        boosted = wigner_transform(GaussianPacket(boost=boost), grid)
        shifted = GridSpec(-6.0, 6.0, 61, -5.0 - boost, 5.0 - boost, 61)
        still = wigner_transform(GaussianPacket(), shifted)
        assert np.max(np.abs(boosted.values - still.values)) <= 1e-8

    def test_overflow_names_offending_point(self):
        with pytest.raises(EvaluationOverflowError) as excinfo:
            wigner_transform(SineGordon(UNIT), GridSpec(-4, 4, 5, -1, 1, 5, y_cutoff=300.0, ny=5))
        assert excinfo.value.y == -300.0
        assert "x=" in str(excinfo.value) and "y=" in str(excinfo.value)

    def test_soliton_fields_tagged_window_truncated(self):
        field = wigner_transform(SineGordon(UNIT), GridSpec(-2, 2, 5, -1, 1, 5, y_cutoff=5.0, ny=201))
        assert field.source.endswith("window-truncated")
        reference = wigner_transform(GaussianPacket(), GridSpec(-2, 2, 5, -1, 1, 5))
        assert "window-truncated" not in reference.source


class TestWignerField:
    def test_shape_mismatch_rejected(self):
        grid = GridSpec(-1, 1, 5, -1, 1, 5)
        with pytest.raises(ValueError, match="shape"):
            WignerField(grid=grid, values=np.zeros((4, 5), dtype=complex), source="test")

    def test_nonfinite_values_rejected(self):
        grid = GridSpec(-1, 1, 3, -1, 1, 3)
        bad = np.zeros((3, 3), dtype=complex)
        bad[0, 0] = np.nan
        with pytest.raises(ValueError, match="non-finite"):
            WignerField(grid=grid, values=bad, source="test")


class TestSGClosedForm:
    def test_modulus_at_exponent_minimum(self):
        value = sg_wigner_closed(-math.pi / 2.0, 0.0, UNIT)
        assert abs(value) == pytest.approx(SG_W_MODULUS_AT_MIN, abs=1e-3)
        assert abs(value) == pytest.approx(SG_W_MODULUS_AT_MIN, rel=1e-13)

    def test_value_is_positive_imaginary(self):
        value = complex(sg_wigner_closed(0.0, 0.0, UNIT))
        assert value.real == 0.0 and value.imag > 0.0

    @pytest.mark.parametrize("x", [-3.0, -math.pi / 2.0, 0.4])
    @pytest.mark.parametrize("k", [0.3, 1.1])
    def test_even_in_momentum(self, x, k):
        assert abs(sg_wigner_closed(x, k, UNIT)) == pytest.approx(abs(sg_wigner_closed(x, -k, UNIT)), rel=1e-13)

    @pytest.mark.parametrize("d", [0.2, 1.0, 2.3])
    def test_even_about_exponent_minimum(self, d):
        center = -math.pi / 2.0
        left = abs(sg_wigner_closed(center - d, 0.5, UNIT))
        right = abs(sg_wigner_closed(center + d, 0.5, UNIT))
        assert left == pytest.approx(right, rel=1e-12)

    def test_exponent_object_matches_pointwise_values(self):
        q = sg_wigner_exponent(0.7, UNIT)
        k = np.array([-1.0, 0.0, 0.5])
        assert np.allclose(q.evaluate(k), sg_wigner_closed(0.7, k, UNIT), rtol=1e-13)

    def test_field_builder_carries_source_tag(self):
        field = sg_wigner_field(UNIT, GridSpec(-4, 4, 21, -1, 1, 21))
        assert field.source == "sg_closed_form"
        assert field.values.shape == (21, 21)

    def test_field_builder_overflow(self):
        with pytest.raises(EvaluationOverflowError):
            sg_wigner_field(UNIT, GridSpec(-4, 4, 5, -40, 40, 5))


class TestKinkWigner:
    def test_integrand_reduces_to_wavefunction_at_zero_offset(self):
        x = np.linspace(-5.0, 5.0, 21)
        assert np.array_equal(kink_integrand_f(x, 0.0, KINK_FIG), eval_kink_wavefunction(x, KINK_FIG))

    def test_integrand_is_shifted_wavefunction(self):
        assert kink_integrand_f(0.3, -0.7, KINK_FIG) == eval_kink_wavefunction(0.3 - 0.7, KINK_FIG)

    def test_integrand_product_even_in_offset(self):
        y = np.linspace(-10.0, 10.0, 201)
        forward = kink_integrand_f(0.0, y, KINK_FIG) * kink_integrand_f(0.0, -y, KINK_FIG)
        assert np.allclose(forward, forward[::-1], rtol=1e-12)

    def test_scalar_evaluation_matches_transform(self, kink_field):
        value = kink_wigner_numeric(0.0, 0.0, KINK_FIG, y_cutoff=10.0, ny=2001)
        x0 = int(np.argmin(np.abs(FIG3_GRID.x_values())))
        k0 = int(np.argmin(np.abs(FIG3_GRID.k_values())))
        assert value == pytest.approx(complex(kink_field.values[x0, k0]), rel=1e-12)

    def test_field_real_within_tolerance(self, kink_field):
        w = kink_field.values
        assert np.max(np.abs(w.imag)) <= 1e-10 * np.max(np.abs(w.real))

    def test_field_even_in_momentum(self, kink_field):
        w = kink_field.values
        assert np.max(np.abs(w - w[:, ::-1])) <= 1e-10 * np.max(np.abs(w))

    def test_momentum_peak_at_zero(self, kink_field):
        x0 = int(np.argmin(np.abs(FIG3_GRID.x_values())))
        k = FIG3_GRID.k_values()
        assert k[np.argmax(kink_field.values.real[x0, :])] == 0.0

    def test_doubling_ny_is_converged(self, kink_field):
        finer = GridSpec(-6.0, 6.0, 121, -2.0, 2.0, 81, y_cutoff=10.0, ny=4001)
        fine = kink_wigner_field(KINK_FIG, finer)
        assert np.max(np.abs(fine.values - kink_field.values)) <= 1e-8

    def test_window_truncated_tag(self, kink_field):
        assert kink_field.source == "wigner_transform[kink];window-truncated"

    def test_odd_ny_required(self):
        with pytest.raises(ValueError, match="odd"):
            kink_wigner_numeric(0.0, 0.0, KINK_FIG, y_cutoff=10.0, ny=2000)
