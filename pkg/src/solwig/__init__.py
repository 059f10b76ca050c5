"""Phase-space toolkit for kink and sine-Gordon soliton states.

Computes Wigner distributions (generic numerical transform plus the soliton
closed forms), charge and current densities, phase-space fidelity and the
Mandelstam-Tamm quantum-speed-limit time, with exact reference states and
analytic oracles for verification.
"""

from .numerics import (
    DegenerateExponentError,
    GridSpec,
    QuadraticExponent,
    formal_gaussian_integral,
    integrate_uniform,
    simpson_weights,
)
from .observables import (
    DensityProfile,
    FidelityResult,
    QSLInputs,
    charge_density,
    current_density,
    fidelity,
    qsl_time,
    sg_charge_closed,
)
from .states import (
    GaussianPacket,
    HarmonicOscillator,
    Kink,
    KinkDerived,
    PhysicalParams,
    SGDerived,
    SineGordon,
    WaveFunction,
    eval_kink_wavefunction,
    eval_sg_wavefunction,
    kink_constants,
    sg_constants,
)
from .wigner import (
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

__version__ = "0.1.0"

__all__ = [
    "DegenerateExponentError",
    "DensityProfile",
    "EvaluationOverflowError",
    "FidelityResult",
    "GaussianPacket",
    "GridSpec",
    "HarmonicOscillator",
    "Kink",
    "KinkDerived",
    "PhysicalParams",
    "QSLInputs",
    "QuadraticExponent",
    "SGDerived",
    "SineGordon",
    "WaveFunction",
    "WignerField",
    "charge_density",
    "current_density",
    "eval_kink_wavefunction",
    "eval_sg_wavefunction",
    "fidelity",
    "formal_gaussian_integral",
    "integrate_uniform",
    "kink_constants",
    "kink_integrand_f",
    "kink_wigner_field",
    "kink_wigner_numeric",
    "qsl_time",
    "sg_charge_closed",
    "sg_constants",
    "sg_wigner_closed",
    "sg_wigner_exponent",
    "sg_wigner_field",
    "simpson_weights",
    "wigner_transform",
]
