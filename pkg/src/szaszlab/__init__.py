"""Numerical workbench for Szasz-type Fourier inequalities.

Littlewood-Paley analysis on sampled periodic grids, homogeneous and
inhomogeneous Besov/Lizorkin-Triebel quasi-norms, an exact classifier for
the weak and strong forms of the power-weighted Fourier estimate, the
counterexample families that make the classification sharp, and realization
diagnostics.
"""

from .errors import BandError, ExperimentAbort, ModelFidelityWarning, ParameterError
from .grid import (
    Field,
    GridSpec,
    Spectrum,
    boundary_decay_ratio,
    dyadic_dilate,
    forward_ft,
    grid_translate,
    inverse_ft,
    radial_xi,
)
from .littlewood_paley import (
    BandLimits,
    KAPPA,
    SAFETY,
    feasible_band,
    gamma_profile,
    lowpass_profile,
    lp_mask,
    lp_project,
)
from .realization import (
    RealizationReport,
    low_frequency_mass,
    realization_feasible,
    realization_report,
    sigma0_partial,
)
from .spaces import SpaceParams, besov_norm, lr_quasinorm, space_norm, triebel_norm
from .szasz import (
    ClassificationResult,
    SzaszQuery,
    classify,
    conjugate_exponent,
    szasz_exponent,
    szasz_ratio,
    weighted_lhs,
)
from .witnesses import (
    GRID_PRESETS,
    ExperimentRecord,
    WitnessSpec,
    annulus_psi,
    bump_lowpass_phi,
    dilated_witness,
    divergence_experiment,
    lowfreq_blowup_witness,
    modulated_witness,
    random_bandlimited,
)

__version__ = "0.1.0"

__all__ = [
    "BandError",
    "BandLimits",
    "ClassificationResult",
    "ExperimentAbort",
    "ExperimentRecord",
    "Field",
    "GRID_PRESETS",
    "GridSpec",
    "KAPPA",
    "ModelFidelityWarning",
    "ParameterError",
    "RealizationReport",
    "SAFETY",
    "SpaceParams",
    "Spectrum",
    "SzaszQuery",
    "WitnessSpec",
    "annulus_psi",
    "besov_norm",
    "boundary_decay_ratio",
    "bump_lowpass_phi",
    "classify",
    "conjugate_exponent",
    "dilated_witness",
    "divergence_experiment",
    "dyadic_dilate",
    "feasible_band",
    "forward_ft",
    "gamma_profile",
    "grid_translate",
    "inverse_ft",
    "low_frequency_mass",
    "lowfreq_blowup_witness",
    "lowpass_profile",
    "lp_mask",
    "lp_project",
    "lr_quasinorm",
    "modulated_witness",
    "radial_xi",
    "random_bandlimited",
    "realization_feasible",
    "realization_report",
    "sigma0_partial",
    "space_norm",
    "szasz_exponent",
    "szasz_ratio",
    "triebel_norm",
    "weighted_lhs",
]
