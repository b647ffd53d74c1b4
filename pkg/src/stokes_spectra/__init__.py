"""Spectral stability of small-amplitude Stokes waves in unidirectional models.

The package builds Stokes waves of ``u_t + L u + (u^2)_x = 0`` for a family
of dispersion relations, predicts their unstable spectra in closed form
(triad and quartet isolas, the modulational figure-eight), and validates the
predictions with two independent numerical methods (a dense Fourier-Hill
eigensolver and quasi-Newton continuation of individual eigenpairs).
"""

from .dispersion import (
    DispersionModel,
    Family,
    Smoothness,
    akers_milewski,
    capillary_whitham,
    group_velocity,
    kawahara,
    omega,
    parse_model,
    phase_velocity,
    second_derivative,
    whitham,
)
from .stokes import StokesWave, stokes_expand, stokes_numeric, traveling_residual
from .flatspec import (
    Collision,
    benjamin_feir_collision,
    benjamin_feir_modes,
    find_collisions,
    flat_eigenvalue,
)
from .highfreq import (
    IsolaKind,
    IsolaModel,
    QuartetCoeffs,
    higher_order_corrections,
    isola_for,
    quartet_coeffs,
    quartet_isola,
    triad_isola,
)
from .benjamin_feir import (
    LemniscateModel,
    am_lemniscate,
    bf_constants,
    compare_growth,
    lemniscate,
    lemniscate_curve,
)
from .hill import SpectrumSlice, assemble, spectrum_slice, sweep, unstable_points
from .newton_eig import EigenPair, continue_in_epsilon, isola_points, refine
from .experiments import ExperimentConfig, REGISTRY, fit_power_law, run

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
