"""wirediff: wire-barrier diffraction distributions.

Angular probability densities for particle beams scattering from a
cylindrical-barrier wire model, in the lowest-order quantum treatment and
the classical Fraunhofer comparator, for single-beam and interfering
two-beam configurations, plus the derived radius-overestimation analysis.
"""

__version__ = "0.1.0"

from .analysis import (
    CurveComparison,
    RangeError,
    ZeroReport,
    compare_curves,
    first_dark_angle,
    first_dark_points,
    match_areas,
    overestimation_factor,
)
from .classical import ClassicalConfig, fraunhofer_single, fraunhofer_two_beam, pattern_classical
from .electron import (
    FLIP,
    NO_FLIP,
    Spin,
    SpinChannel,
    dsigma_dtheta_full,
    dsigma_dtheta_full_spin_summed,
    dsigma_dtheta_low_energy,
    pattern_single,
    spinor_element,
)
from .numerics import (
    AccuracyError,
    BracketError,
    DomainError,
    bessel_j1,
    disk_ft_oracle,
    find_zero,
    hyp0f1_reg2,
    hyp0f1_reg2_series,
    sinc,
)
from .patterns import Normalization, Pattern, default_grid, validate_grid
from .potential import (
    ELECTRON_MASS_EV,
    HBARC_EV_M,
    BeamParams,
    WirePotential,
    form_factor,
    momentum_transfer_single,
)
from .twobeam import (
    ScanResult,
    TwoBeamConfig,
    momentum_transfer_pair,
    phi_theta_scan,
    superpose_amplitudes,
)
from .twobeam import dsigma_dtheta_full as dsigma_dtheta_two_beam_full
from .twobeam import dsigma_dtheta_low_energy as dsigma_dtheta_two_beam_low_energy

__all__ = [
    "__version__",
    "AccuracyError",
    "BeamParams",
    "BracketError",
    "ClassicalConfig",
    "CurveComparison",
    "DomainError",
    "ELECTRON_MASS_EV",
    "FLIP",
    "HBARC_EV_M",
    "NO_FLIP",
    "Normalization",
    "Pattern",
    "RangeError",
    "ScanResult",
    "Spin",
    "SpinChannel",
    "TwoBeamConfig",
    "WirePotential",
    "ZeroReport",
    "bessel_j1",
    "compare_curves",
    "default_grid",
    "disk_ft_oracle",
    "dsigma_dtheta_full",
    "dsigma_dtheta_full_spin_summed",
    "dsigma_dtheta_low_energy",
    "dsigma_dtheta_two_beam_full",
    "dsigma_dtheta_two_beam_low_energy",
    "find_zero",
    "first_dark_angle",
    "first_dark_points",
    "form_factor",
    "fraunhofer_single",
    "fraunhofer_two_beam",
    "hyp0f1_reg2",
    "hyp0f1_reg2_series",
    "match_areas",
    "momentum_transfer_pair",
    "momentum_transfer_single",
    "overestimation_factor",
    "pattern_classical",
    "pattern_single",
    "phi_theta_scan",
    "sinc",
    "spinor_element",
    "superpose_amplitudes",
    "validate_grid",
]
