"""Two-beam interference-plus-diffraction distributions.

Two beams crossing at angle alpha produce amplitudes at the shifted
momentum transfers q_pm = 2 p |sin(theta/2 +/- alpha/4)|; the relative
phase Phi shifts the interference pattern (scanning Phi plays the role of
translating the wire across the fringes, though the quantitative mapping
from a physical displacement to Phi is deliberately not modeled here).

Phase-sign convention: the low-energy and full-energy electron densities
attach e^{+i Phi} to the plus-beam amplitude.  For real amplitudes the
density is insensitive to that sign; :func:`superpose_amplitudes` takes
complex amplitudes, defaults to e^{-i phi}, and exposes the sign as an
explicit argument.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .electron import NO_FLIP, SpinChannel, spinor_element
from .numerics import DomainError, hyp0f1_reg2
from .patterns import validate_grid
from .potential import BeamParams, WirePotential, form_factor

_TAU = 2.0 * math.pi


@dataclass(frozen=True)
class TwoBeamConfig:
    """Beam intersection angle alpha [rad] and interference phase phi [rad]."""

    alpha: float
    phi: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and self.alpha >= 0.0):
            raise ValueError(f"alpha >= 0 required, got {self.alpha!r}")
        if not math.isfinite(self.phi):
            raise ValueError(f"phi must be finite, got {self.phi!r}")


@dataclass(eq=False)
class ScanResult:
    """Density sampled on a (phi, theta) grid; density[i, j] = d(phis[i], thetas[j])."""

    phis: np.ndarray
    thetas: np.ndarray
    density: np.ndarray


def momentum_transfer_pair(p: float, theta: float, alpha: float) -> tuple[float, float]:
    """Momentum transfers (q_minus, q_plus) = 2 p |sin(theta/2 -/+ alpha/4)| [1/m]."""
    if not (math.isfinite(p) and p > 0.0):
        raise DomainError(f"momentum_transfer_pair: p > 0 required, got {p!r}")
    if not (math.isfinite(theta) and math.isfinite(alpha)):
        raise DomainError("momentum_transfer_pair: theta and alpha must be finite")
    q_minus = 2.0 * p * abs(math.sin(0.5 * theta - 0.25 * alpha))
    q_plus = 2.0 * p * abs(math.sin(0.5 * theta + 0.25 * alpha))
    return q_minus, q_plus


def _interference_density(a_minus: float, a_plus: float, phi: float) -> float:
    # |a_minus + e^{i phi} a_plus|^2 composed from squares, so the result is
    # non-negative in floating point even under exact cancellation.  The
    # phase is IEEE-remainder-reduced, making the 2*pi periodicity exact.
    phi_r = math.remainder(phi, _TAU)
    re = a_minus + a_plus * math.cos(phi_r)
    im = a_plus * math.sin(phi_r)
    return re * re + im * im


def dsigma_dtheta_low_energy(p_radius: float, cfg: TwoBeamConfig, theta: float) -> float:
    """Low-energy two-beam density F_-^2 + 2 F_- F_+ cos(Phi) + F_+^2, C = 1.

    F_pm = 0F1(2, -(pR sin(theta/2 +/- alpha/4))^2); computed as the squared
    magnitude of the superposed amplitudes, hence guaranteed >= 0.
    """
    if not (math.isfinite(p_radius) and p_radius > 0.0):
        raise DomainError(f"dsigma_dtheta_low_energy: p_radius > 0 required, got {p_radius!r}")
    if not math.isfinite(theta):
        raise DomainError(f"dsigma_dtheta_low_energy: theta must be finite, got {theta!r}")
    s_minus = p_radius * math.sin(0.5 * theta - 0.25 * cfg.alpha)
    s_plus = p_radius * math.sin(0.5 * theta + 0.25 * cfg.alpha)
    f_minus = hyp0f1_reg2(-s_minus * s_minus)
    f_plus = hyp0f1_reg2(-s_plus * s_plus)
    return _interference_density(f_minus, f_plus, cfg.phi)


def dsigma_dtheta_full(
    beam: BeamParams,
    wire: WirePotential,
    cfg: TwoBeamConfig,
    theta: float,
    channel: SpinChannel = NO_FLIP,
) -> float:
    """Full-energy two-beam density |A_- + e^{i Phi} A_+|^2, C = 1.

    A_pm couples the spinor element at the relative scattering angle
    theta +/- alpha/2 of the respective incoming beam with the form factor
    at q_pm.  Both beams carry the same spin labels (polarized source).
    Reduces to the low-energy form when pc << mc^2.
    """
    q_minus, q_plus = momentum_transfer_pair(beam.momentum, theta, cfg.alpha)
    a_minus = spinor_element(beam, theta - 0.5 * cfg.alpha, channel) * form_factor(wire, q_minus)
    a_plus = spinor_element(beam, theta + 0.5 * cfg.alpha, channel) * form_factor(wire, q_plus)
    return _interference_density(a_minus, a_plus, cfg.phi)


def superpose_amplitudes(a_minus: complex, a_plus: complex, phi: float,
                         phase_sign: int = -1) -> float:
    """|a_minus + a_plus * e^{i * phase_sign * phi}|^2 for complex amplitudes.

    Generic two-amplitude superposition: any pair of caller-supplied
    amplitudes (e.g. numerically evaluated photon amplitudes) can be
    combined.  The default phase sign is -1; pass +1 for the opposite
    convention.  For real amplitudes of equal magnitude the two signs give
    identical densities.
    """
    a_minus = complex(a_minus)
    a_plus = complex(a_plus)
    if not all(map(math.isfinite, (a_minus.real, a_minus.imag, a_plus.real, a_plus.imag, phi))):
        raise DomainError("superpose_amplitudes: amplitudes and phi must be finite")
    if phase_sign not in (-1, 1):
        raise ValueError(f"phase_sign must be +1 or -1, got {phase_sign!r}")
    phi_r = math.remainder(phi, _TAU)
    w = a_minus + a_plus * complex(math.cos(phi_r), phase_sign * math.sin(phi_r))
    return w.real * w.real + w.imag * w.imag


def phi_theta_scan(
    p_radius: float,
    alpha: float,
    phi_grid: np.ndarray,
    theta_grid: np.ndarray,
) -> ScanResult:
    """Low-energy two-beam density on the (phi, theta) tensor grid.

    Equivalent to scanning the wire across the beam intersection: the
    per-phi integrated intensity rises and falls as the wire crosses
    bright and dark fringes.
    """
    phis = validate_grid(phi_grid)
    thetas = validate_grid(theta_grid)
    density = np.empty((phis.size, thetas.size))
    for i, phi in enumerate(phis):
        cfg = TwoBeamConfig(alpha=alpha, phi=float(phi))
        for j, theta in enumerate(thetas):
            density[i, j] = dsigma_dtheta_low_energy(p_radius, cfg, float(theta))
    return ScanResult(phis=phis, thetas=thetas, density=density)
