"""Electron scattering amplitudes and angular probability distributions.

The full-energy spinor matrix elements are kept exactly as modeled,
including the sin(theta) numerator of the spin-flip channel; textbook
spin-flip elements usually carry sin(theta/2) instead, so the flip channel
here should be read as part of this model's definition rather than as a
general result.  At optical momenta (pc ~ eV against mc^2 ~ 0.5 MeV) the
flip channel is negligible either way and the no-flip channel reduces to a
constant, leaving the squared disk form factor as the whole distribution.

The overall constant multiplying every distribution is fixed by the chosen
normalization mode and never computed from the barrier height or the
normalization volume: only normalized shapes are compared.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .numerics import DomainError, hyp0f1_reg2
from .patterns import Normalization, Pattern, default_grid, normalize_density, validate_grid
from .potential import BeamParams, WirePotential, form_factor, momentum_transfer_single


class Spin(Enum):
    UP = "up"
    DOWN = "down"


@dataclass(frozen=True)
class SpinChannel:
    """Initial/final spin pair; classified as flip or no-flip."""

    initial: Spin
    final: Spin

    @property
    def is_flip(self) -> bool:
        return self.initial is not self.final


NO_FLIP = SpinChannel(Spin.UP, Spin.UP)
FLIP = SpinChannel(Spin.UP, Spin.DOWN)


def spinor_element(beam: BeamParams, theta: float, channel: SpinChannel = NO_FLIP) -> float:
    """Electron-current factor between spin states, in eV.

    Flip channel:    (pc)^2 sin(theta) / (E + mc^2)
    No-flip channel: ((E + mc^2)^2 + (pc)^2 cos(theta)) / (E + mc^2)

    Valid at all energies.  In the low-energy limit the flip element
    vanishes and the no-flip element tends to the constant 2 mc^2.
    """
    if not math.isfinite(theta):
        raise DomainError(f"spinor_element: theta must be finite, got {theta!r}")
    pc = beam.pc_ev
    e_plus_m = beam.energy_ev + beam.mass_ev
    if channel.is_flip:
        return pc * pc * math.sin(theta) / e_plus_m
    return (e_plus_m * e_plus_m + pc * pc * math.cos(theta)) / e_plus_m


def dsigma_dtheta_full(
    beam: BeamParams,
    wire: WirePotential,
    theta: float,
    channel: SpinChannel = NO_FLIP,
) -> float:
    """Full-energy angular density |spinor|^2 * form_factor^2, constant C = 1.

    Elastic and planar by construction: theta enters only through the
    momentum transfer q = 2 p |sin(theta/2)|.
    """
    q = momentum_transfer_single(beam.momentum, theta)
    amp = spinor_element(beam, theta, channel) * form_factor(wire, q)
    return amp * amp


def dsigma_dtheta_full_spin_summed(beam: BeamParams, wire: WirePotential, theta: float) -> float:
    """Full-energy density summed over final spins (flip + no-flip)."""
    return dsigma_dtheta_full(beam, wire, theta, NO_FLIP) + dsigma_dtheta_full(
        beam, wire, theta, FLIP
    )


def dsigma_dtheta_low_energy(p_radius: float, theta: float) -> float:
    """Low-energy angular density {0F1(2, -(pR)^2 sin^2(theta/2))}^2, C = 1.

    ``p_radius`` is the dimensionless momentum-radius product p*R.
    """
    if not (math.isfinite(p_radius) and p_radius > 0.0):
        raise DomainError(f"dsigma_dtheta_low_energy: p_radius > 0 required, got {p_radius!r}")
    if not math.isfinite(theta):
        raise DomainError(f"dsigma_dtheta_low_energy: theta must be finite, got {theta!r}")
    s = p_radius * math.sin(0.5 * theta)
    f = hyp0f1_reg2(-s * s)
    return f * f


def pattern_single(
    beam: BeamParams,
    wire: WirePotential,
    thetas: np.ndarray | None = None,
    mode: str = "low-energy",
    channel: SpinChannel | None = NO_FLIP,
    normalization: Normalization = Normalization.RAW,
) -> Pattern:
    """Sample the single-beam distribution over an angular grid.

    mode "low-energy" uses the squared form factor alone; mode "full" uses
    the full-energy spinor elements for ``channel`` (None means summed over
    final spins).  Grid evaluation is pure and order-independent.
    """
    thetas = default_grid() if thetas is None else validate_grid(thetas)
    if mode == "low-energy":
        p_radius = beam.momentum * wire.radius
        density = np.array([dsigma_dtheta_low_energy(p_radius, t) for t in thetas])
    elif mode == "full":
        if channel is None:
            density = np.array(
                [dsigma_dtheta_full_spin_summed(beam, wire, t) for t in thetas]
            )
        else:
            density = np.array(
                [dsigma_dtheta_full(beam, wire, t, channel) for t in thetas]
            )
    else:
        raise ValueError(f"unknown mode {mode!r}; expected 'low-energy' or 'full'")
    normalization = Normalization(normalization)
    metadata = {
        "kind": "single-beam",
        "mode": mode,
        "channel": "summed" if channel is None else
                   ("flip" if channel.is_flip else "no-flip"),
        "wavelength_nm": beam.wavelength_m * 1e9,
        "mass_ev": beam.mass_ev,
        "diameter_um": wire.diameter_um,
        "normalization": normalization.value,
    }
    return Pattern(thetas, normalize_density(thetas, density, normalization),
                   normalization, metadata)
