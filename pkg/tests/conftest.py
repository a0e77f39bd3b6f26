import math

import pytest

from wirediff import BeamParams, WirePotential

# Default configuration used throughout: 633 nm beam, 17 um wire diameter.
WAVELENGTH_NM = 633.0
DIAMETER_UM = 17.0


@pytest.fixture(scope="session")
def beam() -> BeamParams:
    return BeamParams.from_wavelength_nm(WAVELENGTH_NM)


@pytest.fixture(scope="session")
def wire() -> WirePotential:
    return WirePotential.from_diameter_um(DIAMETER_UM)


@pytest.fixture(scope="session")
def p_radius(beam, wire) -> float:
    # 2*pi * 8.5e-6 / 633e-9 = 84.3714
    return beam.momentum * wire.radius


@pytest.fixture(scope="session")
def j1_zeros_oracle():
    """First positive zeros of J1 from the independent library oracle."""
    from scipy.special import jn_zeros

    return [float(z) for z in jn_zeros(1, 5)]


def bessel_oracle(x: float) -> float:
    """Independent library-grade J1 (rational approximation, scipy)."""
    from scipy.special import j1

    return float(j1(x))


def two_j1_over_x(x: float) -> float:
    """Oracle for the normalized disk transform 2 J1(x)/x."""
    if x == 0.0:
        return 1.0
    return 2.0 * bessel_oracle(x) / x
