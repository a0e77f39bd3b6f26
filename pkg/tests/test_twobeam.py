import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from wirediff.electron import FLIP, NO_FLIP, dsigma_dtheta_full as single_full
from wirediff.numerics import DomainError, hyp0f1_reg2
from wirediff.twobeam import (
    ScanResult,
    TwoBeamConfig,
    dsigma_dtheta_full,
    dsigma_dtheta_low_energy,
    momentum_transfer_pair,
    phi_theta_scan,
    superpose_amplitudes,
)

from conftest import two_j1_over_x

PR = 84.37136668408607
TAU = 2.0 * math.pi


class TestMomentumTransferPair:
    def test_degenerate_intersection(self):
        from wirediff.potential import momentum_transfer_single

        p = 9.9e6
        q_minus, q_plus = momentum_transfer_pair(p, 0.07, 0.0)
        q_single = momentum_transfer_single(p, 0.07)
        assert q_minus == q_single
        assert q_plus == q_single

    def test_forward_symmetry(self):
        p = 9.9e6
        q_minus, q_plus = momentum_transfer_pair(p, 0.0, 0.1)
        assert q_minus == q_plus == pytest.approx(2.0 * p * math.sin(0.025), rel=1e-15)

    @given(st.floats(min_value=-0.5, max_value=0.5))
    def test_theta_reflection_swaps_pair(self, theta):
        p = 9.9e6
        q_minus, q_plus = momentum_transfer_pair(p, theta, 0.1)
        r_minus, r_plus = momentum_transfer_pair(p, -theta, 0.1)
        assert q_minus == r_plus
        assert q_plus == r_minus

    def test_bad_momentum_rejected(self):
        with pytest.raises(DomainError):
            momentum_transfer_pair(0.0, 0.1, 0.1)


class TestLowEnergyDensity:
    def test_degenerate_intersection_quadruples_single_beam(self):
        from wirediff.electron import dsigma_dtheta_low_energy as single_low

        cfg = TwoBeamConfig(alpha=0.0, phi=0.0)
        for theta in (0.0, 0.01, 0.045, 0.1):
            assert dsigma_dtheta_low_energy(PR, cfg, theta) == pytest.approx(
                4.0 * single_low(PR, theta), rel=1e-12
            )

    def test_destructive_center(self):
        assert dsigma_dtheta_low_energy(PR, TwoBeamConfig(0.1, math.pi), 0.0) \
            == pytest.approx(0.0, abs=1e-25)

    def test_forward_value_default_two_beam_configuration(self):
        # theta = 0, alpha = 0.1, phi = 0: density is 4 F(q0 R)^2 with
        # q0 R = 2 pR sin(alpha/4); checked against the Bessel oracle
        q0_r = 2.0 * PR * math.sin(0.025)
        expected = 4.0 * two_j1_over_x(q0_r) ** 2
        got = dsigma_dtheta_low_energy(PR, TwoBeamConfig(0.1, 0.0), 0.0)
        assert got == pytest.approx(expected, rel=1e-10)

    @given(
        st.floats(min_value=1.0, max_value=200.0),
        st.floats(min_value=0.0, max_value=0.5),
        st.floats(min_value=-10.0, max_value=10.0),
        st.floats(min_value=-0.7, max_value=0.7),
    )
    def test_non_negative(self, p_radius, alpha, phi, theta):
        value = dsigma_dtheta_low_energy(p_radius, TwoBeamConfig(alpha, phi), theta)
        assert value >= 0.0

    @given(st.floats(min_value=-0.5, max_value=0.5),
           st.floats(min_value=-8.0, max_value=8.0))
    def test_even_in_theta(self, theta, phi):
        cfg = TwoBeamConfig(0.1, phi)
        a = dsigma_dtheta_low_energy(PR, cfg, theta)
        b = dsigma_dtheta_low_energy(PR, cfg, -theta)
        assert a == pytest.approx(b, rel=1e-12, abs=1e-300)

    def test_phase_periodicity_exact(self):
        # 2*pi periodicity is exact when phi + 2*pi is itself exact
        for phi in (0.0, 0.5, 1.0, -0.5, 1.5):
            a = dsigma_dtheta_low_energy(PR, TwoBeamConfig(0.1, phi), 0.013)
            b = dsigma_dtheta_low_energy(PR, TwoBeamConfig(0.1, phi + TAU), 0.013)
            assert a == b

    def test_zero_vs_two_pi_identical(self):
        a = dsigma_dtheta_low_energy(PR, TwoBeamConfig(0.1, 0.0), 0.02)
        b = dsigma_dtheta_low_energy(PR, TwoBeamConfig(0.1, TAU), 0.02)
        assert a == b

    @given(st.floats(min_value=-7.0, max_value=7.0),
           st.floats(min_value=-0.6, max_value=0.6))
    def test_interference_bound(self, phi, theta):
        cfg = TwoBeamConfig(0.1, phi)
        s_minus = PR * math.sin(0.5 * theta - 0.025)
        s_plus = PR * math.sin(0.5 * theta + 0.025)
        f_minus = hyp0f1_reg2(-s_minus * s_minus)
        f_plus = hyp0f1_reg2(-s_plus * s_plus)
        density = dsigma_dtheta_low_energy(PR, cfg, theta)
        bound = 2.0 * abs(f_minus * f_plus) + 1e-12
        assert abs(density - (f_minus**2 + f_plus**2)) <= bound


class TestFullEnergyDensity:
    def test_matches_low_energy_shape_at_optical_momentum(self, beam, wire):
        thetas = np.linspace(-0.15, 0.15, 401)
        for phi in (0.0, 1.0, math.pi):
            cfg = TwoBeamConfig(0.1, phi)
            p_radius = beam.momentum * wire.radius
            full = np.array([dsigma_dtheta_full(beam, wire, cfg, float(t)) for t in thetas])
            low = np.array([dsigma_dtheta_low_energy(p_radius, cfg, float(t)) for t in thetas])
            full /= np.max(full)
            low /= np.max(low)
            assert float(np.max(np.abs(full - low))) <= 1e-8

    def test_degenerate_intersection_reduces_to_single(self, beam, wire):
        # alpha = 0: density = single-beam full * (2 + 2 cos(phi))
        for phi in (0.0, 0.7, 2.0):
            cfg = TwoBeamConfig(0.0, phi)
            theta = 0.03
            expected = single_full(beam, wire, theta, NO_FLIP) * (2.0 + 2.0 * math.cos(phi))
            got = dsigma_dtheta_full(beam, wire, cfg, theta, NO_FLIP)
            assert got == pytest.approx(expected, rel=1e-12)

    def test_phase_periodicity(self, beam, wire):
        cfg_a = TwoBeamConfig(0.1, 0.0)
        cfg_b = TwoBeamConfig(0.1, TAU)
        assert dsigma_dtheta_full(beam, wire, cfg_a, 0.02) == dsigma_dtheta_full(
            beam, wire, cfg_b, 0.02
        )

    def test_flip_channel_supported(self, beam, wire):
        value = dsigma_dtheta_full(beam, wire, TwoBeamConfig(0.1, 0.0), 0.05, FLIP)
        assert value >= 0.0


class TestSuperposeAmplitudes:
    def test_equal_amplitudes_cancel_at_pi(self):
        assert superpose_amplitudes(1.0, 1.0, math.pi) == pytest.approx(0.0, abs=1e-30)

    def test_single_amplitude_passthrough(self):
        for phi in (0.0, 1.0, 4.0):
            assert superpose_amplitudes(1.0, 0.0, phi) == 1.0

    @given(st.floats(min_value=-1.0, max_value=1.0),
           st.floats(min_value=-7.0, max_value=7.0))
    def test_real_equal_amplitudes_reproduce_quadratic_form(self, f, phi):
        # |F + F e^{-i phi}|^2 = F^2 (2 + 2 cos(phi))
        expected = f * f * (2.0 + 2.0 * math.cos(math.remainder(phi, TAU)))
        assert superpose_amplitudes(f, f, phi) == pytest.approx(expected, rel=1e-12, abs=1e-15)

    def test_consistency_with_low_energy_density(self):
        # same real form factors => identical densities
        theta = 0.017
        cfg = TwoBeamConfig(0.1, 0.93)
        s_minus = PR * math.sin(0.5 * theta - 0.025)
        s_plus = PR * math.sin(0.5 * theta + 0.025)
        f_minus = hyp0f1_reg2(-s_minus * s_minus)
        f_plus = hyp0f1_reg2(-s_plus * s_plus)
        expected = dsigma_dtheta_low_energy(PR, cfg, theta)
        assert superpose_amplitudes(f_minus, f_plus, cfg.phi) == pytest.approx(
            expected, abs=1e-12
        )

    def test_phase_sign_convention_explicit(self):
        # complex amplitudes expose the e^{-i phi} vs e^{+i phi} choice
        a = superpose_amplitudes(1.0 + 0.5j, 0.3 - 0.2j, 0.7, phase_sign=-1)
        b = superpose_amplitudes(1.0 + 0.5j, 0.3 - 0.2j, -0.7, phase_sign=+1)
        assert a == pytest.approx(b, rel=1e-15)
        with pytest.raises(ValueError):
            superpose_amplitudes(1.0, 1.0, 0.0, phase_sign=2)

    def test_non_finite_rejected(self):
        with pytest.raises(DomainError):
            superpose_amplitudes(math.nan, 1.0, 0.0)


class TestPhiThetaScan:
    def test_shape_and_non_negativity(self):
        phis = np.linspace(0.0, TAU, 9)
        thetas = np.linspace(-0.1, 0.1, 11)
        scan = phi_theta_scan(PR, 0.1, phis, thetas)
        assert isinstance(scan, ScanResult)
        assert scan.density.shape == (9, 11)
        assert np.all(scan.density >= 0.0)

    def test_rows_periodic(self):
        phis = np.array([0.5, 0.5 + TAU])
        thetas = np.linspace(-0.1, 0.1, 101)
        scan = phi_theta_scan(PR, 0.1, phis, thetas)
        assert np.all(
            np.abs(scan.density[0] - scan.density[1])
            <= 1e-12 * np.maximum(np.abs(scan.density[0]), 1e-300)
        )

    def test_destructive_row_vanishes_at_center(self):
        phis = np.array([0.0, math.pi])
        thetas = np.linspace(-0.1, 0.1, 101)  # includes 0
        scan = phi_theta_scan(PR, 0.1, phis, thetas)
        j0 = int(np.argmin(np.abs(thetas)))
        assert scan.density[1, j0] == pytest.approx(0.0, abs=1e-20)

    def test_row_mass_extremal_at_bright_and_dark_fringes(self):
        phis = np.linspace(0.0, TAU, 41)
        thetas = np.linspace(-0.15, 0.15, 601)
        scan = phi_theta_scan(PR, 0.1, phis, thetas)
        masses = np.trapezoid(scan.density, thetas, axis=1)
        assert int(np.argmax(masses)) in (0, 40)       # phi = 0 or 2*pi
        assert int(np.argmin(masses)) == 20            # phi = pi

    def test_grid_violations_rejected(self):
        with pytest.raises(ValueError):
            phi_theta_scan(PR, 0.1, np.array([1.0, 0.0]), np.array([0.0, 0.1]))
        with pytest.raises(ValueError):
            phi_theta_scan(PR, 0.1, np.array([]), np.array([0.0, 0.1]))
