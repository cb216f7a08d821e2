import math
import warnings

import numpy as np
import pytest
from scipy import special

from driven_tls.baselines import (
    default_photon_number,
    rabi_rwa_frame,
    rabi_rwa_frequency,
    rabi_rwa_population,
    rabi_rwa_series,
    rwa_rf_population,
    rwa_rf_resonance_mismatch,
    rwa_rf_series,
)
from driven_tls.errors import ResonanceMismatchWarning
from driven_tls.exact import population_up_exact
from driven_tls.models.params import DriveParams
from driven_tls.models.run_config import IntegratorConfig


class TestRabiRwaFrame:
    """Test suite for the energy-eigenbasis frame"""

    def test_frame_invariants(self, golden_params):
        """Test u0^2 + v0^2 = 1 and A_x^2 + A_z^2 = A^2"""
        frame = rabi_rwa_frame(golden_params)
        assert frame.u0**2 + frame.v0**2 == pytest.approx(1.0, abs=1e-15)
        assert frame.a_x**2 + frame.a_z**2 == pytest.approx(
            golden_params.amplitude**2, abs=1e-12
        )
        assert frame.detuning == pytest.approx(
            golden_params.bare_splitting - golden_params.omega
        )

    def test_frequency_examples(self):
        """Test Omega_RR on resonance and at zero drive"""
        p = DriveParams(1.0, 0.0, 0.4, 1.0)
        assert rabi_rwa_frequency(p) == pytest.approx(0.2, abs=1e-15)
        p = DriveParams(1.0, 0.0, 0.0, 0.7)
        assert rabi_rwa_frequency(p) == pytest.approx(0.3, abs=1e-15)

    def test_flux_minimum_near_bare_splitting(self, flux_params):
        """Test Omega_RR over omega is smallest at omega = Xi_0"""
        xi_b = flux_params.bare_splitting
        omegas = np.linspace(0.95 * xi_b, 1.05 * xi_b, 201)
        values = [rabi_rwa_frequency(flux_params.replace(omega=w)) for w in omegas]
        best = omegas[int(np.argmin(values))]
        assert best / (2 * math.pi) == pytest.approx(xi_b / (2 * math.pi), abs=0.01)


class TestRabiRwaPopulation:
    """Test suite for the Rabi-RWA closed form"""

    def test_starts_at_zero(self, golden_params):
        """Test P_up(0) = 0 exactly"""
        assert rabi_rwa_population(golden_params, 0.0) == 0.0

    def test_unbiased_resonance(self):
        """Test eps = 0, omega = delta gives (1 - cos(omega t))/2"""
        p = DriveParams(1.0, 0.0, 0.2, 1.0)
        t = np.linspace(0.0, 60.0, 601)
        assert np.allclose(
            rabi_rwa_population(p, t), 0.5 * (1.0 - np.cos(t)), atol=1e-14
        )

    def test_zero_rabi_frequency(self):
        """Test A = 0 on resonance stays finite and matches the static closed form"""
        p = DriveParams(1.0, 0.5, 0.0, math.hypot(1.0, 0.5))
        t = np.linspace(0.0, 30.0, 301)
        xi_b = p.bare_splitting
        expected = (p.delta / xi_b) ** 2 * np.sin(xi_b * t / 2) ** 2
        assert np.allclose(rabi_rwa_population(p, t), expected, atol=1e-12)

    def test_bounds(self, equal_bias_params):
        """Test 0 <= P_up <= 1"""
        values = rabi_rwa_population(equal_bias_params, np.linspace(0.0, 100.0, 1001))
        assert values.min() >= 0.0 and values.max() <= 1.0

    def test_weak_drive_matches_exact(self):
        """Test weak drive stays within 0.02 of the exact integrator"""
        p = DriveParams(1.0, 0.4, 0.05, math.hypot(1.0, 0.4))
        t = np.linspace(0.0, 100.0, 1001)
        exact = population_up_exact(p, t, IntegratorConfig(rel_tol=1e-10, abs_tol=1e-12))
        rwa = rabi_rwa_population(p, t)
        assert np.max(np.abs(rwa - exact.as_array())) < 0.02

    def test_series(self, golden_params):
        """Test the TimeSeries wrapper"""
        series = rabi_rwa_series(golden_params, 5.0, 51)
        assert len(series) == 51
        assert series.values[0] == 0.0


class TestRwaRf:
    """Test suite for the rotating-frame RWA"""

    def test_default_photon_number(self):
        """Test n = -round(eps/omega)"""
        assert default_photon_number(DriveParams(1.0, 0.6, 0.1, 0.1)) == -6
        assert default_photon_number(DriveParams(1.0, -2.0, 0.1, 1.0)) == 2
        assert default_photon_number(DriveParams(1.0, 0.0, 0.1, 1.0)) == 0

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_coherent_destruction_of_tunneling(self, k):
        """Test P_up < 1e-20 at the first three zeros of J0"""
        zero = special.jn_zeros(0, 3)[k - 1]
        p = DriveParams(1.0, 0.0, zero * 2.0, 2.0)
        values = rwa_rf_population(p, 0, np.linspace(0.0, 1000.0, 501))
        assert np.max(values) < 1e-20

    def test_period(self):
        """Test the first full return at t = 2 pi / (J1(1) delta)"""
        p = DriveParams(1.0, -1.0, 1.0, 1.0)
        period = 2.0 * math.pi / special.j1(1.0)
        assert rwa_rf_population(p, 1, 0.5 * period) == pytest.approx(1.0, abs=1e-12)
        assert rwa_rf_population(p, 1, period) == pytest.approx(0.0, abs=1e-12)

    def test_warning_off_resonance(self):
        """Test a ResonanceMismatchWarning when n*omega + eps != 0"""
        p = DriveParams(1.0, 0.55, 0.1, 0.1)
        assert rwa_rf_resonance_mismatch(p, -5) == pytest.approx(0.05)
        with pytest.warns(ResonanceMismatchWarning):
            rwa_rf_population(p, -5, 1.0)

    def test_no_warning_on_resonance(self):
        """Test no warning when the resonance condition holds"""
        p = DriveParams(1.0, -2.0, 1.0, 1.0)
        with warnings.catch_warnings():
            warnings.simplefilter("error", ResonanceMismatchWarning)
            rwa_rf_population(p, None, 1.0)

    def test_bias_sign_symmetry(self):
        """Test eps -> -eps with n -> -n leaves the population unchanged"""
        t = np.linspace(0.0, 50.0, 101)
        plus = DriveParams(1.0, 2.0, 1.3, 1.0)
        minus = plus.replace(epsilon=-2.0)
        assert np.allclose(
            rwa_rf_population(plus, -2, t), rwa_rf_population(minus, 2, t), atol=1e-15
        )

    def test_series_suppresses_warning(self):
        """Test the series helper is silent off resonance"""
        p = DriveParams(1.0, 0.55, 0.1, 0.1)
        with warnings.catch_warnings():
            warnings.simplefilter("error", ResonanceMismatchWarning)
            series = rwa_rf_series(p, 10.0, 11)
        assert len(series) == 11
