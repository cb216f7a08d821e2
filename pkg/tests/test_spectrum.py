import math

import numpy as np
import pytest

from driven_tls.chrw import chrw_population_series, generalized_rabi_frequency
from driven_tls.errors import InvalidArgumentsError, SeriesTooShortError
from driven_tls.exact import population_up_exact
from driven_tls.models.params import DriveParams, TimeSeries
from driven_tls.models.run_config import IntegratorConfig
from driven_tls.models.spectrum import Peak
from driven_tls.spectrum import (
    comb_match,
    default_window,
    find_peaks,
    fourier_spectrum,
    hann_leakage,
    population_spectrum,
)

TIGHT = IntegratorConfig(rel_tol=1e-10, abs_tol=1e-12)


def sampled(fun, samples=4096, dt=0.05):
    times = dt * np.arange(samples)
    return TimeSeries.from_grid(times, fun(times))


def exact_series(p, window, dt=0.1):
    times = dt * np.arange(int(window / dt) + 1)
    return population_up_exact(p, times, TIGHT)


def chrw_series(p, window, dt=0.1):
    samples = int(window / dt) + 1
    return chrw_population_series(p, dt * (samples - 1), samples)


def nearest_distance(freq, peaks):
    return min(abs(freq - pk.frequency) for pk in peaks)


class TestFourierSpectrum:
    """Test suite for the windowed transform"""

    def test_single_cosine(self):
        """Test a cosine gives one dominant peak at its frequency and amplitude"""
        series = sampled(lambda t: 0.5 + 0.3 * np.cos(2.0 * t))
        s = fourier_spectrum(series)
        assert s.peaks[0].frequency == pytest.approx(2.0, abs=s.bin_width)
        assert s.peaks[0].weight == 1.0
        assert len(s.peaks) == 1
        refined = find_peaks(s, 1e-3)
        assert refined[0].frequency == pytest.approx(2.0, abs=0.1 * s.bin_width)
        assert float(s.magnitudes.max()) == pytest.approx(0.3, rel=0.01)

    def test_grid_invariants(self):
        """Test increasing frequencies, non-negative magnitudes, peaks on the grid"""
        series = sampled(lambda t: np.cos(1.3 * t) + 0.2 * np.sin(0.4 * t))
        s = fourier_spectrum(series)
        assert np.all(np.diff(s.frequencies) > 0)
        assert np.all(s.magnitudes >= 0)
        for peak in s.peaks:
            assert np.min(np.abs(s.frequencies - peak.frequency)) == 0.0
        weights = [pk.weight for pk in s.peaks]
        assert weights == sorted(weights, reverse=True)

    def test_resolution(self):
        """Test resolution is the unpadded 2*pi/T"""
        series = sampled(lambda t: np.cos(t), samples=1000, dt=0.1)
        s = fourier_spectrum(series, pad_factor=4)
        assert s.resolution == pytest.approx(2.0 * math.pi / 100.0)
        assert s.bin_width == pytest.approx(s.resolution / 4)

    def test_constant_series(self):
        """Test a constant series has no peaks"""
        s = fourier_spectrum(sampled(lambda t: np.full_like(t, 0.5)))
        assert s.peaks == []
        assert find_peaks(s, 1e-3) == []

    def test_two_tones(self):
        """Test two tones give two peaks with the amplitude ratio as weight"""
        series = sampled(lambda t: 0.4 * np.cos(1.0 * t) + 0.1 * np.cos(3.0 * t))
        peaks = find_peaks(fourier_spectrum(series), 1e-3)
        assert len(peaks) == 2
        assert peaks[0].frequency == pytest.approx(1.0, abs=0.01)
        assert peaks[1].frequency == pytest.approx(3.0, abs=0.01)
        assert peaks[1].weight == pytest.approx(0.25, abs=0.01)

    def test_sidelobes_not_reported(self):
        """Test a strong tone's leakage does not show up as extra peaks"""
        series = sampled(lambda t: np.cos(1.7 * t))
        assert len(find_peaks(fourier_spectrum(series), 1e-6)) == 1

    def test_linearity(self):
        """Test scaling the input scales the magnitudes and an offset is removed"""
        fun = lambda t: np.cos(0.9 * t) + 0.3 * np.cos(2.2 * t)  # noqa: E731
        base = fourier_spectrum(sampled(fun))
        scaled = fourier_spectrum(sampled(lambda t: 2.0 * fun(t) + 5.0))
        assert np.allclose(scaled.magnitudes, 2.0 * base.magnitudes, atol=1e-9)

    def test_pad_invariance(self):
        """Test refined peaks move less than one original bin with more padding"""
        series = sampled(lambda t: np.cos(1.234 * t) + 0.5 * np.cos(2.71 * t))
        low = find_peaks(fourier_spectrum(series, pad_factor=2), 1e-3)
        high = fourier_spectrum(series, pad_factor=16)
        for a, b in zip(low, find_peaks(high, 1e-3)):
            assert abs(a.frequency - b.frequency) < high.resolution

    def test_too_short(self):
        """Test fewer than 64 samples - negative case"""
        with pytest.raises(SeriesTooShortError):
            fourier_spectrum(sampled(np.cos, samples=63))

    def test_invalid_threshold(self):
        """Test rel_threshold outside (0, 1] - negative case"""
        s = fourier_spectrum(sampled(np.cos))
        with pytest.raises(InvalidArgumentsError):
            find_peaks(s, 0.0)
        with pytest.raises(InvalidArgumentsError):
            find_peaks(s, 1.5)

    def test_threshold_one(self):
        """Test rel_threshold = 1 keeps only the global maximum"""
        series = sampled(lambda t: np.cos(t) + 0.9 * np.cos(2.5 * t))
        peaks = find_peaks(fourier_spectrum(series), 1.0)
        assert len(peaks) == 1
        assert peaks[0].frequency == pytest.approx(1.0, abs=0.01)

    def test_hann_leakage_envelope(self):
        """Test the leakage envelope decays with distance"""
        assert hann_leakage(2.5) > hann_leakage(5.0) > hann_leakage(10.0)


class TestCombMatch:
    """Test suite for comb classification"""

    def test_exact_lines(self):
        """Test peaks on {omega, 2 omega, omega_r, omega -/+ omega_r} have residual 0"""
        peaks = [Peak(f, 1.0) for f in (1.0, 2.0, 0.25, 0.75, 1.25)]
        labels = comb_match(peaks, 1.0, 0.25, 1e-6)
        assert [lab.label for lab in labels] == [
            "omega",
            "2*omega",
            "omega_r",
            "omega-omega_r",
            "omega+omega_r",
        ]
        assert all(lab.residual == 0.0 for lab in labels)
        assert [lab.kind for lab in labels] == ["harmonic"] * 2 + ["sideband"] * 3

    def test_rabi_above_drive(self):
        """Test omega_r > omega labels the difference line omega_r - omega"""
        labels = comb_match([Peak(0.25, 1.0)], 1.0, 1.25, 1e-9)
        assert labels[0].label == "omega_r-omega"
        assert (labels[0].n, labels[0].sign) == (-1, 1)

    def test_harmonic_preferred_on_tie(self):
        """Test a harmonic and a sideband at the same place resolve to the harmonic"""
        labels = comb_match([Peak(1.0, 1.0)], 1.0, 2.0, 1e-9)
        assert labels[0].kind == "harmonic"

    def test_unclassified(self):
        """Test an incommensurate frequency is unclassified"""
        labels = comb_match([Peak(5.55, 0.3)], 1.0, 0.3, 0.05)
        assert labels[0].kind == "unclassified"
        assert labels[0].residual == pytest.approx(0.15)

    def test_invalid_tolerance(self):
        """Test tol <= 0 - negative case"""
        with pytest.raises(InvalidArgumentsError):
            comb_match([], 1.0, 0.3, 0.0)


class TestPopulationSpectra:
    """Spectra of driven populations"""

    def test_default_window(self, equal_bias_params):
        """Test the window covers 40 Rabi periods or 10 drive periods"""
        assert default_window(equal_bias_params, 0.5) == pytest.approx(160 * math.pi)
        assert default_window(equal_bias_params, 0.0) == pytest.approx(
            20 * math.pi / equal_bias_params.omega
        )
        assert default_window(equal_bias_params, 1e-9) == pytest.approx(
            2000 * math.pi / equal_bias_params.omega
        )

    def test_equal_bias_dominant_lines(self, equal_bias_params):
        """Test the strongest exact line is omega_r = 0.4643 with omega among the leading lines"""
        omega_r = generalized_rabi_frequency(equal_bias_params)
        series = exact_series(equal_bias_params, default_window(equal_bias_params, omega_r))
        spectrum, labels = population_spectrum(series, equal_bias_params.omega, omega_r)
        assert labels[0].label == "omega_r"
        assert labels[0].frequency == pytest.approx(0.4643, abs=spectrum.resolution)
        leading = {lab.label: lab.frequency for lab in labels[:4]}
        assert leading["omega"] == pytest.approx(math.sqrt(2.0), abs=spectrum.resolution)
        assert "omega-omega_r" in leading
        assert all(lab.kind != "unclassified" for lab in labels if lab.weight >= 1e-2)

    def test_equal_bias_chrw_matches_exact(self, equal_bias_params):
        """Test every strong CHRW line has an exact line within one bin"""
        omega_r = generalized_rabi_frequency(equal_bias_params)
        window = default_window(equal_bias_params, omega_r)
        exact = find_peaks(fourier_spectrum(exact_series(equal_bias_params, window)), 1e-3)
        chrw_spec = fourier_spectrum(chrw_series(equal_bias_params, window))
        for peak in find_peaks(chrw_spec, 0.05):
            assert nearest_distance(peak.frequency, exact) < chrw_spec.resolution

    def test_equal_bias_exact_lines_in_chrw(self, equal_bias_params):
        """Test every strong exact line has a CHRW line within one bin"""
        omega_r = generalized_rabi_frequency(equal_bias_params)
        window = default_window(equal_bias_params, omega_r)
        exact_spec = fourier_spectrum(exact_series(equal_bias_params, window))
        chrw = find_peaks(fourier_spectrum(chrw_series(equal_bias_params, window)), 1e-3)
        for peak in find_peaks(exact_spec, 0.1):
            assert nearest_distance(peak.frequency, chrw) < exact_spec.resolution

    def test_fast_drive_chrw_matches_exact(self):
        """Test the off-resonant CHRW and exact lines agree"""
        p = DriveParams(1.0, 1.0, 1.0, 2.0)
        omega_r = generalized_rabi_frequency(p)
        window = default_window(p, omega_r)
        exact = find_peaks(fourier_spectrum(exact_series(p, window)), 1e-3)
        chrw_spec, labels = population_spectrum(chrw_series(p, window), p.omega, omega_r)
        for lab in labels:
            if lab.weight >= 0.05:
                assert lab.kind != "unclassified"
                assert nearest_distance(lab.frequency, exact) < chrw_spec.resolution

    def test_slow_drive_sum_line_strongest(self):
        """Test the strongest line sits at omega_r + omega for slow weak driving"""
        p = DriveParams(1.0, 0.6, 0.1, 0.1)
        omega_r = generalized_rabi_frequency(p)
        series = exact_series(p, default_window(p, omega_r))
        spectrum, labels = population_spectrum(series, p.omega, omega_r)
        assert labels[0].frequency == pytest.approx(
            omega_r + p.omega, abs=spectrum.resolution
        )
