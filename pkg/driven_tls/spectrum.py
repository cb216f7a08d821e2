"""
Fourier analysis of population time series.

F(nu) is approximated over a finite window: the series is mean-subtracted,
Hann-windowed and zero-padded before a real FFT. Frequencies are angular,
nu_k = 2*pi*k / (M*dt) for a padded length M.

Local maxima that sit under the Hann leakage envelope of a stronger line
(sidelobes start near -32 dB) are not reported as peaks.
"""

import logging
import math

import numpy as np
from scipy import signal

from driven_tls.errors import InvalidArgumentsError, SeriesTooShortError
from driven_tls.models.spectrum import CombLabel, Peak, Spectrum

logger = logging.getLogger(__name__)

MIN_SAMPLES = 64
DEFAULT_PAD_FACTOR = 8
DEFAULT_THRESHOLD = 1e-3
NOISE_REL = 1e-10
RABI_PERIODS = 40
DRIVE_PERIODS = 10
MAX_DRIVE_PERIODS = 1000

MAIN_LOBE_BINS = 1.5
LEAKAGE_MARGIN = 2.0


def hann_leakage(distance):
    """Envelope of |W(d)|/W(0) for a Hann window, d in unpadded bins."""
    return 1.0 / (math.pi * distance * abs(distance**2 - 1.0))


def _is_leakage(index, sources, magnitudes, pad_factor):
    for source in sources:
        distance = abs(index - source) / pad_factor
        if distance <= MAIN_LOBE_BINS:
            continue
        if magnitudes[index] <= LEAKAGE_MARGIN * magnitudes[source] * hann_leakage(distance):
            return True
    return False


def _local_maxima(magnitudes, height, pad_factor):
    """Indices of local maxima above height, strongest first, leakage removed."""
    indices, _ = signal.find_peaks(magnitudes, height=height)
    kept = []
    sources = [0]
    for index in sorted(indices, key=lambda i: magnitudes[i], reverse=True):
        if _is_leakage(index, sources, magnitudes, pad_factor):
            continue
        kept.append(index)
        sources.append(index)
    return kept


def fourier_spectrum(series, pad_factor=DEFAULT_PAD_FACTOR, threshold=DEFAULT_THRESHOLD):
    """
    Windowed, zero-padded magnitude spectrum of a TimeSeries.

    Magnitudes are scaled so that a cosine of amplitude a peaks near a.
    Spectrum.peaks lists on-grid local maxima above threshold times the
    global maximum, strongest first, with weights relative to that maximum.

    Raises:
        SeriesTooShortError: for fewer than 64 samples
    """
    n = len(series)
    if n < MIN_SAMPLES:
        raise SeriesTooShortError(
            f"Spectral analysis needs at least {MIN_SAMPLES} samples, got {n}"
        )
    if pad_factor < 1:
        raise InvalidArgumentsError("pad_factor must be at least 1")

    values = series.as_array()
    window = signal.windows.hann(n)
    centered = (values - values.mean()) * window
    size = pad_factor * n

    magnitudes = 2.0 * np.abs(np.fft.rfft(centered, n=size)) / window.sum()
    frequencies = 2.0 * math.pi * np.fft.rfftfreq(size, d=series.dt)
    noise_floor = NOISE_REL * float(np.max(np.abs(values)))

    peak_max = float(magnitudes.max())
    if peak_max <= noise_floor:
        return Spectrum(frequencies, magnitudes, [], noise_floor, pad_factor)

    height = max(threshold * peak_max, noise_floor)
    peaks = [
        Peak(float(frequencies[i]), float(magnitudes[i] / peak_max))
        for i in _local_maxima(magnitudes, height, pad_factor)
    ]
    return Spectrum(frequencies, magnitudes, peaks, noise_floor, pad_factor)


def find_peaks(s, rel_threshold):
    """
    Local maxima above rel_threshold of the global maximum, refined by
    three-point parabolic interpolation. Strongest first.
    """
    if not 0 < rel_threshold <= 1:
        raise InvalidArgumentsError("rel_threshold must lie in (0, 1]")
    mags = s.magnitudes
    peak_max = float(mags.max())
    if peak_max <= s.noise_floor:
        return []

    bin_width = s.bin_width
    height = max(rel_threshold * peak_max, s.noise_floor)
    refined = []
    for i in _local_maxima(mags, height, s.pad_factor):
        a, b, r = mags[i - 1], mags[i], mags[i + 1]
        curvature = a + r - 2.0 * b
        offset = 0.5 * (a - r) / curvature if curvature != 0 else 0.0
        amplitude = b - 0.25 * (a - r) * offset
        refined.append(
            Peak(float(s.frequencies[i] + offset * bin_width), float(amplitude / peak_max))
        )
    refined.sort(key=lambda pk: pk.weight, reverse=True)
    return refined


def _harmonic_label(n):
    return "omega" if n == 1 else f"{n}*omega"


def _sideband_label(n, sign):
    if n == 0:
        return "omega_r"
    if sign > 0 and n < 0:
        return "omega_r-" + _harmonic_label(-n)
    return _harmonic_label(n) + ("+omega_r" if sign > 0 else "-omega_r")


def comb_match(peaks, omega, omega_r, tol):
    """
    Label each peak as a harmonic n*omega (n >= 1) or a sideband
    n*omega +/- omega_r, picking the integer n with the smallest residual.
    Peaks farther than tol from every comb line are unclassified.
    """
    if not tol > 0:
        raise InvalidArgumentsError("tol must be positive")

    labels = []
    for peak in peaks:
        freq, weight = peak.frequency, peak.weight
        n = max(1, round(freq / omega))
        best = (abs(freq - n * omega), "harmonic", n, 0)

        for sign in (1, -1):
            n = round((freq - sign * omega_r) / omega)
            line = n * omega + sign * omega_r
            if line <= 0:
                continue
            residual = abs(freq - line)
            if residual < best[0]:
                best = (residual, "sideband", n, sign)

        residual, kind, n, sign = best
        if residual > tol:
            labels.append(
                CombLabel(freq, weight, "unclassified", 0, 0, residual, "unclassified")
            )
            continue
        label = _harmonic_label(n) if kind == "harmonic" else _sideband_label(n, sign)
        labels.append(CombLabel(freq, weight, kind, n, sign, residual, label))
    return labels


def default_window(p, omega_r):
    """
    Window length covering 40 Rabi periods and at least 10 drive periods,
    capped at 1000 drive periods for a near-zero Rabi frequency.
    """
    period = 2.0 * math.pi / p.omega
    drive = DRIVE_PERIODS * period
    if omega_r <= 0:
        return drive
    rabi = RABI_PERIODS * 2.0 * math.pi / omega_r
    return min(max(rabi, drive), MAX_DRIVE_PERIODS * period)


def population_spectrum(
    series,
    omega,
    omega_r,
    pad_factor=DEFAULT_PAD_FACTOR,
    threshold=DEFAULT_THRESHOLD,
    tol=None,
):
    """
    Spectrum of a population series and the comb labels of its peaks.

    tol defaults to the unpadded resolution 2*pi/T of the window.
    """
    spectrum = fourier_spectrum(series, pad_factor, threshold)
    if tol is None:
        tol = spectrum.resolution
    labels = comb_match(find_peaks(spectrum, threshold), omega, omega_r, tol)
    logger.debug(
        "%d peaks, %d classified",
        len(labels),
        sum(label.kind != "unclassified" for label in labels),
    )
    return spectrum, labels
