"""Core spectral transforms and the generalized Fourier synthesizer.

This module owns the transform conventions used everywhere else in the
package.  The discrete Fourier transform places the 1/N factor on the
*forward* transform, so the inverse is a bare exponential sum; every
frequency-domain kernel in :mod:`phasekit.phase`, :mod:`phasekit.fractional`
and :mod:`phasekit.image` is written against that placement.  Spectra carry
their normalization tag so a mismatched inverse is detectable instead of
silently wrong.

All operations here are pure functions of their inputs and safe to call
concurrently.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

import numpy as np
import scipy.fft as _fft


class Normalization(enum.Enum):
    """Where the 1/N factor of a DFT pair sits.

    ``FORWARD`` scales the analysis sum by 1/N (package default),
    ``INVERSE`` scales the synthesis sum by 1/N, ``ORTHONORMAL`` splits the
    factor symmetrically (used by the DCT-2 pair).
    """

    FORWARD = "forward"
    INVERSE = "inverse"
    ORTHONORMAL = "orthonormal"


@dataclass(frozen=True)
class Signal:
    """A finite real-valued sample sequence with a sample rate in Hz."""

    samples: np.ndarray
    sample_rate: float = 1.0

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=float)
        if samples.ndim != 1 or samples.size < 1:
            raise ValueError("signal must be a non-empty 1-D sequence")
        if not np.all(np.isfinite(samples)):
            raise ValueError("signal samples must be finite")
        if not (np.isfinite(self.sample_rate) and self.sample_rate > 0):
            raise ValueError("sample_rate must be a positive finite number")
        object.__setattr__(self, "samples", samples)
        object.__setattr__(self, "sample_rate", float(self.sample_rate))

    def __len__(self) -> int:
        return self.samples.size

    @property
    def times(self) -> np.ndarray:
        """Sample instants n / sample_rate."""
        return np.arange(self.samples.size) / self.sample_rate


@dataclass(frozen=True)
class Spectrum:
    """Complex coefficients tied to an explicit transform convention."""

    bins: np.ndarray
    normalization: Normalization = Normalization.FORWARD
    origin: str = "dft"
    sample_rate: float = 1.0

    def __post_init__(self):
        bins = np.asarray(self.bins)
        if bins.ndim != 1 or bins.size < 1:
            raise ValueError("spectrum must be a non-empty 1-D sequence")
        if self.origin not in ("dft", "dct2"):
            raise ValueError(f"unknown spectrum origin {self.origin!r}")
        if not isinstance(self.normalization, Normalization):
            raise ValueError("normalization must be a Normalization member")
        object.__setattr__(self, "bins", bins)

    def __len__(self) -> int:
        return self.bins.size


@dataclass(frozen=True)
class FourierSeriesCoeffs:
    """Amplitude/phase form of a real Fourier series.

    ``amplitudes[k-1]`` and ``phases[k-1]`` hold the magnitude r_k >= 0 and
    phase (radians) of the k-th harmonic of a_0 + sum_k r_k cos(k w0 t + phi_k).
    """

    a0: float
    amplitudes: np.ndarray
    phases: np.ndarray
    omega0: float

    def __post_init__(self):
        amplitudes = np.asarray(self.amplitudes, dtype=float)
        phases = np.asarray(self.phases, dtype=float)
        if amplitudes.shape != phases.shape or amplitudes.ndim != 1:
            raise ValueError("amplitudes and phases must be 1-D and equal length")
        if np.any(amplitudes < 0):
            raise ValueError("harmonic amplitudes must be non-negative")
        if not np.all(np.isfinite(phases)):
            raise ValueError("harmonic phases must be finite")
        if not (np.isfinite(self.omega0) and self.omega0 > 0):
            raise ValueError("omega0 must be positive and finite")
        object.__setattr__(self, "amplitudes", amplitudes)
        object.__setattr__(self, "phases", phases)

    @property
    def n_harmonics(self) -> int:
        return self.amplitudes.size


@dataclass(frozen=True)
class ModulationSpec:
    """Per-harmonic amplitude and phase modulation callbacks.

    ``c0(t)`` and ``alpha0(t)`` modulate the mean term; ``ck(k, t)`` and
    ``alphak(k, t)`` modulate harmonic k >= 1.  All callbacks must return
    finite values for every requested (k, t).
    """

    c0: Callable[[np.ndarray], np.ndarray]
    alpha0: Callable[[np.ndarray], np.ndarray]
    ck: Callable[[int, np.ndarray], np.ndarray]
    alphak: Callable[[int, np.ndarray], np.ndarray]

    @classmethod
    def identity(cls) -> "ModulationSpec":
        """No modulation: plain truncated Fourier series resynthesis."""
        return cls(
            c0=lambda t: np.ones_like(t),
            alpha0=lambda t: np.zeros_like(t),
            ck=lambda k, t: np.ones_like(t),
            alphak=lambda k, t: np.zeros_like(t),
        )

    @classmethod
    def amplitude_modulation(cls, message: Callable[[np.ndarray], np.ndarray],
                             bias: float = 1.0) -> "ModulationSpec":
        """AM of the first harmonic: c1(t) = bias + message(t), others muted."""
        return cls(
            c0=lambda t: np.zeros_like(t),
            alpha0=lambda t: np.zeros_like(t),
            ck=lambda k, t: bias + np.asarray(message(t), dtype=float)
            if k == 1 else np.zeros_like(t),
            alphak=lambda k, t: np.zeros_like(t),
        )

    @classmethod
    def angle_modulation(cls, message: Callable[[np.ndarray], np.ndarray]) -> "ModulationSpec":
        """PM of the first harmonic: alpha1(t) = message(t), others muted."""
        return cls(
            c0=lambda t: np.zeros_like(t),
            alpha0=lambda t: np.zeros_like(t),
            ck=lambda k, t: np.ones_like(t) if k == 1 else np.zeros_like(t),
            alphak=lambda k, t: np.asarray(message(t), dtype=float)
            if k == 1 else np.zeros_like(t),
        )


@dataclass(frozen=True)
class Image:
    """A 2-D real-valued pixel grid."""

    pixels: np.ndarray

    def __post_init__(self):
        pixels = np.asarray(self.pixels, dtype=float)
        if pixels.ndim != 2 or pixels.size < 1:
            raise ValueError("image must be a non-empty 2-D grid")
        if not np.all(np.isfinite(pixels)):
            raise ValueError("image entries must be finite")
        object.__setattr__(self, "pixels", pixels)

    @property
    def rows(self) -> int:
        return self.pixels.shape[0]

    @property
    def cols(self) -> int:
        return self.pixels.shape[1]


def as_signal(x, sample_rate: float = 1.0) -> Signal:
    """Coerce an array or Signal into a Signal."""
    if isinstance(x, Signal):
        return x
    return Signal(np.asarray(x, dtype=float), sample_rate)


def dft(x) -> Spectrum:
    """Discrete Fourier transform with 1/N on the forward sum.

    Parameters
    ----------
    x : array_like
        Real or complex sequence of length >= 1.  Arbitrary (including
        prime) lengths are supported in O(N log N).

    Returns
    -------
    Spectrum
        bins[k] = (1/N) sum_n x[n] exp(-j 2 pi k n / N).
    """
    if isinstance(x, Signal):
        arr = x.samples
        rate = x.sample_rate
    else:
        arr = np.asarray(x)
        rate = 1.0
    if arr.ndim != 1 or arr.size < 1:
        raise ValueError("dft input must be a non-empty 1-D sequence")
    bins = _fft.fft(arr) / arr.size
    return Spectrum(bins, Normalization.FORWARD, "dft", rate)


def idft(spectrum: Spectrum) -> np.ndarray:
    """Inverse DFT honoring the spectrum's recorded normalization."""
    if spectrum.origin != "dft":
        raise ValueError(f"idft expects a dft spectrum, got {spectrum.origin!r}")
    if spectrum.normalization is Normalization.FORWARD:
        return _fft.ifft(spectrum.bins) * spectrum.bins.size
    if spectrum.normalization is Normalization.INVERSE:
        return _fft.ifft(spectrum.bins)
    raise ValueError(f"idft cannot invert {spectrum.normalization} dft bins")


def dct2_forward(signal) -> Spectrum:
    """Orthonormal DCT-2.

    X[k] = sqrt(2/N) sigma_k sum_n x[n] cos(pi k (2n+1) / 2N) with
    sigma_0 = 1/sqrt(2) and sigma_k = 1 otherwise, computed in O(N log N).
    """
    sig = as_signal(signal)
    bins = _fft.dct(sig.samples, type=2, norm="ortho")
    return Spectrum(bins, Normalization.ORTHONORMAL, "dct2", sig.sample_rate)


def dct2_inverse(spectrum: Spectrum) -> Signal:
    """Exact inverse of :func:`dct2_forward`."""
    if spectrum.origin != "dct2":
        raise ValueError(f"dct2_inverse expects a dct2 spectrum, got {spectrum.origin!r}")
    if spectrum.normalization is not Normalization.ORTHONORMAL:
        raise ValueError("dct2_inverse requires orthonormal bins")
    samples = _fft.idct(np.asarray(spectrum.bins, dtype=float), type=2, norm="ortho")
    return Signal(samples, spectrum.sample_rate)


def dft2d(image) -> np.ndarray:
    """Separable 2-D DFT with 1/(M N) on the forward transform."""
    pixels = image.pixels if isinstance(image, Image) else np.asarray(image)
    if pixels.ndim != 2 or pixels.size < 1:
        raise ValueError("dft2d input must be a non-empty 2-D grid")
    return _fft.fft2(pixels) / pixels.size


def idft2d(grid: np.ndarray) -> Image:
    """Inverse 2-D DFT; returns the real part as an Image."""
    grid = np.asarray(grid)
    if grid.ndim != 2 or grid.size < 1:
        raise ValueError("idft2d input must be a non-empty 2-D grid")
    return Image(np.real(_fft.ifft2(grid)) * grid.size)


def analytic_signal(signal) -> np.ndarray:
    """Analytic signal z with Re(z) = x and one-sided spectrum.

    Positive-frequency bins are doubled, DC and Nyquist are kept as-is, and
    negative-frequency bins are zeroed, so Im(z) is the Hilbert transform
    of x and the DC component stays on the real part.
    """
    sig = as_signal(signal)
    x = sig.samples
    n = x.size
    half = n // 2
    gain = np.zeros(n)
    gain[0] = 1.0
    if n % 2 == 0:
        gain[1:half] = 2.0
        gain[half] = 1.0
    else:
        gain[1:half + 1] = 2.0
    return _fft.ifft(_fft.fft(x) * gain)


def harmonic_series(signal, n_harmonics: int) -> FourierSeriesCoeffs:
    """Leading Fourier-series coefficients of one period of a sampled signal.

    Treats the N samples as one period; harmonics above (N-1)//2 are not
    representable and are rejected.
    """
    sig = as_signal(signal)
    n = len(sig)
    if not 0 <= n_harmonics <= (n - 1) // 2:
        raise ValueError(f"n_harmonics must be in [0, {(n - 1) // 2}] for length {n}")
    bins = dft(sig.samples).bins
    a0 = float(np.real(bins[0]))
    k = np.arange(1, n_harmonics + 1)
    amplitudes = 2.0 * np.abs(bins[k]) if n_harmonics else np.zeros(0)
    phases = np.angle(bins[k]) if n_harmonics else np.zeros(0)
    omega0 = 2.0 * np.pi * sig.sample_rate / n
    return FourierSeriesCoeffs(a0, amplitudes, phases, omega0)


def gfr_synthesize(coeffs: FourierSeriesCoeffs, mods: ModulationSpec,
                   n_harmonics: int, t_grid) -> Signal:
    """Evaluate the generalized Fourier representation on a time grid.

    x(t) = a0 c0(t) cos(alpha0(t))
         + sum_{k=1..K} ck(k, t) r_k cos(k w0 t + phi_k - alphak(k, t))

    With identity modulation this is the plain truncated Fourier series;
    amplitude modulation, angle modulation, phase shifting and fractional
    differintegration are all particular choices of the four callbacks.

    Parameters
    ----------
    coeffs : FourierSeriesCoeffs
        Series mean, harmonic amplitudes/phases and fundamental omega0.
    mods : ModulationSpec
        Amplitude/phase modulation callbacks.
    n_harmonics : int
        Number of harmonics K to include (0 <= K <= coeffs.n_harmonics).
    t_grid : array_like
        Uniformly spaced time instants in seconds.

    Raises
    ------
    ValueError
        If a modulation callback returns non-finite values, or the grid is
        not uniformly spaced.
    """
    t = np.asarray(t_grid, dtype=float)
    if t.ndim != 1 or t.size < 1 or not np.all(np.isfinite(t)):
        raise ValueError("t_grid must be a non-empty finite 1-D grid")
    if not 0 <= n_harmonics <= coeffs.n_harmonics:
        raise ValueError(f"n_harmonics must be in [0, {coeffs.n_harmonics}]")
    if t.size > 1:
        steps = np.diff(t)
        if steps[0] <= 0 or not np.allclose(steps, steps[0], rtol=1e-9, atol=0.0):
            raise ValueError("t_grid must be uniformly increasing")
        sample_rate = 1.0 / steps[0]
    else:
        sample_rate = 1.0

    def _eval(fn, *args):
        out = np.broadcast_to(np.asarray(fn(*args), dtype=float), t.shape)
        if not np.all(np.isfinite(out)):
            raise ValueError("modulation callback returned non-finite values")
        return out

    x = coeffs.a0 * _eval(mods.c0, t) * np.cos(_eval(mods.alpha0, t))
    for k in range(1, n_harmonics + 1):
        r_k = coeffs.amplitudes[k - 1]
        phi_k = coeffs.phases[k - 1]
        c_k = _eval(mods.ck, k, t)
        a_k = _eval(mods.alphak, k, t)
        x = x + c_k * r_k * np.cos(k * coeffs.omega0 * t + phi_k - a_k)
    return Signal(x, sample_rate)
