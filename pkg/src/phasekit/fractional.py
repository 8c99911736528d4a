"""Fractional delay and fractional-order differintegration via spectral kernels.

Sub-sample delays are linear phase ramps applied to the one-sided spectrum;
fractional derivatives/integrals multiply each positive bin by
(omega_k)^mu e^{j mu pi/2} and correct the mean separately through a
reciprocal-gamma power-law term.  Both assume the signal's periodic
extension, so accuracy claims hold on interior samples of smooth signals.
"""
from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, replace

import numpy as np
from scipy.special import rgamma

from .phase import PhaseProfile, pt_dct
from .spectral import Signal, as_signal, dft, idft


class KernelScaling(enum.Enum):
    """Units of the differintegration kernel.

    PHYSICAL multiplies by sample_rate^mu so order 1 matches d/dt;
    NORMALIZED keeps the digital-frequency kernel (2 pi k / N)^mu verbatim,
    i.e. per-sample units.
    """

    PHYSICAL = "physical"
    NORMALIZED = "normalized"


@dataclass(frozen=True)
class DelaySpec:
    """Delay in samples: one scalar n0 or one value per bin 1..N//2."""

    samples: float | np.ndarray

    def __post_init__(self):
        value = np.atleast_1d(np.asarray(self.samples, dtype=float))
        if value.ndim != 1 or not np.all(np.isfinite(value)):
            raise ValueError("delay values must be finite")
        object.__setattr__(self, "samples", value)

    def per_bin(self, n: int) -> np.ndarray:
        """Delay for each positive bin 1..N//2."""
        n_pos = n // 2
        if self.samples.size == 1:
            return np.full(n_pos, self.samples[0])
        if self.samples.size != n_pos:
            raise ValueError(
                f"per-bin delay needs {n_pos} values for length {n}, "
                f"got {self.samples.size}")
        return self.samples.copy()


@dataclass(frozen=True)
class DifferintegrationOrder:
    """Signed order mu (mu > 0 differentiates, mu < 0 integrates)."""

    mu: float
    scaling: KernelScaling = KernelScaling.PHYSICAL

    def __post_init__(self):
        if not np.isfinite(self.mu):
            raise ValueError("order must be finite")
        object.__setattr__(self, "mu", float(self.mu))


def frac_delay_dft(signal, delay) -> Signal:
    """Delay a real signal by a (possibly fractional) number of samples.

    Applies H[0] = 1, H[k] = 2 exp(-j 2 pi k n_k / N) on positive bins
    below Nyquist, H[N/2] = exp(-j pi n_k) for even N, zero on negative
    bins, then takes the real part of the inverse DFT.  Integer delays
    reduce to exact circular shifts.

    Parameters
    ----------
    signal : Signal or array_like
    delay : DelaySpec, float or array_like
        Scalar delay in samples, or one delay per bin 1..N//2.
    """
    if not isinstance(delay, DelaySpec):
        delay = DelaySpec(delay)
    sig = as_signal(signal)
    x = sig.samples
    n = x.size
    half = n // 2
    n_k = delay.per_bin(n)
    mask = np.zeros(n, dtype=complex)
    mask[0] = 1.0
    if n % 2 == 0:
        k = np.arange(1, half)
        mask[1:half] = 2.0 * np.exp(-2j * np.pi * k * n_k[:half - 1] / n)
        if half >= 1:
            mask[half] = np.exp(-1j * np.pi * n_k[half - 1])
    else:
        k = np.arange(1, half + 1)
        mask[1:half + 1] = 2.0 * np.exp(-2j * np.pi * k * n_k / n)
    spectrum = dft(sig)
    out = idft(replace(spectrum, bins=spectrum.bins * mask))
    return Signal(out.real, sig.sample_rate)


def frac_delay_dct(signal, n0: float) -> Signal:
    """Fractional delay on the DCT-2 symmetric extension.

    Equivalent to :func:`phasekit.phase.pt_dct` with the per-bin delay
    profile alpha_k = pi k n0 / N.  The symmetric extension avoids the
    wrap-around leakage of the DFT route at the signal ends.
    """
    if not np.isfinite(n0):
        raise ValueError("delay must be finite")
    return pt_dct(signal, PhaseProfile.delay(float(n0)))


def frac_differintegrate(signal, order, include_dc_term: bool = True) -> Signal:
    """Fractional derivative (mu > 0) or integral (mu < 0) of a real signal.

    The oscillatory part multiplies positive bins by
    2 (2 pi k / N)^mu e^{j mu pi/2} (Nyquist: pi^mu e^{j mu pi/2}, DC: 0)
    and PHYSICAL scaling adds a sample_rate^mu factor so the bin gain is
    omega_k^mu in rad/s.  The mean a0 contributes
    a0 (n / sample_rate)^{-mu} / Gamma(1 - mu), evaluated with the
    reciprocal gamma so integer derivative orders yield a zero mean term
    instead of overflowing.

    For mu > 0 the mean term diverges at n = 0; that sample's contribution
    is set to zero and a RuntimeWarning is emitted when a0 != 0.
    """
    if not isinstance(order, DifferintegrationOrder):
        order = DifferintegrationOrder(float(order))
    mu = order.mu
    sig = as_signal(signal)
    x = sig.samples
    n = x.size
    half = n // 2
    gain = float(sig.sample_rate) ** mu if order.scaling is KernelScaling.PHYSICAL else 1.0

    mask = np.zeros(n, dtype=complex)
    rotation = np.exp(1j * mu * np.pi / 2.0)
    if n % 2 == 0:
        k = np.arange(1, half)
        mask[1:half] = 2.0 * (2.0 * np.pi * k / n) ** mu * rotation * gain
        if half >= 1:
            mask[half] = np.pi ** mu * rotation * gain
    else:
        k = np.arange(1, half + 1)
        mask[1:half + 1] = 2.0 * (2.0 * np.pi * k / n) ** mu * rotation * gain
    spectrum = dft(sig)
    out = idft(replace(spectrum, bins=spectrum.bins * mask)).real

    if include_dc_term:
        a0 = float(np.mean(x))
        t = np.arange(n) / sig.sample_rate
        dc = np.zeros(n)
        if mu > 0:
            with np.errstate(divide="ignore"):
                dc[1:] = a0 * t[1:] ** (-mu) * rgamma(1.0 - mu)
            # means at the round-off floor are not worth a warning
            if abs(a0) > 64.0 * np.finfo(float).eps * max(1.0, float(np.max(np.abs(x)))):
                warnings.warn(
                    "mean term of a fractional derivative diverges at t = 0; "
                    "that sample's contribution was set to zero",
                    RuntimeWarning, stacklevel=2)
        else:
            dc = a0 * t ** (-mu) * rgamma(1.0 - mu)
        out = out + dc
    return Signal(out, sig.sample_rate)
