"""Tests for the core transforms and the generalized Fourier synthesizer."""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import phasekit as pk
from oracles import (
    dct2_direct,
    dft2d_direct,
    dft_direct,
    idft_direct,
)


class TestDft:
    def test_constant_signal_is_dc_only(self):
        bins = pk.dft([1.0, 1.0, 1.0, 1.0]).bins
        assert np.allclose(bins, [1, 0, 0, 0], atol=1e-15)

    def test_unit_impulse_is_flat(self):
        bins = pk.dft([1.0, 0.0, 0.0, 0.0]).bins
        assert np.allclose(bins, 0.25, atol=1e-15)

    def test_cosine_splits_into_two_half_bins(self):
        # frozen from the direct-summation oracle
        x = np.cos(2 * np.pi * np.arange(8) / 8)
        expected = dft_direct(x)
        assert abs(expected[1] - 0.5) < 1e-12 and abs(expected[7] - 0.5) < 1e-12
        bins = pk.dft(x).bins
        assert np.allclose(bins, expected, atol=1e-12)
        assert abs(bins[1] - 0.5) < 1e-10
        assert abs(bins[7] - 0.5) < 1e-10
        others = np.delete(bins, [1, 7])
        assert np.max(np.abs(others)) < 1e-10

    @pytest.mark.parametrize("n", [8, 17, 127, 256, 512])
    def test_matches_direct_summation(self, n):
        rng = np.random.default_rng(n)
        x = rng.standard_normal(n)
        assert np.max(np.abs(pk.dft(x).bins - dft_direct(x))) < 1e-9

    def test_rejects_empty_input(self):
        with pytest.raises(ValueError):
            pk.dft(np.array([]))

    @given(st.integers(min_value=1, max_value=64), st.integers())
    @settings(max_examples=30, deadline=None)
    def test_real_input_gives_conjugate_symmetric_bins(self, n, seed):
        rng = np.random.default_rng(abs(seed) % 2**32)
        bins = pk.dft(rng.standard_normal(n)).bins
        k = np.arange(1, n)
        assert np.allclose(bins[n - k], np.conj(bins[k]), atol=1e-12)


class TestIdft:
    def test_dc_bin_gives_constant(self):
        spectrum = pk.Spectrum(np.array([1.0, 0, 0, 0], dtype=complex))
        assert np.allclose(pk.idft(spectrum), 1.0, atol=1e-15)

    def test_two_half_bins_give_cosine(self):
        # direct-sum oracle: bins [0, 0.5, 0, 0.5] -> cos(2 pi n / 4) = [1, 0, -1, 0]
        bins = np.array([0.0, 0.5, 0.0, 0.5], dtype=complex)
        assert np.allclose(idft_direct(bins), [1, 0, -1, 0], atol=1e-15)
        assert np.allclose(pk.idft(pk.Spectrum(bins)), [1, 0, -1, 0], atol=1e-12)

    def test_round_trip_1024_random(self):
        rng = np.random.default_rng(3)
        x = rng.standard_normal(1024)
        assert np.max(np.abs(pk.idft(pk.dft(x)) - x)) < 1e-10

    def test_honors_inverse_normalization(self):
        rng = np.random.default_rng(4)
        x = rng.standard_normal(32)
        plain = pk.Spectrum(np.fft.fft(x), pk.Normalization.INVERSE)
        assert np.max(np.abs(pk.idft(plain) - x)) < 1e-10

    def test_rejects_wrong_origin(self):
        spectrum = pk.dct2_forward(pk.Signal(np.ones(8)))
        with pytest.raises(ValueError):
            pk.idft(spectrum)

    def test_rejects_orthonormal_dft_bins(self):
        spectrum = pk.Spectrum(np.ones(4, dtype=complex), pk.Normalization.ORTHONORMAL)
        with pytest.raises(ValueError):
            pk.idft(spectrum)


@pytest.mark.parametrize("n", [1, 2, 7, 64, 257, 1000])
def test_transform_pairs_are_mutual_inverses(n):
    rng = np.random.default_rng(n)
    x = rng.standard_normal(n)
    assert np.max(np.abs(pk.idft(pk.dft(x)) - x)) < 1e-10
    sig = pk.Signal(x, 5.0)
    back = pk.dct2_inverse(pk.dct2_forward(sig))
    assert np.max(np.abs(back.samples - x)) < 1e-10
    assert back.sample_rate == 5.0


class TestDct2:
    def test_constant_concentrates_in_dc(self):
        c, n = 0.7, 16
        bins = pk.dct2_forward(pk.Signal(np.full(n, c))).bins
        assert abs(bins[0] - c * np.sqrt(n)) < 1e-12
        assert np.max(np.abs(bins[1:])) < 1e-12

    def test_single_basis_vector_recovers_single_bin(self):
        n, k0 = 32, 5
        grid = np.arange(n)
        x = np.cos(np.pi * k0 * (2 * grid + 1) / (2 * n))
        expected = dct2_direct(x)
        bins = pk.dct2_forward(pk.Signal(x)).bins
        assert np.max(np.abs(bins - expected)) < 1e-12
        assert abs(bins[k0]) > 1.0
        assert np.max(np.abs(np.delete(bins, k0))) < 1e-10

    def test_parseval_n257(self):
        rng = np.random.default_rng(257)
        x = rng.standard_normal(257)
        bins = pk.dct2_forward(pk.Signal(x)).bins
        assert abs(np.sum(x**2) - np.sum(bins**2)) < 1e-10

    @pytest.mark.parametrize("n", [3, 64, 255, 512])
    def test_matches_direct_summation(self, n):
        rng = np.random.default_rng(n + 1)
        x = rng.standard_normal(n)
        assert np.max(np.abs(pk.dct2_forward(pk.Signal(x)).bins - dct2_direct(x))) < 1e-9

    def test_inverse_rejects_dft_spectrum(self):
        with pytest.raises(ValueError):
            pk.dct2_inverse(pk.dft(np.ones(8)))


class TestDft2d:
    def test_constant_image_is_dc_only(self):
        grid = pk.dft2d(pk.Image(np.full((4, 4), 2.0)))
        assert abs(grid[0, 0] - 2.0) < 1e-14
        grid[0, 0] = 0
        assert np.max(np.abs(grid)) < 1e-14

    def test_impulse_is_flat(self):
        img = np.zeros((4, 4))
        img[0, 0] = 1.0
        grid = pk.dft2d(img)
        assert np.allclose(grid, 1.0 / 16.0, atol=1e-14)

    def test_round_trip_33x17(self):
        rng = np.random.default_rng(33)
        img = rng.standard_normal((33, 17))
        back = pk.idft2d(pk.dft2d(img))
        assert np.max(np.abs(back.pixels - img)) < 1e-10

    def test_matches_direct_summation(self):
        rng = np.random.default_rng(12)
        img = rng.standard_normal((9, 6))
        assert np.max(np.abs(pk.dft2d(img) - dft2d_direct(img))) < 1e-10

    def test_rejects_empty_grid(self):
        with pytest.raises(ValueError):
            pk.dft2d(np.zeros((0, 4)))


class TestAnalyticSignal:
    def test_cosine_becomes_complex_exponential(self):
        n = 16
        theta = 2 * np.pi * np.arange(n) / n
        z = pk.analytic_signal(np.cos(theta))
        assert np.max(np.abs(z - np.exp(1j * theta))) < 1e-10

    def test_constant_stays_real(self):
        z = pk.analytic_signal(np.full(10, 3.25))
        assert np.allclose(z.real, 3.25, atol=1e-12)
        assert np.max(np.abs(z.imag)) < 1e-12

    def test_quadrature_has_zero_mean(self):
        rng = np.random.default_rng(5)
        z = pk.analytic_signal(rng.standard_normal(200))
        assert abs(np.mean(z.imag)) < 1e-12

    @pytest.mark.parametrize("n", [64, 128])
    def test_negative_frequency_bins_vanish(self, n):
        rng = np.random.default_rng(n)
        z = pk.analytic_signal(rng.standard_normal(n))
        bins = pk.dft(z).bins
        assert np.max(np.abs(bins[n // 2 + 1:])) < 1e-10

    def test_real_part_is_input_and_imag_is_hilbert(self):
        rng = np.random.default_rng(6)
        x = rng.standard_normal(101)
        z = pk.analytic_signal(x)
        assert np.max(np.abs(z.real - x)) < 1e-10
        assert np.max(np.abs(z.imag - pk.hilbert(x).samples)) < 1e-10


class TestGfrSynthesize:
    def test_identity_modulation_matches_truncated_idft_resynthesis(self):
        rng = np.random.default_rng(8)
        n, n_harmonics = 101, 12
        fs = 50.0
        x = rng.standard_normal(n)
        sig = pk.Signal(x, fs)
        coeffs = pk.harmonic_series(sig, n_harmonics)
        out = pk.gfr_synthesize(coeffs, pk.ModulationSpec.identity(),
                                n_harmonics, sig.times)
        bins = pk.dft(x).bins
        truncated = bins.copy()
        truncated[n_harmonics + 1:n - n_harmonics] = 0.0
        resynth = pk.idft(pk.Spectrum(truncated)).real
        assert np.max(np.abs(out.samples - resynth)) < 1e-8

    def test_case_fourier_single_harmonic(self):
        t = np.arange(100) / 100.0
        coeffs = pk.FourierSeriesCoeffs(0.5, np.array([2.0]), np.array([0.3]),
                                        2 * np.pi * 3.0)
        out = pk.gfr_synthesize(coeffs, pk.ModulationSpec.identity(), 1, t)
        want = 0.5 + 2.0 * np.cos(2 * np.pi * 3.0 * t + 0.3)
        assert np.max(np.abs(out.samples - want)) < 1e-12

    def test_case_am(self):
        t = np.arange(1000) / 1000.0
        message = lambda tt: 0.4 * np.cos(2 * np.pi * 2.0 * tt)
        coeffs = pk.FourierSeriesCoeffs(1.0, np.array([1.5]), np.array([0.2]),
                                        2 * np.pi * 40.0)
        out = pk.gfr_synthesize(
            coeffs, pk.ModulationSpec.amplitude_modulation(message, bias=1.0), 1, t)
        want = (1.0 + message(t)) * 1.5 * np.cos(2 * np.pi * 40.0 * t + 0.2)
        assert np.max(np.abs(out.samples - want)) < 1e-12

    def test_case_pm(self):
        t = np.arange(1000) / 1000.0
        message = lambda tt: 0.8 * np.sin(2 * np.pi * 1.0 * tt)
        coeffs = pk.FourierSeriesCoeffs(0.0, np.array([1.0]), np.array([0.0]),
                                        2 * np.pi * 40.0)
        out = pk.gfr_synthesize(
            coeffs, pk.ModulationSpec.angle_modulation(message), 1, t)
        want = np.cos(2 * np.pi * 40.0 * t - message(t))
        assert np.max(np.abs(out.samples - want)) < 1e-12

    def test_rejects_non_finite_modulation(self):
        coeffs = pk.FourierSeriesCoeffs(1.0, np.array([1.0]), np.array([0.0]), 1.0)
        bad = pk.ModulationSpec(
            c0=lambda t: np.full_like(t, np.inf),
            alpha0=lambda t: np.zeros_like(t),
            ck=lambda k, t: np.ones_like(t),
            alphak=lambda k, t: np.zeros_like(t))
        with pytest.raises(ValueError):
            pk.gfr_synthesize(coeffs, bad, 1, np.arange(4.0))

    def test_rejects_non_uniform_grid(self):
        coeffs = pk.FourierSeriesCoeffs(1.0, np.array([1.0]), np.array([0.0]), 1.0)
        with pytest.raises(ValueError):
            pk.gfr_synthesize(coeffs, pk.ModulationSpec.identity(), 1,
                              np.array([0.0, 1.0, 3.0]))

    def test_rejects_too_many_harmonics(self):
        coeffs = pk.FourierSeriesCoeffs(1.0, np.array([1.0]), np.array([0.0]), 1.0)
        with pytest.raises(ValueError):
            pk.gfr_synthesize(coeffs, pk.ModulationSpec.identity(), 2, np.arange(4.0))


class TestDomainTypes:
    def test_signal_validation(self):
        with pytest.raises(ValueError):
            pk.Signal(np.array([]))
        with pytest.raises(ValueError):
            pk.Signal(np.array([1.0, np.nan]))
        with pytest.raises(ValueError):
            pk.Signal(np.ones(4), sample_rate=0.0)

    def test_spectrum_validation(self):
        with pytest.raises(ValueError):
            pk.Spectrum(np.ones(3), origin="mdct")
        with pytest.raises(ValueError):
            pk.Spectrum(np.ones(3), normalization="paperish")

    def test_image_validation(self):
        with pytest.raises(ValueError):
            pk.Image(np.ones(3))
        with pytest.raises(ValueError):
            pk.Image(np.array([[1.0, np.inf]]))

    def test_harmonic_series_limits(self):
        sig = pk.Signal(np.ones(10))
        with pytest.raises(ValueError):
            pk.harmonic_series(sig, 5)

    def test_fourier_series_coeffs_validation(self):
        with pytest.raises(ValueError):
            pk.FourierSeriesCoeffs(0.0, np.array([-1.0]), np.array([0.0]), 1.0)
        with pytest.raises(ValueError):
            pk.FourierSeriesCoeffs(0.0, np.array([1.0]), np.array([0.0]), -2.0)
