"""Transform fidelity, dilations and translations against closed-form oracles."""

import numpy as np
import pytest

from szaszlab import (
    BandError,
    Field,
    GridSpec,
    ParameterError,
    Spectrum,
    boundary_decay_ratio,
    dyadic_dilate,
    forward_ft,
    grid_translate,
    inverse_ft,
)

from conftest import wave_packet


class TestGridSpec:
    def test_derived_quantities(self, grid_1d):
        assert grid_1d.dx == pytest.approx(64.0 / 4096)
        assert grid_1d.dxi == pytest.approx(2 * np.pi / 64.0)
        assert grid_1d.xi_max == pytest.approx(np.pi * 4096 / 64.0)
        assert grid_1d.dx > 0 and grid_1d.dxi > 0 and grid_1d.xi_max > 0

    @pytest.mark.parametrize(
        "n,N,L", [(3, 64, 1.0), (1, 100, 1.0), (1, 8, 1.0), (1, 64, -2.0), (1, 64, 0.0)]
    )
    def test_rejects_bad_specs(self, n, N, L):
        with pytest.raises(ParameterError):
            GridSpec(n, N, L)

    def test_field_shape_checked(self, grid_1d):
        with pytest.raises(ParameterError):
            Field(grid_1d, np.zeros(7))
        with pytest.raises(ParameterError):
            Spectrum(grid_1d, np.zeros((4096, 2)))


class TestForwardFT:
    def test_zero_field(self, grid_1d):
        s = forward_ft(Field(grid_1d, np.zeros(4096)))
        assert np.all(s.coeffs == 0)

    def test_gaussian_closed_form(self, grid_1d):
        x = grid_1d.x_axis()
        s = forward_ft(Field(grid_1d, np.exp(-(x**2) / 2)))
        xi = grid_1d.xi_axis()
        exact = np.sqrt(2 * np.pi) * np.exp(-(xi**2) / 2)
        assert np.max(np.abs(s.coeffs - exact)) < 1e-8

    def test_round_trip(self, grid_1d):
        rng = np.random.default_rng(0)
        f = Field(grid_1d, rng.standard_normal(4096) + 1j * rng.standard_normal(4096))
        back = inverse_ft(forward_ft(f))
        assert np.max(np.abs(back.values - f.values)) < 1e-10 * np.max(np.abs(f.values))

    def test_linearity(self, grid_1d):
        rng = np.random.default_rng(1)
        f = Field(grid_1d, rng.standard_normal(4096))
        g = Field(grid_1d, rng.standard_normal(4096))
        lhs = forward_ft(Field(grid_1d, 2.5 * f.values - 1j * g.values)).coeffs
        rhs = 2.5 * forward_ft(f).coeffs - 1j * forward_ft(g).coeffs
        assert np.max(np.abs(lhs - rhs)) < 1e-12 * max(1.0, np.max(np.abs(rhs)))

    def test_round_trip_2d(self, grid_2d):
        rng = np.random.default_rng(2)
        f = Field(grid_2d, rng.standard_normal(grid_2d.shape))
        back = inverse_ft(forward_ft(f))
        assert np.max(np.abs(back.values - f.values)) < 1e-12


class TestInverseFT:
    def test_zero_spectrum(self, grid_1d):
        f = inverse_ft(Spectrum(grid_1d, np.zeros(4096)))
        assert np.all(f.values == 0)

    def test_single_bin_matches_direct_sum(self):
        # oracle: evaluate the inverse transform by explicit summation
        g = GridSpec(1, 16, 4.0)
        k = 3  # center-relative bin
        coeffs = np.zeros(16, dtype=complex)
        coeffs[g.center + k] = 1.0
        f = inverse_ft(Spectrum(g, coeffs))
        x = g.x_axis()
        xi = g.xi_axis()
        direct = np.zeros(16, dtype=complex)
        for i in range(16):
            direct[i] = np.sum(coeffs * np.exp(1j * x[i] * xi)) * g.dxi / (2 * np.pi)
        assert np.max(np.abs(f.values - direct)) < 1e-14
        assert np.max(np.abs(np.abs(f.values) - np.abs(f.values[0]))) < 1e-14

    def test_plane_wave_constant_modulus(self, grid_1d):
        coeffs = np.zeros(4096, dtype=complex)
        coeffs[grid_1d.center + 100] = 2.0
        f = inverse_ft(Spectrum(grid_1d, coeffs))
        mods = np.abs(f.values)
        assert np.max(mods) - np.min(mods) < 1e-12 * np.max(mods)


class TestDyadicDilate:
    def test_identity(self, grid_1d):
        x = grid_1d.x_axis()
        f = Field(grid_1d, np.exp(-(x**2) / 2))
        d = dyadic_dilate(f, 0)
        assert np.array_equal(d.values, f.values)
        assert d.values is not f.values

    def test_gaussian_stretch(self, grid_1d):
        x = grid_1d.x_axis()
        f = Field(grid_1d, np.exp(-(x**2) / 2))
        d = dyadic_dilate(f, 1)
        assert np.max(np.abs(d.values - np.exp(-(x**2) / 8))) < 1e-8

    def test_gaussian_shrink(self, grid_1d):
        x = grid_1d.x_axis()
        f = Field(grid_1d, np.exp(-(x**2) / 2))
        d = dyadic_dilate(f, -1)
        assert np.max(np.abs(d.values - np.exp(-2 * x**2))) < 1e-8

    def test_spectrum_scaling_relation(self, grid_1d):
        x = grid_1d.x_axis()
        xi = grid_1d.xi_axis()
        f = Field(grid_1d, np.exp(-(x**2) / 2))
        s = forward_ft(dyadic_dilate(f, 1))
        expected = 2.0 * np.sqrt(2 * np.pi) * np.exp(-((2 * xi) ** 2) / 2)
        assert np.max(np.abs(s.coeffs - expected)) < 1e-8

    def test_two_dimensional(self, grid_2d):
        X, Y = np.meshgrid(grid_2d.x_axis(), grid_2d.x_axis(), indexing="ij")
        f = Field(grid_2d, np.exp(-(X**2 + Y**2) / 2))
        d = dyadic_dilate(f, 1)
        assert np.max(np.abs(d.values - np.exp(-(X**2 + Y**2) / 8))) < 1e-8

    def test_support_escape_raises(self, grid_1d):
        x = grid_1d.x_axis()
        f = Field(grid_1d, np.exp(-(x**2) / 50.0))  # wide: fills a quarter box
        with pytest.raises(BandError, match="dilation escapes grid"):
            dyadic_dilate(f, 3)

    def test_band_escape_raises(self, grid_1d):
        f = wave_packet(grid_1d, 40.0, 4.0)  # spectrum near xi = 40
        with pytest.raises(BandError, match="dilation escapes grid"):
            dyadic_dilate(f, -3)


class TestGridTranslate:
    def test_identity_and_full_period(self, grid_1d):
        rng = np.random.default_rng(3)
        f = Field(grid_1d, rng.standard_normal(4096))
        assert np.array_equal(grid_translate(f, 0.0).values, f.values)
        assert np.array_equal(grid_translate(f, grid_1d.L).values, f.values)

    def test_shift_moves_samples(self, grid_1d):
        rng = np.random.default_rng(4)
        f = Field(grid_1d, rng.standard_normal(4096))
        t = grid_translate(f, 5 * grid_1d.dx)
        assert np.array_equal(t.values, np.roll(f.values, 5))

    def test_modulus_of_spectrum_preserved(self, grid_1d):
        rng = np.random.default_rng(5)
        f = Field(grid_1d, rng.standard_normal(4096) + 1j * rng.standard_normal(4096))
        t = grid_translate(f, 17 * grid_1d.dx)
        a = np.abs(forward_ft(t).coeffs)
        b = np.abs(forward_ft(f).coeffs)
        assert np.max(np.abs(a - b)) < 1e-12 * np.max(b)

    def test_non_grid_shift_raises(self, grid_1d):
        f = Field(grid_1d, np.zeros(4096))
        with pytest.raises(BandError, match="non-grid shift"):
            grid_translate(f, 0.3 * grid_1d.dx)

    def test_two_dimensional_shift(self, grid_2d):
        rng = np.random.default_rng(6)
        f = Field(grid_2d, rng.standard_normal(grid_2d.shape))
        t = grid_translate(f, (3 * grid_2d.dx, -2 * grid_2d.dx))
        assert np.array_equal(t.values, np.roll(f.values, (3, -2), axis=(0, 1)))


class TestBoundaryDecay:
    def test_gaussian_is_negligible_at_boundary(self, grid_1d):
        x = grid_1d.x_axis()
        f = Field(grid_1d, np.exp(-(x**2) / 2))
        assert boundary_decay_ratio(f) < 1e-12

    def test_constant_field_is_not(self, grid_1d):
        f = Field(grid_1d, np.ones(4096))
        assert boundary_decay_ratio(f) == pytest.approx(1.0)
