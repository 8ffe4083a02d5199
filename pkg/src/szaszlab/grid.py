"""Periodic grid model and the discrete approximation of the Fourier transform.

A function on R^n is represented by its samples on a uniform grid over the
box [-L/2, L/2)^n with N points per axis.  Its continuous Fourier transform

    F(f)(xi) = integral f(x) exp(-i x.xi) dx      (angular frequency)

is approximated by the Riemann sum over the samples, evaluated at the grid
frequencies xi_k = (2*pi/L) * k for centered integer multi-indices
k in [-N/2, N/2)^n.  With that convention the FFT computes the sum exactly,
so ``inverse_ft(forward_ft(f)) == f`` up to roundoff, and for functions that
decay inside the box the coefficients converge superalgebraically to the
continuum transform.

Dyadic dilations f(x / 2^m) and grid-aligned translations are provided as
exact grid operations; they are the only dilations/translations that commute
with the dyadic Littlewood-Paley ladder built on top of this module.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import scipy.fft as _fft

from .errors import BandError, ModelFidelityWarning, ParameterError

__all__ = [
    "GridSpec",
    "Field",
    "Spectrum",
    "forward_ft",
    "inverse_ft",
    "dyadic_dilate",
    "grid_translate",
    "radial_xi",
    "boundary_decay_ratio",
]

#: fields should sit below this fraction of their peak near the box boundary
#: for the periodic model to faithfully represent a function on R^n
BOUNDARY_TOL = 1e-12

#: width of the boundary shell checked by :func:`boundary_decay_ratio`,
#: as a fraction of the box side
BOUNDARY_MARGIN = 0.05


@dataclass(frozen=True)
class GridSpec:
    """Uniform periodic sampling grid on [-L/2, L/2)^n.

    Attributes:
        n: spatial dimension, 1 or 2.
        N: samples per axis; a power of two, at least 16.
        L: box side length (spatial units), strictly positive.
    """

    n: int
    N: int
    L: float

    def __post_init__(self):
        if self.n not in (1, 2):
            raise ParameterError(f"dimension n must be 1 or 2, got {self.n}")
        if self.N < 16 or (self.N & (self.N - 1)) != 0:
            raise ParameterError(f"N must be a power of two >= 16, got {self.N}")
        if not (self.L > 0 and math.isfinite(self.L)):
            raise ParameterError(f"L must be a positive real, got {self.L}")

    @property
    def dx(self) -> float:
        """Grid spacing L / N."""
        return self.L / self.N

    @property
    def dxi(self) -> float:
        """Frequency spacing 2*pi / L."""
        return 2.0 * np.pi / self.L

    @property
    def xi_max(self) -> float:
        """Nyquist frequency pi * N / L."""
        return np.pi * self.N / self.L

    @property
    def shape(self) -> tuple:
        return (self.N,) * self.n

    @property
    def center(self) -> int:
        """Array index of x = 0 (and of xi = 0 on the spectral side)."""
        return self.N // 2

    def x_axis(self) -> np.ndarray:
        """Sample coordinates along one axis, x_i = (i - N/2) * dx."""
        return (np.arange(self.N) - self.center) * self.dx

    def xi_axis(self) -> np.ndarray:
        """Grid frequencies along one axis, xi_k = (k - N/2) * dxi."""
        return (np.arange(self.N) - self.center) * self.dxi


@dataclass(frozen=True)
class Field:
    """Complex samples of a function on a :class:`GridSpec`."""

    grid: GridSpec
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.complex128)
        if v.shape != self.grid.shape:
            raise ParameterError(
                f"field shape {v.shape} does not match grid shape {self.grid.shape}"
            )
        object.__setattr__(self, "values", v)


@dataclass(frozen=True)
class Spectrum:
    """Centered Fourier coefficients of a field.

    ``coeffs[k]`` (multi-index k relative to the array center) approximates
    F(f)(xi_k).  The entry at the center approximates F(f)(0); consumers with
    homogeneous-weight semantics must exclude it.
    """

    grid: GridSpec
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=np.complex128)
        if c.shape != self.grid.shape:
            raise ParameterError(
                f"spectrum shape {c.shape} does not match grid shape {self.grid.shape}"
            )
        object.__setattr__(self, "coeffs", c)


@lru_cache(maxsize=8)
def _radial_xi_cached(grid: GridSpec) -> np.ndarray:
    ax = grid.xi_axis()
    if grid.n == 1:
        r = np.abs(ax)
    else:
        r = np.sqrt(ax[:, None] ** 2 + ax[None, :] ** 2)
    r.setflags(write=False)
    return r


def radial_xi(grid: GridSpec) -> np.ndarray:
    """|xi| at every spectral bin (Euclidean norm in n = 2). Read-only array."""
    return _radial_xi_cached(grid)


def forward_ft(f: Field) -> Spectrum:
    """Discrete approximation of F(f)(xi) = integral f(x) exp(-i x.xi) dx.

    Computed as (L/N)^n * sum_i f(x_i) exp(-i x_i . xi_k) via an FFT with
    centered index bookkeeping.
    """
    g = f.grid
    c = _fft.fftshift(_fft.fftn(_fft.ifftshift(f.values), workers=-1))
    c *= g.dx**g.n
    return Spectrum(g, c)


def inverse_ft(s: Spectrum) -> Field:
    """Exact discrete inverse of :func:`forward_ft` (identity up to roundoff)."""
    g = s.grid
    v = _fft.fftshift(_fft.ifftn(_fft.ifftshift(s.coeffs), workers=-1))
    v /= g.dx**g.n
    return Field(g, v)


def boundary_decay_ratio(f: Field) -> float:
    """Largest |f| within 5% of the box boundary, relative to the peak.

    The periodic model represents a function on R^n faithfully only when
    this ratio is tiny (below ``BOUNDARY_TOL`` by convention).  Returns 0.0
    for the zero field.
    """
    g = f.grid
    peak = float(np.max(np.abs(f.values)))
    if peak == 0.0:
        return 0.0
    margin = max(1, int(round(BOUNDARY_MARGIN * g.N)))
    mask_1d = np.zeros(g.N, dtype=bool)
    mask_1d[:margin] = True
    mask_1d[-margin:] = True
    if g.n == 1:
        shell = mask_1d
    else:
        shell = mask_1d[:, None] | mask_1d[None, :]
    return float(np.max(np.abs(f.values[shell]))) / peak


def warn_if_boundary_mass(f: Field, context: str) -> None:
    """Emit a ModelFidelityWarning when a field does not decay in the box."""
    ratio = boundary_decay_ratio(f)
    if ratio > BOUNDARY_TOL:
        warnings.warn(
            f"{context}: field is {ratio:.2e} of its peak near the box boundary "
            f"(tolerance {BOUNDARY_TOL:.0e}); periodization error may not be "
            "subdominant",
            ModelFidelityWarning,
            stacklevel=3,
        )


def _axis_indices(grid: GridSpec) -> np.ndarray:
    return np.arange(grid.N) - grid.center


def dyadic_dilate(f: Field, m: int) -> Field:
    """Samples of x -> f(x / 2^m) on the same grid.

    For m <= 0 the result is an exact spectral zoom (a stride read of the
    periodic samples; the spectrum spreads to bins 2^|m| * k).  For m > 0 the
    samples are obtained by trigonometric resampling of the band-limited
    interpolant, so F(h f)(xi) = 2^(mn) F(f)(2^m xi) within tolerance.

    Raises:
        BandError: when the dilated spectrum would cross the Nyquist limit
            (m < 0) or the dilated support would reach the box boundary
            (m > 0).
    """
    g = f.grid
    m = int(m)
    if m == 0:
        return Field(g, f.values.copy())
    if m < 0:
        _check_spectral_headroom(f, -m)
        # stride read; source points outside the box read the function as 0,
        # not its periodization
        t = 2 ** (-m) * _axis_indices(g)
        inside = np.abs(t) < g.N // 2
        idx = np.where(inside, t + g.center, 0)
        if g.n == 1:
            vals = np.where(inside, f.values[idx], 0.0)
        else:
            vals = f.values[np.ix_(idx, idx)] * (inside[:, None] & inside[None, :])
        return Field(g, vals)
    _check_spatial_headroom(f, m)
    vals = f.values
    for axis in range(g.n):
        vals = _resample_axis(vals, g, m, axis)
    return Field(g, vals)


def _check_spectral_headroom(f: Field, mm: int) -> None:
    """m < 0 spreads the spectrum by 2^mm; it must stay below Nyquist."""
    s = forward_ft(f)
    peak = float(np.max(np.abs(s.coeffs)))
    if peak == 0.0:
        return
    g = f.grid
    keep = g.N // (2 ** (mm + 1))
    outside_1d = np.abs(_axis_indices(g)) >= keep
    if g.n == 1:
        outside = outside_1d
    else:
        outside = outside_1d[:, None] | outside_1d[None, :]
    leaked = float(np.max(np.abs(s.coeffs[outside]))) if outside.any() else 0.0
    if leaked > 1e-12 * peak:
        raise BandError(
            f"dilation escapes grid: spectrum at {leaked/peak:.2e} of peak "
            f"beyond |xi| = xi_max / 2^{mm}"
        )


def _check_spatial_headroom(f: Field, m: int) -> None:
    """m > 0 spreads the support by 2^m; f must vanish outside the shrunk box."""
    g = f.grid
    peak = float(np.max(np.abs(f.values)))
    if peak == 0.0:
        return
    half_keep = 0.95 * g.L / 2 ** (m + 1)
    x = np.abs(g.x_axis())
    outside_1d = x >= half_keep
    if g.n == 1:
        outside = outside_1d
    else:
        outside = outside_1d[:, None] | outside_1d[None, :]
    leaked = float(np.max(np.abs(f.values[outside]))) if outside.any() else 0.0
    if leaked > 1e-12 * peak:
        raise BandError(
            f"dilation escapes grid: field at {leaked/peak:.2e} of peak "
            f"outside |x| = 0.95 L / 2^{m + 1}"
        )


def _resample_axis(vals: np.ndarray, g: GridSpec, m: int, axis: int) -> np.ndarray:
    """Evaluate the trigonometric interpolant at x / 2^m along one axis."""
    step = 2**m
    t = _axis_indices(g)
    coarse = t // step + g.center
    frac = t % step
    xi = _fft.ifftshift(g.xi_axis())
    spec = _fft.fft(_fft.ifftshift(vals, axes=axis), axis=axis, workers=-1)
    out = np.empty_like(vals)
    shape = [1] * vals.ndim
    shape[axis] = g.N
    xi_b = xi.reshape(shape)
    for b in range(step):
        delta = b * g.dx / step
        shifted = _fft.fftshift(
            _fft.ifft(spec * np.exp(1j * xi_b * delta), axis=axis, workers=-1),
            axes=axis,
        )
        sel = np.nonzero(frac == b)[0]
        src = coarse[sel]
        out_idx = [slice(None)] * vals.ndim
        src_idx = [slice(None)] * vals.ndim
        out_idx[axis] = sel
        src_idx[axis] = src
        out[tuple(out_idx)] = shifted[tuple(src_idx)]
    return out


def grid_translate(f: Field, a) -> Field:
    """Translate f by a grid-aligned offset: samples of x -> f(x - a).

    ``a`` gives the offset per axis in spatial units and must be an integer
    multiple of the grid spacing (the model is periodic, so the shift is
    circular).

    Raises:
        BandError: for offsets that do not land on the grid.
    """
    g = f.grid
    a = np.atleast_1d(np.asarray(a, dtype=float))
    if a.shape != (g.n,):
        raise ParameterError(
            f"offset must have {g.n} component(s), got shape {a.shape}"
        )
    steps = a / g.dx
    rounded = np.round(steps)
    if np.max(np.abs(steps - rounded)) > 1e-9 * max(1.0, float(np.max(np.abs(steps)))):
        raise BandError(f"non-grid shift: offset {a} is not a multiple of dx = {g.dx}")
    shifts = tuple(int(s) for s in rounded)
    return Field(g, np.roll(f.values, shifts, axis=tuple(range(g.n))))
