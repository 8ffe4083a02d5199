"""Littlewood-Paley multipliers and dyadic band projections.

The decomposition is built from one smooth radial profile gamma supported on
the annulus 1/2 <= |t| <= 3/2 with the telescoping property

    sum_j gamma(2^-j t) = 1   for every t != 0,

realized as gamma(t) = phi(t) - phi(2t) where phi is a mollifier-based
low-pass profile (1 on |t| <= 1, 0 on |t| >= 3/2).  The projection Q_j
multiplies the spectrum by gamma(2^-j |xi|), so the j-th piece lives exactly
on the annulus 2^(j-1) <= |xi| <= 3 * 2^(j-1) and gamma is identically 1 on
3/4 * 2^j <= |xi| <= 2^j.

On a finite grid only finitely many levels are resolvable; ``feasible_band``
returns the dyadic levels whose annuli fit between the frequency resolution
(at least KAPPA bins across the lowest annulus) and a safety margin below
the Nyquist frequency.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import BandError
from .grid import Field, GridSpec, Spectrum, forward_ft, inverse_ft, radial_xi

__all__ = [
    "KAPPA",
    "SAFETY",
    "lowpass_profile",
    "gamma_profile",
    "BandLimits",
    "feasible_band",
    "lp_mask",
    "lp_project",
    "apply_level_mask",
]

#: minimum number of frequency bins across the lowest resolvable annulus
KAPPA = 4.0

#: fraction of the Nyquist frequency usable before aliasing concerns
SAFETY = 0.9


def _mollifier_step(x):
    """Smooth step: 0 for x <= 0, 1 for x >= 1, e^(-1/x)-ratio in between."""
    x = np.asarray(x, dtype=float)
    lo = x <= 0.0
    hi = x >= 1.0
    mid = ~(lo | hi)
    out = np.zeros_like(x)
    out[hi] = 1.0
    xm = x[mid]
    a = np.exp(-1.0 / xm)
    b = np.exp(-1.0 / (1.0 - xm))
    out[mid] = a / (a + b)
    return out


def lowpass_profile(t):
    """Smooth low-pass profile: 1 for |t| <= 1, 0 for |t| >= 3/2.

    The transition on (1, 3/2) is the mollifier ratio step, so the profile is
    infinitely smooth with values in [0, 1].  Accepts scalars or arrays.
    """
    t = np.abs(np.asarray(t, dtype=float))
    out = _mollifier_step(3.0 - 2.0 * t)
    if out.ndim == 0:
        return float(out)
    return out


def gamma_profile(t):
    """Annulus profile gamma(t) = phi(|t|) - phi(2|t|).

    Supported on 1/2 <= |t| <= 3/2, identically 1 on 3/4 <= |t| <= 1, and the
    dyadic translates gamma(2^-j t) sum to 1 for every t != 0.
    """
    t = np.abs(np.asarray(t, dtype=float))
    out = _mollifier_step(3.0 - 2.0 * t) - _mollifier_step(3.0 - 4.0 * t)
    if out.ndim == 0:
        return float(out)
    return out


@dataclass(frozen=True)
class BandLimits:
    """Range of dyadic levels j resolvable on a grid (inclusive)."""

    j_min: int
    j_max: int

    def __post_init__(self):
        if self.j_min > self.j_max:
            raise BandError(f"empty band: j_min={self.j_min} > j_max={self.j_max}")

    def levels(self) -> range:
        return range(self.j_min, self.j_max + 1)

    def __contains__(self, j: int) -> bool:
        return self.j_min <= j <= self.j_max

    @property
    def cover_lo(self) -> float:
        """Lowest frequency covered by the annuli of the band."""
        return 2.0 ** (self.j_min - 1)

    @property
    def cover_hi(self) -> float:
        """Highest frequency covered by the annuli of the band."""
        return 3.0 * 2.0 ** (self.j_max - 1)

    @property
    def unity_lo(self) -> float:
        """Low end of the interval where the band's gamma sum is exactly 1."""
        return 3.0 * 2.0 ** (self.j_min - 2)

    @property
    def unity_hi(self) -> float:
        """High end of the interval where the band's gamma sum is exactly 1."""
        return 2.0**self.j_max


def feasible_band(grid: GridSpec) -> BandLimits:
    """Dyadic levels whose annuli fit on the grid.

    j_max is the largest j with 3 * 2^(j-1) <= SAFETY * xi_max and j_min the
    smallest j with 2^(j-1) >= KAPPA * dxi.

    Raises:
        BandError: "grid too coarse" when no level satisfies both.
    """
    hi = SAFETY * grid.xi_max / 3.0
    j_max = math.floor(math.log2(hi)) + 1
    while 3.0 * 2.0 ** (j_max - 1) > SAFETY * grid.xi_max:
        j_max -= 1
    while 3.0 * 2.0**j_max <= SAFETY * grid.xi_max:
        j_max += 1

    lo = KAPPA * grid.dxi
    j_min = math.ceil(math.log2(lo)) + 1
    while 2.0 ** (j_min - 1) < KAPPA * grid.dxi:
        j_min += 1
    while 2.0 ** (j_min - 2) >= KAPPA * grid.dxi:
        j_min -= 1

    if j_min > j_max:
        raise BandError(
            f"grid too coarse: needs j_min={j_min} <= j_max={j_max} "
            f"(dxi={grid.dxi:.4g}, xi_max={grid.xi_max:.4g})"
        )
    return BandLimits(j_min, j_max)


@lru_cache(maxsize=256)
def _annulus_window_1d(grid: GridSpec, j: int):
    """Mask values of level j on the nonzero bins of a 1-d grid.

    Returns (k_lo, values) where the mask is ``values`` on bins
    k_lo..k_lo+len-1 (positive side, center-relative) and mirrored on the
    negative side; it vanishes elsewhere by construction.
    """
    scale = 2.0**j
    k_lo = max(1, math.floor(0.5 * scale / grid.dxi))
    k_hi = min(grid.N // 2 - 1, math.ceil(1.5 * scale / grid.dxi))
    if k_hi < k_lo:
        return k_lo, np.zeros(0)
    xi = np.arange(k_lo, k_hi + 1) * grid.dxi
    vals = gamma_profile(xi / scale)
    vals.setflags(write=False)
    return k_lo, vals


def lp_mask(grid: GridSpec, j: int) -> np.ndarray:
    """Spectral multiplier gamma(2^-j |xi|) evaluated at every grid bin."""
    return np.asarray(gamma_profile(radial_xi(grid) / 2.0**j))


def apply_level_mask(coeffs: np.ndarray, grid: GridSpec, j: int) -> np.ndarray:
    """coeffs * gamma(2^-j |xi|) with exact zeros outside the annulus.

    The 1-d path touches only the annulus bins, which keeps repeated norm
    evaluations on large grids cheap.
    """
    if grid.n == 1:
        out = np.zeros_like(coeffs)
        c = grid.center
        k_lo, vals = _annulus_window_1d(grid, j)
        w = len(vals)
        if w:
            out[c + k_lo : c + k_lo + w] = coeffs[c + k_lo : c + k_lo + w] * vals
            out[c - k_lo - w + 1 : c - k_lo + 1] = (
                coeffs[c - k_lo - w + 1 : c - k_lo + 1] * vals[::-1]
            )
        return out
    return coeffs * lp_mask(grid, j)


def lp_project(f: Field, j: int) -> Field:
    """Littlewood-Paley piece Q_j f (spectrum masked by level-j gamma).

    The result's spectrum vanishes exactly outside
    2^(j-1) <= |xi| <= 3 * 2^(j-1).

    Raises:
        BandError: "level out of band" when j is not resolvable on f's grid.
    """
    band = feasible_band(f.grid)
    if j not in band:
        raise BandError(
            f"level out of band: j={j} not in [{band.j_min}, {band.j_max}]"
        )
    s = forward_ft(f)
    return inverse_ft(Spectrum(f.grid, apply_level_mask(s.coeffs, f.grid, j)))
