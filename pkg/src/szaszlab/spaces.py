"""Besov and Lizorkin-Triebel quasi-norms from Littlewood-Paley pieces.

For the homogeneous spaces the norm combines the dyadic pieces Q_j f over
the grid's feasible band,

    B-family:  ( sum_j (2^(js) ||Q_j f||_r)^q )^(1/q)
    F-family:  || ( sum_j (2^(js) |Q_j f|)^q )^(1/q) ||_r

with supremum semantics when q or r is infinite (r < infinity in the
F-case).  The k = 0 Fourier bin is discarded in the homogeneous setting: on
a periodic grid that single bin is the only remnant of the "modulo
polynomials" ambiguity of the continuum spaces.  The inhomogeneous variants
replace the levels j < 1 by a single smooth low-pass piece S_0 f.

Quadrature is the plain Riemann sum on the uniform grid, which is accurate
superalgebraically for the smooth decaying fields this package works with.
For r < 1 or q < 1 the same formulas produce quasi-norms; nothing here
assumes the triangle inequality.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import isfinite, isinf

import numpy as np

from .errors import ModelFidelityWarning, ParameterError
from .grid import Field, Spectrum, forward_ft, inverse_ft, radial_xi, warn_if_boundary_mass
from .littlewood_paley import BandLimits, apply_level_mask, feasible_band, lowpass_profile

__all__ = ["SpaceParams", "lr_quasinorm", "besov_norm", "triebel_norm", "space_norm"]

#: relative spectral mass allowed outside the feasible band before a
#: truncation warning is issued
OUT_OF_BAND_TOL = 1e-10


@dataclass(frozen=True)
class SpaceParams:
    """Parameters (s, r, q) of a Besov or Lizorkin-Triebel space.

    Attributes:
        s: smoothness, any finite real.
        r: integrability exponent in (0, inf]; finite in the F-case.
        q: summability exponent in (0, inf].
        family: "B" (Besov) or "F" (Lizorkin-Triebel).
        setting: "homogeneous" or "inhomogeneous".
    """

    s: float
    r: float
    q: float
    family: str = "B"
    setting: str = "homogeneous"

    def __post_init__(self):
        if not isfinite(self.s):
            raise ParameterError(f"invalid params: s must be finite, got {self.s}")
        for name, value in (("r", self.r), ("q", self.q)):
            if not value > 0:
                raise ParameterError(f"invalid params: {name} must be > 0, got {value}")
        if self.family not in ("B", "F"):
            raise ParameterError(f"invalid params: family must be B or F, got {self.family!r}")
        if self.setting not in ("homogeneous", "inhomogeneous"):
            raise ParameterError(
                f"invalid params: setting must be homogeneous or inhomogeneous, got {self.setting!r}"
            )
        if self.family == "F" and isinf(self.r):
            raise ParameterError("r=inf unsupported in F-case")

    @property
    def homogeneous(self) -> bool:
        return self.setting == "homogeneous"


def lr_quasinorm(f: Field, r: float) -> float:
    """L_r quasi-norm of a sampled field, (sum |f(x_i)|^r dx^n)^(1/r).

    r = inf uses the grid maximum of |f|.

    Raises:
        ParameterError: "invalid exponent" for r <= 0.
    """
    if not r > 0:
        raise ParameterError(f"invalid exponent: r must be > 0, got {r}")
    a = np.abs(f.values)
    if isinf(r):
        return float(a.max())
    g = f.grid
    return float(np.sum(a**r) * g.dx**g.n) ** (1.0 / r)


def _ell_q(values: np.ndarray, q: float) -> float:
    """l_q combination of a finite nonnegative sequence (max for q = inf)."""
    if values.size == 0:
        return 0.0
    if isinf(q):
        return float(values.max())
    return float(np.sum(values**q)) ** (1.0 / q)


def _prepared_spectrum(f: Field, params: SpaceParams) -> tuple[Spectrum, BandLimits]:
    """Forward transform plus the model-fidelity validations shared by norms."""
    g = f.grid
    band = feasible_band(g)
    s = forward_ft(f)
    coeffs = s.coeffs.copy()
    if params.homogeneous:
        coeffs[(g.center,) * g.n] = 0.0

    r = radial_xi(g)
    covered = r <= band.cover_hi
    if params.homogeneous:
        covered &= r >= band.cover_lo
        covered |= r == 0.0  # the discarded bin is not "leaked" mass
    total = float(np.sum(np.abs(s.coeffs)))
    if total > 0.0:
        outside = float(np.sum(np.abs(coeffs[~covered])))
        if outside > OUT_OF_BAND_TOL * total:
            warnings.warn(
                f"spectral mass {outside/total:.2e} of total lies outside the "
                f"feasible band's annuli; the truncated norm misses it",
                ModelFidelityWarning,
                stacklevel=3,
            )
    warn_if_boundary_mass(f, "space norm")
    return Spectrum(g, coeffs), band


def _norm_levels(params: SpaceParams, band) -> list[int]:
    if params.homogeneous:
        return list(band.levels())
    return [j for j in band.levels() if j >= 1]


def _lowpass_piece(spec: Spectrum) -> np.ndarray:
    g = spec.grid
    masked = spec.coeffs * lowpass_profile(radial_xi(g))
    return inverse_ft(Spectrum(g, masked)).values


def besov_norm(f: Field, params: SpaceParams) -> float:
    """Besov quasi-norm of a sampled field.

    Homogeneous: l_q over the feasible band of 2^(js) ||Q_j f||_r, with the
    k = 0 bin discarded.  Inhomogeneous: ||S_0 f||_r joins the l_q sum with
    the levels j >= 1.

    Raises:
        ParameterError: "invalid params" when params.family != "B".
    """
    if params.family != "B":
        raise ParameterError(f"invalid params: besov_norm needs family B, got {params.family}")
    spec, band = _prepared_spectrum(f, params)
    g = f.grid
    summands = []
    if not params.homogeneous:
        summands.append(lr_quasinorm(Field(g, _lowpass_piece(spec)), params.r))
    for j in _norm_levels(params, band):
        masked = apply_level_mask(spec.coeffs, g, j)
        if not masked.any():
            summands.append(0.0)
            continue
        piece = inverse_ft(Spectrum(g, masked))
        summands.append(2.0 ** (j * params.s) * lr_quasinorm(piece, params.r))
    return _ell_q(np.asarray(summands), params.q)


def triebel_norm(f: Field, params: SpaceParams) -> float:
    """Lizorkin-Triebel quasi-norm of a sampled field.

    The l_q sum over levels is taken pointwise on the grid before the L_r
    quadrature.  Requires r < inf.

    Raises:
        ParameterError: "invalid params" / "r=inf unsupported in F-case".
    """
    if params.family != "F":
        raise ParameterError(f"invalid params: triebel_norm needs family F, got {params.family}")
    if isinf(params.r):
        raise ParameterError("r=inf unsupported in F-case")
    spec, band = _prepared_spectrum(f, params)
    g = f.grid
    q = params.q

    acc = np.zeros(g.shape)
    for j in _norm_levels(params, band):
        masked = apply_level_mask(spec.coeffs, g, j)
        if not masked.any():
            continue
        piece = np.abs(inverse_ft(Spectrum(g, masked)).values)
        piece *= 2.0 ** (j * params.s)
        if isinf(q):
            np.maximum(acc, piece, out=acc)
        else:
            acc += piece**q
    if not params.homogeneous:
        piece = np.abs(_lowpass_piece(spec))
        if isinf(q):
            np.maximum(acc, piece, out=acc)
        else:
            acc += piece**q
    pointwise = acc if isinf(q) else acc ** (1.0 / q)
    return lr_quasinorm(Field(g, pointwise), params.r)


def space_norm(f: Field, params: SpaceParams) -> float:
    """Dispatch to :func:`besov_norm` or :func:`triebel_norm` by family."""
    if params.family == "B":
        return besov_norm(f, params)
    return triebel_norm(f, params)
