"""Counterexample witness families and divergence/boundedness experiments.

Three families drive the sharpness demonstrations, each built directly in
the spectral domain so that supports are exact on the grid:

* ``modulated_witness``: partial sums sum_k a_k e^(i nu_k x_1) phi(x) with
  nu_k the grid-rounded frequency 2^k and phi a smooth low-pass bump, so
  term k occupies the annulus C_k = {3/4 * 2^k <= |xi| <= 5/4 * 2^k}.  With
  weights a_k = k 2^(-k theta) the space norm converges while the weighted
  Fourier functional grows, refuting the inequality when p > r'; with
  a_k = k^(-1/p) 2^(-k theta) the growth is harmonic, refuting the F-case
  boundary p = r' < q.
* ``dilated_witness``: low-frequency dilations of an annulus bump psi with
  coefficients k^(-1/p) 2^(k(s - n/r)), putting term k inside C_(-k) with
  space-norm summand k^(-1/p) and weighted-functional contribution k^(-1)
  per annulus: the harmonic series diverges whenever p < q.
* ``lowfreq_blowup_witness``: geometrically weighted low-frequency sums
  whose space norm stays Cauchy while the low-frequency Fourier mass grows
  geometrically, separating the weak property from the strong one when
  s > n/r.

``random_bandlimited`` supplies generic positive-case fields: seeded random
smooth spectra confined to the plateau {3/4 * 2^j <= |xi| <= 2^j} of each
dyadic level (where the level multiplier is identically 1), with equal
spectral mass per level so that ratio sequences stay flat for admissible
parameter systems.

Grid presets
------------

======== ========= ============== ============= ================= =========================
name     N         L              dxi           xi_max            feasible band
======== ========= ============== ============= ================= =========================
hi-band  2^21      16 pi          1/8           131072            j in [0, 16]
lo-band  2^20      2^14 * 2 pi    2^-14         32                j in [-11, 4]
mid-band 2^14      16 pi          1/8           1024              j in [0, 9]
======== ========= ============== ============= ================= =========================

hi-band resolves the modulation annuli C_k up to k = 16 while keeping at
least 9 bins across the low-pass ball |xi| <= 1/2; lo-band resolves the
dilation annuli C_(-k) down to k = 11; mid-band is a fast preset for demos
and cheap positive-case sampling.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isinf

import numpy as np

from .errors import BandError, ExperimentAbort, ParameterError
from .grid import Field, GridSpec, Spectrum, forward_ft, inverse_ft, radial_xi
from .littlewood_paley import KAPPA, SAFETY, _mollifier_step, feasible_band, lowpass_profile
from .spaces import lr_quasinorm, space_norm
from .szasz import SzaszQuery, weighted_lhs

__all__ = [
    "GRID_PRESETS",
    "WitnessSpec",
    "ExperimentRecord",
    "bump_lowpass_phi",
    "annulus_psi",
    "modulated_witness",
    "dilated_witness",
    "lowfreq_blowup_witness",
    "random_bandlimited",
    "divergence_experiment",
    "resolve_grid",
]

GRID_PRESETS: dict[str, GridSpec] = {
    "hi-band": GridSpec(n=1, N=2**21, L=16.0 * np.pi),
    "lo-band": GridSpec(n=1, N=2**20, L=2.0**14 * 2.0 * np.pi),
    "mid-band": GridSpec(n=1, N=2**14, L=16.0 * np.pi),
}

WITNESS_KINDS = (
    "modulated",
    "modulated_borderline",
    "dilated_low",
    "random_bandlimited",
    "lowfreq_blowup",
)

#: default grid preset per witness kind
_KIND_PRESET = {
    "modulated": "hi-band",
    "modulated_borderline": "hi-band",
    "random_bandlimited": "lo-band",
    "dilated_low": "lo-band",
    "lowfreq_blowup": "lo-band",
}


def resolve_grid(grid) -> GridSpec:
    """Accept a GridSpec or a preset name."""
    if isinstance(grid, GridSpec):
        return grid
    try:
        return GRID_PRESETS[grid]
    except KeyError:
        raise ParameterError(
            f"unknown grid preset {grid!r}; known: {sorted(GRID_PRESETS)}"
        ) from None


@dataclass(frozen=True)
class WitnessSpec:
    """Construction request for one witness partial sum."""

    kind: str
    K: int
    query: SzaszQuery
    seed: int = 0

    def __post_init__(self):
        if self.kind not in WITNESS_KINDS:
            raise ParameterError(f"invalid params: unknown witness kind {self.kind!r}")
        if self.K < 0:
            raise ParameterError(f"invalid params: K must be >= 0, got {self.K}")


@dataclass(frozen=True)
class ExperimentRecord:
    """One row of a divergence/boundedness experiment."""

    size: int
    space_norm: float
    lhs: float
    ratio: float

    def to_row(self) -> tuple:
        return (self.size, self.space_norm, self.lhs, self.ratio)


def _count_bins_within(grid: GridSpec, radius: float) -> int:
    return int(np.count_nonzero(radial_xi(grid) <= radius))


def _unit_l2_spectrum(grid: GridSpec, prof: np.ndarray) -> np.ndarray:
    """Scale a spectral profile so the field has unit L2 norm (Parseval)."""
    mass = np.sum(np.abs(prof) ** 2) * grid.dxi**grid.n / (2.0 * np.pi) ** grid.n
    if mass <= 0.0:
        raise ParameterError("cannot normalize an empty spectrum")
    return prof / np.sqrt(mass)


def _phi_hat(grid: GridSpec) -> np.ndarray:
    """Smooth radial bump supported in |xi| <= 1/2, unit spatial L2 norm."""
    if _count_bins_within(grid, 0.5) < 8:
        raise BandError(
            f"grid too coarse: only {_count_bins_within(grid, 0.5)} bins resolve |xi| <= 1/2"
        )
    prof = lowpass_profile(3.0 * radial_xi(grid)).astype(np.complex128)
    return _unit_l2_spectrum(grid, prof)


def _psi_hat_profile(t: np.ndarray) -> np.ndarray:
    """Radial annulus bump: supported on 3/4 <= t <= 5/4, peak 1 at t = 1."""
    return _mollifier_step(4.0 * t - 3.0) * _mollifier_step(5.0 - 4.0 * t)


def _psi_norm_constant(grid: GridSpec) -> float:
    """Scale making the C_0 annulus bump a unit-L2 field on this grid."""
    r = radial_xi(grid)
    inside = np.count_nonzero((r >= 0.75) & (r <= 1.25))
    if inside < 8:
        raise BandError(f"grid too coarse: only {inside} bins resolve the annulus C_0")
    prof = _psi_hat_profile(r)
    mass = np.sum(prof**2) * grid.dxi**grid.n / (2.0 * np.pi) ** grid.n
    return 1.0 / np.sqrt(mass)


def _psi_hat(grid: GridSpec) -> np.ndarray:
    """Smooth radial bump supported in C_0, unit spatial L2 norm."""
    return _psi_norm_constant(grid) * _psi_hat_profile(radial_xi(grid)).astype(np.complex128)


def bump_lowpass_phi(grid: GridSpec) -> Field:
    """Real field whose spectrum is a smooth bump in the ball |xi| <= 1/2."""
    f = inverse_ft(Spectrum(grid, _phi_hat(grid)))
    return Field(grid, f.values.real.astype(np.complex128))


def annulus_psi(grid: GridSpec) -> Field:
    """Real field whose spectrum is a smooth radial bump supported in C_0."""
    f = inverse_ft(Spectrum(grid, _psi_hat(grid)))
    return Field(grid, f.values.real.astype(np.complex128))


def _modulation_weights(kind: str, K: int, theta: float, p: float) -> np.ndarray:
    k = np.arange(1, K + 1, dtype=float)
    if kind == "linear":
        amp = k
    elif kind == "inverse_root":
        amp = k ** (-(0.0 if isinf(p) else 1.0 / p))
    else:
        raise ParameterError(f"invalid params: unknown weights {kind!r}")
    return amp * 2.0 ** (-k * theta)


def modulated_witness(grid, spec: WitnessSpec, weights: str = "linear") -> Field:
    """Partial sum sum_{k=1..K} a_k e^(i nu_k x_1) phi(x).

    nu_k is 2^k rounded to the nearest grid frequency, so term k's spectrum
    sits exactly inside the annulus C_k.  ``weights`` chooses
    a_k = k 2^(-k theta) ("linear") or a_k = k^(-1/p) 2^(-k theta)
    ("inverse_root"), with theta the Szasz exponent of ``spec.query``.

    Raises:
        BandError: "K exceeds band" when C_K would cross the Nyquist margin.
    """
    grid = resolve_grid(grid)
    K = spec.K
    if K > 0 and 1.25 * 2.0**K > SAFETY * grid.xi_max:
        raise BandError(
            f"K exceeds band: annulus C_{K} needs 5/4*2^K <= {SAFETY} * xi_max"
        )
    out = np.zeros(grid.shape, dtype=np.complex128)
    if K == 0:
        return Field(grid, out)
    phi_hat = _phi_hat(grid)
    amps = _modulation_weights(weights, K, spec.query.theta, spec.query.p)
    for k in range(1, K + 1):
        shift = int(round(2.0**k / grid.dxi))
        out += amps[k - 1] * np.roll(phi_hat, shift, axis=0)
    return inverse_ft(Spectrum(grid, out))


def dilated_witness(grid, spec: WitnessSpec) -> Field:
    """Partial sum sum_{k=1..K} k^(-1/p) 2^(k(s - n/r)) psi(x / 2^k).

    Term k has spectrum exactly inside C_(-k); in the continuum model its
    space-norm summand at level -k is k^(-1/p) times ||psi||_r and its
    contribution to the weighted functional's p-th power is proportional to
    k^(-1).

    Raises:
        BandError: "K exceeds low band" when C_(-K) is not resolvable.
    """
    grid = resolve_grid(grid)
    K = spec.K
    if K > 0 and 0.75 * 2.0 ** (-K) < KAPPA * grid.dxi:
        raise BandError(
            f"K exceeds low band: annulus C_-{K} needs 3/4*2^-K >= {KAPPA} * dxi"
        )
    out = np.zeros(grid.shape, dtype=np.complex128)
    if K == 0:
        return Field(grid, out)
    q = spec.query
    n = grid.n
    n_over_r = 0.0 if isinf(q.space.r) else n / q.space.r
    inv_p = 0.0 if isinf(q.p) else 1.0 / q.p
    r = radial_xi(grid)
    unit = _psi_norm_constant(grid)  # also validates C_0 resolution
    for k in range(1, K + 1):
        c_k = k ** (-inv_p) * 2.0 ** (k * (q.space.s - n_over_r))
        out += (c_k * 2.0 ** (k * n) * unit) * _psi_hat_profile(2.0**k * r)
    return inverse_ft(Spectrum(grid, out))


def lowfreq_blowup_witness(grid, M: int, s: float, r: float) -> Field:
    """Low-frequency sum whose norm is Cauchy but whose Fourier mass blows up.

    Term k (spectrum in C_(-k)) is scaled so its space-norm summand at level
    -k is exactly 2^(-k(s - n/r)/2) on the grid; the low-frequency L1 mass
    of the spectrum then grows like sum_k 2^(+k(s - n/r)/2), i.e.
    geometrically in the truncation M.  Requires s > n/r, the regime where
    no translation-commuting realization exists.

    Raises:
        ParameterError: when s <= n/r.
        BandError: "M exceeds low band" when C_(-M) is not resolvable.
    """
    grid = resolve_grid(grid)
    n = grid.n
    n_over_r = 0.0 if isinf(r) else n / r
    if not s > n_over_r:
        raise ParameterError(f"invalid params: needs s > n/r, got s={s}, n/r={n_over_r}")
    if M > 0 and 0.75 * 2.0 ** (-M) < KAPPA * grid.dxi:
        raise BandError(
            f"M exceeds low band: annulus C_-{M} needs 3/4*2^-M >= {KAPPA} * dxi"
        )
    out = np.zeros(grid.shape, dtype=np.complex128)
    if M == 0:
        return Field(grid, out)
    rad = radial_xi(grid)
    for k in range(1, M + 1):
        raw = _psi_hat_profile(2.0**k * rad).astype(np.complex128)
        piece = inverse_ft(Spectrum(grid, raw))
        norm_r = lr_quasinorm(piece, r)
        target = 2.0 ** (-k * (s - n_over_r) / 2.0)
        b_k = target * 2.0 ** (k * s) / norm_r
        out += b_k * raw
    return inverse_ft(Spectrum(grid, out))


def random_bandlimited(grid, seed: int, j_lo: int, j_hi: int) -> Field:
    """Seeded random smooth field with spectrum in dyadic plateau windows.

    Each level j in [j_lo, j_hi] carries a smooth random modulation of a
    bump supported in {3/4 * 2^j <= |xi| <= 2^j}, where the level-j
    Littlewood-Paley multiplier is identically 1, and every level is scaled
    to equal spectral mass.  The result is normalized to unit L2 norm and is
    a deterministic function of the seed.

    Raises:
        BandError: when [j_lo, j_hi] is not inside the feasible band.
    """
    grid = resolve_grid(grid)
    band = feasible_band(grid)
    if j_lo > j_hi or j_lo not in band or j_hi not in band:
        raise BandError(
            f"levels [{j_lo}, {j_hi}] not inside feasible band [{band.j_min}, {band.j_max}]"
        )
    rng = np.random.default_rng(seed)
    rad = radial_xi(grid)
    out = np.zeros(grid.shape, dtype=np.complex128)
    n_modes = 4
    for j in range(j_lo, j_hi + 1):
        t = rad / 2.0**j
        idx = np.nonzero((t > 0.75) & (t < 1.0))
        window = _mollifier_step(16.0 * (t[idx] - 0.75)) * _mollifier_step(
            16.0 * (1.0 - t[idx])
        )
        u = (t[idx] - 0.75) * 4.0
        coeff = rng.standard_normal(n_modes) + 1j * rng.standard_normal(n_modes)
        modulation = np.zeros(window.shape, dtype=np.complex128)
        for d in range(n_modes):
            modulation += coeff[d] / (1.0 + d) * np.exp(2j * np.pi * d * u)
        level = window * modulation
        mass = np.sum(np.abs(level) ** 2) * grid.dxi**grid.n
        if mass > 0.0:
            out[idx] += level / np.sqrt(mass)
    f = inverse_ft(Spectrum(grid, out))
    norm = lr_quasinorm(f, 2.0)
    if norm == 0.0:
        return f
    return Field(grid, f.values / norm)


def _build_witness(kind: str, query: SzaszQuery, size: int, grid: GridSpec, seed: int) -> Field:
    if kind == "modulated":
        return modulated_witness(grid, WitnessSpec(kind, size, query, seed), "linear")
    if kind == "modulated_borderline":
        return modulated_witness(grid, WitnessSpec(kind, size, query, seed), "inverse_root")
    if kind == "dilated_low":
        return dilated_witness(grid, WitnessSpec(kind, size, query, seed))
    if kind == "lowfreq_blowup":
        return lowfreq_blowup_witness(grid, size, query.space.s, query.space.r)
    if kind == "random_bandlimited":
        band = feasible_band(grid)
        j_hi = band.j_max
        j_lo = j_hi - size + 1
        return random_bandlimited(grid, seed, j_lo, j_hi)
    raise ParameterError(f"invalid params: unknown witness kind {kind!r}")


def divergence_experiment(kind: str, query: SzaszQuery, sizes, grid=None, seed: int = 0) -> list:
    """Evaluate space norm, weighted functional and their ratio per size.

    Returns one :class:`ExperimentRecord` per entry of ``sizes``, in input
    order.  A failure partway through raises :class:`ExperimentAbort`
    carrying the records computed so far.
    """
    if kind not in WITNESS_KINDS:
        raise ParameterError(f"invalid params: unknown witness kind {kind!r}")
    grid = resolve_grid(grid if grid is not None else _KIND_PRESET[kind])
    records: list[ExperimentRecord] = []
    mode = query.space.setting
    for size in sizes:
        try:
            f = _build_witness(kind, query, int(size), grid, seed)
            norm = space_norm(f, query.space)
            lhs = weighted_lhs(forward_ft(f), query.theta, query.p, mode)
            ratio = lhs / norm if norm > 0.0 else float("nan")
        except (BandError, ParameterError, ZeroDivisionError) as exc:
            raise ExperimentAbort(f"size {size}: {exc}", records) from exc
        records.append(ExperimentRecord(int(size), norm, lhs, ratio))
    return records
