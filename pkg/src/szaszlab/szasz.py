"""Szasz exponent, weighted Fourier-side functional, and the exact classifier.

The central inequality bounds a power-weighted L_p norm of the Fourier
transform by a Besov or Lizorkin-Triebel quasi-norm,

    ( integral |xi|^(theta p) |F(f)(xi)|^p dxi )^(1/p)  <=  c ||f||,

and scaling forces the weight power to be the Szasz exponent

    theta = s + n - n/p - n/r.

Whether the inequality can hold at all depends only on (s, p, q, r, n) and
the family, through sharp arithmetic conditions on the exponents:

    weak, B-family:  0 < r <= 2  and  0 < q <= p <= r'
    weak, F-family:  0 < r <= 2  and  (r <= p < r'  or  q <= p = r')
    strong gate, B:  s < n/r  or  (s = n/r and q <= 1)
    strong gate, F:  s < n/r  or  (s = n/r and r <= 1)

with strong = weak AND gate.  The same weak conditions characterize the
inhomogeneous variant, where the weight is (1 + |xi|)^(theta p).  The
classifier evaluates these conditions exactly, with infinity-aware
comparison semantics, and records every atomic comparison.

``weighted_lhs`` and ``szasz_ratio`` provide the empirical side: the grid
value of the weighted functional and its ratio against the space norm.  The
constant c is reported, never asserted against a theoretical value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isinf

import numpy as np

from .errors import ParameterError
from .grid import Field, Spectrum, forward_ft, radial_xi
from .spaces import SpaceParams, space_norm

__all__ = [
    "SzaszQuery",
    "ClassificationResult",
    "conjugate_exponent",
    "szasz_exponent",
    "weighted_lhs",
    "classify",
    "szasz_ratio",
    "translation_realization_gate",
]


@dataclass(frozen=True)
class SzaszQuery:
    """A parameter system (s, p, q, r, n) with its space family and setting."""

    space: SpaceParams
    p: float
    n: int

    def __post_init__(self):
        if not self.p > 0:
            raise ParameterError(f"invalid exponent: p must be > 0, got {self.p}")
        if not (isinstance(self.n, int) and self.n >= 1):
            raise ParameterError(f"invalid params: n must be a positive integer, got {self.n}")

    @property
    def theta(self) -> float:
        return szasz_exponent(self.space.s, self.p, self.space.r, self.n)


@dataclass(frozen=True)
class ClassificationResult:
    """Classifier verdict for one query.

    ``verdict_trace`` lists every atomic condition with its truth value;
    ``strong`` implies ``weak`` by construction.
    """

    theta: float
    weak: bool
    strong: bool
    verdict_trace: tuple = field(default_factory=tuple)

    def to_record(self) -> dict:
        rec = {"theta": self.theta, "weak": self.weak, "strong": self.strong}
        rec["verdict_trace"] = ";".join(
            f"{name}={'pass' if ok else 'fail'}" for name, ok in self.verdict_trace
        )
        return rec


def conjugate_exponent(r: float) -> float:
    """Conjugate exponent: r/(r-1) for 1 < r <= inf, inf for 0 < r <= 1."""
    if not r > 0:
        raise ParameterError(f"invalid exponent: r must be > 0, got {r}")
    if isinf(r):
        return 1.0
    if r <= 1.0:
        return np.inf
    return r / (r - 1.0)


def szasz_exponent(s: float, p: float, r: float, n: int) -> float:
    """theta = s + n - n/p - n/r, with n/inf = 0."""
    if not p > 0 or not r > 0:
        raise ParameterError(f"invalid exponent: p, r must be > 0, got p={p}, r={r}")
    return s + n - (0.0 if isinf(p) else n / p) - (0.0 if isinf(r) else n / r)


def weighted_lhs(g: Spectrum, theta: float, p: float, mode: str = "homogeneous") -> float:
    """Weighted L_p functional of a spectrum.

    Homogeneous mode: (sum_{k != 0} |xi_k|^(theta p) |coeffs[k]|^p dxi^n)^(1/p),
    the k = 0 bin excluded (never evaluated, so negative theta is safe).
    Inhomogeneous mode: the weight is (1 + |xi_k|)^(theta p) over all bins.
    p = inf takes the supremum of the weighted modulus instead.
    """
    if not p > 0:
        raise ParameterError(f"invalid exponent: p must be > 0, got {p}")
    if mode not in ("homogeneous", "inhomogeneous"):
        raise ParameterError(f"invalid params: unknown mode {mode!r}")
    grid = g.grid
    r = radial_xi(grid)
    a = np.abs(g.coeffs)
    if mode == "homogeneous":
        keep = r > 0.0
        weighted = r[keep] ** theta * a[keep]
    else:
        weighted = (1.0 + r).ravel() ** theta * a.ravel()
    if isinf(p):
        return float(weighted.max()) if weighted.size else 0.0
    return float(np.sum(weighted**p) * grid.dxi**grid.n) ** (1.0 / p)


def _weak_conditions(query: SzaszQuery) -> tuple[bool, list]:
    s, r, q = query.space.s, query.space.r, query.space.q
    p = query.p
    rp = conjugate_exponent(r)
    trace = [("r<=2", bool(r <= 2.0))]
    if query.space.family == "B":
        cond = bool(q <= p <= rp)
        trace.append(("q<=p<=r'", cond))
    else:
        left = bool(r <= p < rp)
        right = bool(q <= p and p == rp)
        trace.append(("r<=p<r'", left))
        trace.append(("q<=p=r'", right))
        cond = left or right
    return trace[0][1] and cond, trace


def translation_realization_gate(s: float, r: float, q: float, n: int, family: str) -> tuple[bool, list]:
    """Condition for a translation-commuting realization, with its trace.

    B-family: s < n/r or (s = n/r and q <= 1).
    F-family: s < n/r or (s = n/r and r <= 1).
    """
    n_over_r = 0.0 if isinf(r) else n / r
    below = bool(s < n_over_r)
    at = bool(s == n_over_r)
    trace = [("s<n/r", below)]
    if family == "B":
        edge = bool(at and q <= 1.0)
        trace.append(("s=n/r&q<=1", edge))
    else:
        edge = bool(at and r <= 1.0)
        trace.append(("s=n/r&r<=1", edge))
    return below or edge, trace


def classify(query: SzaszQuery) -> ClassificationResult:
    """Exact weak/strong verdicts for a parameter system.

    The weak verdict applies equally to the homogeneous and inhomogeneous
    settings; the strong verdict adds the realization gate.  All comparisons
    are infinity-aware: p <= r' holds for every p when r' = inf, and q <= p
    with q = inf requires p = inf.
    """
    weak, trace = _weak_conditions(query)
    gate, gate_trace = translation_realization_gate(
        query.space.s, query.space.r, query.space.q, query.n, query.space.family
    )
    return ClassificationResult(
        theta=query.theta,
        weak=weak,
        strong=weak and gate,
        verdict_trace=tuple(trace + gate_trace),
    )


def szasz_ratio(f: Field, query: SzaszQuery) -> float:
    """Empirical constant: weighted_lhs(F(f)) / space_norm(f) for one field.

    Raises:
        ZeroDivisionError: "zero denominator" when the space norm underflows.
    """
    mode = query.space.setting
    denom = space_norm(f, query.space)
    if denom <= 0.0 or not np.isfinite(denom):
        raise ZeroDivisionError(f"zero denominator: space norm is {denom}")
    lhs = weighted_lhs(forward_ft(f), query.theta, query.p, mode)
    return lhs / denom
