"""Realizations: partial sums of dyadic pieces and the low-frequency mass test.

A space admits a translation-commuting realization exactly when the
low-frequency Fourier mass integral_{0<|xi|<=R} |F(u)| is uniformly
controlled by the norm.  Below the critical smoothness s = n/r the mass of
the partial-sum realization converges; above it, a witness family keeps its
norm essentially fixed while the mass grows geometrically.
"""

import numpy as np

from szaszlab import (
    GridSpec,
    SpaceParams,
    SzaszQuery,
    WitnessSpec,
    besov_norm,
    dilated_witness,
    low_frequency_mass,
    lowfreq_blowup_witness,
    realization_feasible,
    sigma0_partial,
)

wide = GridSpec(1, 2**18, 2.0**12 * 2 * np.pi)

print("feasibility of a translation-commuting realization:")
for fam, s, r, q in [("B", 0.0, 2.0, 2.0), ("B", 0.5, 2.0, 1.0), ("B", 0.5, 2.0, 2.0),
                     ("F", 1.0, 1.0, 0.5), ("B", 2.0, 2.0, 2.0)]:
    query = SzaszQuery(SpaceParams(s, r, q, fam), 2.0, 1)
    print(f"  {fam}, s={s}, r={r}, q={q}: {realization_feasible(query)}")

print("\nsubcritical field (s = 0 regime): partial-sum mass converges")
query = SzaszQuery(SpaceParams(0.0, 2.0, 2.0, "B"), 1.0, 1)
field = dilated_witness(wide, WitnessSpec("dilated_low", 5, query))
previous = None
for M in range(2, 9):
    mass = low_frequency_mass(sigma0_partial(field, M), 1.0)
    step = "" if previous is None else f"   increment {abs(mass - previous):.2e}"
    print(f"  M={M}: mass {mass:.8f}{step}")
    previous = mass

print("\nsupercritical witnesses (s = 2 > n/r): mass blows up, norm stalls")
params = SpaceParams(2.0, 2.0, 2.0, "B")
for M in range(2, 8):
    w = lowfreq_blowup_witness(wide, M, 2.0, 2.0)
    print(f"  M={M}: mass {low_frequency_mass(w, 1.0):9.3f}   "
          f"besov norm {besov_norm(w, params):.6f}")
