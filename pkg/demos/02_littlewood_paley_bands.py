"""Littlewood-Paley machinery: the annulus profile, feasible bands, projections.

The generator gamma is supported on 1/2 <= |t| <= 3/2, equals 1 on
[3/4, 1], and its dyadic translates tile the frequency axis: on every grid
the translates indexed by the feasible band sum to 1 exactly over the
covered frequencies.
"""

import numpy as np

from szaszlab import (
    GRID_PRESETS,
    GridSpec,
    Spectrum,
    feasible_band,
    gamma_profile,
    inverse_ft,
    lp_project,
    radial_xi,
)

print("profile samples:")
for t in (0.4, 0.5, 0.75, 0.9, 1.0, 1.2, 1.5):
    print(f"  gamma({t}) = {gamma_profile(t):.6f}")

print("\nfeasible bands of the presets:")
for name, grid in GRID_PRESETS.items():
    band = feasible_band(grid)
    print(f"  {name:9s}: N=2^{int(np.log2(grid.N))}, dxi={grid.dxi:.3g}, "
          f"levels [{band.j_min}, {band.j_max}]")

grid = GridSpec(1, 2**14, 16.0 * np.pi)
band = feasible_band(grid)
r = radial_xi(grid)
total = sum(gamma_profile(r / 2.0**j) for j in band.levels())
covered = (r >= band.unity_lo) & (r <= band.unity_hi)
print(f"\npartition of unity on the demo grid: max deviation "
      f"{np.max(np.abs(total[covered] - 1.0)):.2e} over {covered.sum()} bins")

# a field with two separated dyadic bands splits cleanly
spec = np.zeros(grid.shape, dtype=complex)
spec[(r > 6.2) & (r < 7.8)] = 1.0       # inside level 3
spec[(r > 49.0) & (r < 63.0)] = 0.5     # inside level 6
f = inverse_ft(Spectrum(grid, spec))
for j in band.levels():
    piece = lp_project(f, j)
    energy = float(np.sum(np.abs(piece.values) ** 2) * grid.dx)
    if energy > 1e-20:
        print(f"  level {j}: energy {energy:.6f}")
