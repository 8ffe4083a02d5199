"""Besov and Lizorkin-Triebel quasi-norms and the dyadic scaling law.

For a field with spectrum inside a single plateau window the norms reduce
to closed forms; under x -> x/2^m every homogeneous norm scales by
2^(m(n/r - s)), which pins the Szasz exponent via the matching scaling of
the weighted Fourier functional.
"""

import numpy as np

from szaszlab import (
    Field,
    GridSpec,
    SpaceParams,
    Spectrum,
    besov_norm,
    dyadic_dilate,
    inverse_ft,
    lr_quasinorm,
    triebel_norm,
)

grid = GridSpec(1, 2**14, 16.0 * np.pi)
r = np.abs(grid.xi_axis())

# smooth bump inside the level-4 plateau {12 <= |xi| <= 16}
t = np.clip((r / 16.0 - 0.76) / 0.23, 0.0, 1.0)
prof = np.where((t > 0) & (t < 1), np.exp(-1.0 / np.maximum(t * (1 - t), 1e-300)), 0.0)
f = inverse_ft(Spectrum(grid, prof.astype(complex)))

print("single-band field at level 4:")
for s, rr, q in [(0.0, 2.0, 2.0), (0.7, 2.0, 2.0), (-0.4, 1.5, 3.0)]:
    b = besov_norm(f, SpaceParams(s, rr, q, "B"))
    print(f"  besov (s={s}, r={rr}, q={q}): {b:.6f}  "
          f"(= 2^(4s) L_r norm: {2.0**(4*s) * lr_quasinorm(f, rr):.6f})")

print("\nF-family equals B-family when q = r:")
pB, pF = SpaceParams(0.4, 2.0, 2.0, "B"), SpaceParams(0.4, 2.0, 2.0, "F")
print(f"  besov {besov_norm(f, pB):.12f}   triebel {triebel_norm(f, pF):.12f}")

print("\nmonotone in q (fixed s, r):")
for q in (0.5, 1.0, 2.0, np.inf):
    print(f"  q={q}: {besov_norm(f, SpaceParams(0.3, 2.0, q, 'B')):.6f}")

# scaling law on a wide box with a Gaussian wave packet at level -3
wide = GridSpec(1, 2**18, 2.0**12 * 2 * np.pi)
x = wide.x_axis()
packet = Field(wide, np.exp(-((x / 400.0) ** 2)) * np.cos(0.109 * x))
params = SpaceParams(0.6, 1.7, 2.3, "B")
base = besov_norm(packet, params)
print(f"\ndyadic scaling law (s=0.6, r=1.7): predicted factor 2^(m(1/r - s))")
for m in (-2, -1, 0, 1, 2):
    got = besov_norm(dyadic_dilate(packet, m), params)
    predicted = 2.0 ** (m * (1 / 1.7 - 0.6))
    print(f"  m={m:+d}: measured {got/base:.6f}   predicted {predicted:.6f}")
