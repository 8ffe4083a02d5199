"""Tour of the grid model and the discrete Fourier transform approximation.

A function on R^n is sampled on [-L/2, L/2)^n; its continuous transform
F(f)(xi) = integral f(x) exp(-i x.xi) dx is approximated on the centered
frequency lattice.  Dyadic dilations and grid translations are exact
operations in this model.
"""

import numpy as np

from szaszlab import Field, GridSpec, dyadic_dilate, forward_ft, grid_translate, inverse_ft

grid = GridSpec(n=1, N=4096, L=64.0)
print(f"grid: N={grid.N}, L={grid.L}, dx={grid.dx:.4f}, dxi={grid.dxi:.4f}, "
      f"nyquist={grid.xi_max:.1f}")

x = grid.x_axis()
gaussian = Field(grid, np.exp(-(x**2) / 2))

spectrum = forward_ft(gaussian)
xi = grid.xi_axis()
exact = np.sqrt(2 * np.pi) * np.exp(-(xi**2) / 2)
print(f"gaussian transform vs closed form: max error "
      f"{np.max(np.abs(spectrum.coeffs - exact)):.2e}")

back = inverse_ft(spectrum)
print(f"round trip error: {np.max(np.abs(back.values - gaussian.values)):.2e}")

stretched = dyadic_dilate(gaussian, 1)   # f(x/2)
squeezed = dyadic_dilate(gaussian, -1)   # f(2x)
print(f"dilation m=+1 vs exp(-x^2/8):  {np.max(np.abs(stretched.values - np.exp(-(x**2)/8))):.2e}")
print(f"dilation m=-1 vs exp(-2x^2):   {np.max(np.abs(squeezed.values - np.exp(-2*x**2))):.2e}")

shifted = grid_translate(gaussian, 8.0)
peak_at = x[np.argmax(np.abs(shifted.values))]
print(f"translate by 8.0: peak moved to x = {peak_at}")
mod_change = np.max(np.abs(np.abs(forward_ft(shifted).coeffs) - np.abs(spectrum.coeffs)))
print(f"translation leaves |F(f)| unchanged: max change {mod_change:.2e}")
