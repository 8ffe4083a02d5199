"""Sharpness demonstrations: ratio sequences that diverge exactly when the
classifier says the estimate fails, and stay flat when it holds.

Three witness families (small grids here; the acceptance suite runs the
production presets):

* modulated partial sums refute p > r' (ratio grows polynomially),
* low-frequency dilated sums refute p < q (harmonic-series growth),
* random band-limited fields certify the positive cases (flat ratios).
"""

import numpy as np

from szaszlab import GridSpec, SpaceParams, SzaszQuery, classify, divergence_experiment

hi_small = GridSpec(1, 2**16, 16.0 * np.pi)     # modulation annuli up to C_11
wide = GridSpec(1, 2**18, 2.0**12 * 2 * np.pi)  # dilation annuli down to C_-9


def show(title, kind, query, sizes, grid, seed=0):
    verdict = classify(query)
    print(f"\n{title}")
    print(f"  weak verdict: {verdict.weak} (theta = {verdict.theta:+.3f})")
    records = divergence_experiment(kind, query, sizes, grid=grid, seed=seed)
    print(f"  {'K':>4s} {'space norm':>12s} {'weighted lhs':>12s} {'ratio':>10s}")
    for rec in records:
        print(f"  {rec.size:4d} {rec.space_norm:12.6f} {rec.lhs:12.6f} {rec.ratio:10.4f}")
    growth = records[-1].ratio / records[0].ratio
    print(f"  ratio growth over the sweep: {growth:.3f}")


show(
    "modulated witness, p > r' (estimate fails; ratio grows like K^(1+1/p))",
    "modulated",
    SzaszQuery(SpaceParams(0.0, 2.0, 4.0, "B"), 4.0, 1),
    [2, 4, 8],
    hi_small,
)

show(
    "dilated witness, p < q (estimate fails; harmonic-series growth)",
    "dilated_low",
    SzaszQuery(SpaceParams(0.0, 2.0, 2.0, "B"), 1.0, 1),
    [2, 4, 8],
    wide,
)

show(
    "borderline F-case p = r' < q (estimate fails; slow harmonic growth)",
    "modulated_borderline",
    SzaszQuery(SpaceParams(0.0, 2.0, 4.0, "F"), 2.0, 1),
    [4, 8],
    hi_small,
)

show(
    "random band-limited fields on an admissible system (ratio stays flat)",
    "random_bandlimited",
    SzaszQuery(SpaceParams(0.0, 2.0, 2.0, "B"), 2.0, 1),
    [2, 4, 8],
    GridSpec(1, 2**14, 16.0 * np.pi),
    seed=7,
)
