"""The exact weak/strong classifier over notable parameter systems.

weak (B): 0 < r <= 2 and 0 < q <= p <= r'
weak (F): 0 < r <= 2 and (r <= p < r' or q <= p = r')
strong  : weak plus the realization gate, s < n/r (or the critical edge
          s = n/r with q <= 1 for B, r <= 1 for F).
"""

import numpy as np

from szaszlab import SpaceParams, SzaszQuery, classify, conjugate_exponent, szasz_exponent

CASES = [
    ("plancherel",            "B", 0.0, 2.0, 2.0, 2.0),
    ("classical szasz",       "B", 1/6, 2.0, 1.5, 1.5),
    ("absolute convergence",  "B", 2/3, 1.5, 1.0, 1.0),
    ("sup-norm endpoint",     "B", 0.0, 1.0, np.inf, np.inf),
    ("hardy-type (F)",        "F", 0.0, 1.5, 1.5, 2.0),
    ("r too large",           "B", 0.0, 3.0, 2.0, 2.0),
    ("F boundary, q large",   "F", 0.0, 2.0, 2.0, 4.0),
    ("summability mismatch",  "B", 0.0, 2.0, 2.0, 3.0),
    ("supercritical s",       "B", 2.0, 2.0, 2.0, 2.0),
    ("critical s, q <= 1",    "B", 0.5, 2.0, 2.0, 1.0),
    ("critical s, q > 1",     "B", 0.5, 2.0, 2.0, 2.0),
    ("critical s, r <= 1 (F)", "F", 1.0, 1.0, 2.0, 3.0),
]

print(f"{'case':24s} {'family':6s} {'theta':>7s} {'r_conj':>7s} {'weak':>5s} {'strong':>6s}")
for name, fam, s, r, p, q in CASES:
    res = classify(SzaszQuery(SpaceParams(s, r, q, fam), p, 1))
    rc = conjugate_exponent(r)
    print(f"{name:24s} {fam:6s} {res.theta:7.3f} {rc:7.3g} {str(res.weak):>5s} {str(res.strong):>6s}")

print("\nverdict trace for the F boundary case:")
res = classify(SzaszQuery(SpaceParams(0.0, 2.0, 4.0, "F"), 2.0, 1))
for cond, ok in res.verdict_trace:
    print(f"  {cond:12s} {'pass' if ok else 'fail'}")

print("\ntheta is forced by scaling: theta = s + n - n/p - n/r")
for s, p, r, n in [(0.0, 2.0, 2.0, 1), (0.0, 1.5, 1.5, 1), (1.0, np.inf, np.inf, 2)]:
    print(f"  s={s}, p={p}, r={r}, n={n}: theta = {szasz_exponent(s, p, r, n):+.4f}")
