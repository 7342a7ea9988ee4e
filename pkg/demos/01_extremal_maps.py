"""
Extremal maps and the distortion bounds
=======================================

The order-alpha extremal map attains the upper modulus bounds along the
positive axis.  The |g| lower bound does not survive contact with the map
f1, whose g factor is simply 1 - z.
"""

import numpy as np

from logharmonic import bounds, lhmap, repgen
from logharmonic.repgen import DiscreteMeasure

# %% equality on the positive axis, in log scale (|f| ~ 1e170 at r = 0.99)
r = np.array([0.1, 0.5, 0.9, 0.99])
for alpha in (0.0, 0.25, 0.5, 0.75):
    m = lhmap.koebe_alpha(alpha)
    gap = lhmap.log_abs_f(m, r) - bounds.log_bounds_f(r, alpha)[1]
    print(f"alpha={alpha:<5} log|f(r)| - log(upper) = {np.array2string(gap, precision=2)}")

# %% a Dirac pair of measures reproduces the extremal coefficients
d = DiscreteMeasure.dirac()
a, b = repgen.coefficients(d, d, 0.25, 6)
print("a_n:", np.round(a.real, 6))
print("b_n:", np.round(b.real, 6))

# %% generated maps satisfy the |f| bounds everywhere on the grid
rng = np.random.default_rng(1)
m = repgen.random_map(rng, 0.25)
parts = bounds.distortion_parts(m, 0.25)
for key, rep in parts.items():
    print(f"{key:<8} passed={rep.passed!s:<5} worst log-margin {rep.worst_margin:+.3e}")

# %% the |g| lower bound is violated by f1: |g(r)| = 1 - r
f1 = lhmap.from_catalog("f1")
for rr in (0.3, 0.6, 0.9):
    lo = bounds.bounds_g(rr, 0.0)[0]
    print(f"r={rr}: |g| = {abs(lhmap.evaluate_g(f1, rr)):.4f}   lower bound {lo:.4f}")

# %% boundary distances near the circle
print("d(0, df(D)) for koebe_alpha(0):", bounds.boundary_distance(lhmap.koebe_alpha(0.0), "f"), "e^-2 =", np.exp(-2))
print("d(0, dG(D)) for f1:", bounds.boundary_distance(f1, "G"))
