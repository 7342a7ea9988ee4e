"""
Bohr radii across the order parameter
=====================================

Solve for r_H, r_G and r_f on a sweep of alpha and check the Bohr sum of the
extremal map against the distance to the boundary of its image.
"""

import numpy as np
import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from logharmonic import bohr, bounds, lhmap

alphas = np.linspace(0, 1, 41)
radii = {w: np.array([bohr.solve_bohr_radius(a, w).root for a in alphas]) for w in bohr.WHICH}
print("alpha = 1 limits:", {w: radii[w][-1] for w in bohr.WHICH}, " 3 - 2 sqrt 2 =", 3 - 2 * np.sqrt(2))

fig, ax = plt.subplots(figsize=(5, 3.5))
for w, ys in radii.items():
    ax.plot(alphas, ys, label=w)
ax.set_xlabel("alpha")
ax.set_ylabel("radius")
ax.legend()
fig.tight_layout()
fig.savefig("bohr_radii.png", dpi=120)

# %% near-equality for the extremal map at the radius
m = lhmap.koebe_alpha(0.25)
for which in ("H", "f"):
    rep = bohr.verify_bohr(m, which=which)
    print(f"{which}: radius {rep.details['radius']:.6f}  d = {rep.details['distance']:.8f}  gap {rep.details['gap_at_radius']:.2e}")

# %% the G version falls over: the boundary of G(D) comes closer than the bound allows
rep = bohr.verify_bohr(lhmap.koebe_alpha(0.0), which="G")
print("G for koebe_alpha(0): passed =", rep.passed, " d(0, dG(D)) =", rep.details["distance"],
      " lower bound =", bounds.distance_interval(0.0, "G")[0])
