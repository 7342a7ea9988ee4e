"""
Slit maps and inner mapping radii
=================================

F_lambda omits a slit along the negative axis; its tip fixes the scale of
the Koebe image and so the inner mapping radius.  The two-slit map LS sends
each half of the unit circle to a single point, i/e or -i/e.
"""

import numpy as np

from logharmonic import cli, lhmap, slit

for lam in (0.0, 0.25, 0.5, 0.75, 1.0):
    a = slit.analyze(lam)
    print(f"lambda={lam:<5} tip {a.tip.real:+.10f}  numerical {a.numerical_tip.real:+.10f}  rho0 {a.rho0:.6f}")

# %% LR and LS against their conformal models
for name in ("LR", "LS"):
    est = slit.catalog_inner_radius(name)
    print(f"{name}: d(0, boundary) = {est.distance:.10f}  model {est.model}  rho0 = {est.rho0:.10f}")
print("1/e =", 1 / np.e, " 2/e =", 2 / np.e)

ls = lhmap.from_catalog("LS")
theta = np.linspace(0.1, np.pi - 0.1, 5)
print("LS on the upper half of the circle:", np.round(lhmap.evaluate_f(ls, (1 - 1e-9) * np.exp(1j * theta)), 8))
y = np.linspace(0, 0.999, 5)
print("LS on the imaginary axis:", np.round(np.abs(lhmap.evaluate_f(ls, 1j * y)), 6))

# %% domain-colored renders
for spec in (["--map", "F_lambda", "--lambda", "0.5"], ["--map", "LS"]):
    out = f"render_{spec[1]}.ppm"
    cli.main(["render", *spec, "--size", "256", "--out", out])
    print("wrote", out)
