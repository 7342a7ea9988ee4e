"""
Pre-Schwarzian, Schwarzian and the Bloch seminorm
=================================================

P_f is harmonic exactly when the dilatation is constant.  The mixed
derivative below is compared with a five-point Laplacian stencil, which
fixes its overall sign.
"""

import numpy as np

from logharmonic import cseries as cs
from logharmonic import diffgeo as dg
from logharmonic.cseries import ComplexSeries

log_h = dg.exp_poly([0, 1, 0.2])
const = dg.NonVanishingMap.with_dilatation(log_h, ComplexSeries.constant(0.3 + 0.4j))
ident = dg.NonVanishingMap.with_dilatation(log_h, ComplexSeries.variable())

z = np.array([0.2, 0.4j, -0.3 + 0.3j])
print("constant mu :", np.abs(dg.mixed_derivative_Pf(const, z)))
print("mu = z      :", dg.mixed_derivative_Pf(ident, z))
print("stencil     :", dg.mixed_derivative_Pf_fd(ident, z))
print("-2 zbar/(1-|z|^2)^3:", -2 * np.conj(z) / (1 - np.abs(z) ** 2) ** 3)

# %% chain rule under a disk automorphism
rng = np.random.default_rng(3)
f = dg.random_bloch_map(rng)
phi = cs.mobius_series(0.4 - 0.3j, 64)
print("chain-rule residual:", dg.chain_rule_check(f, phi, 0.3 * np.exp(1j * np.arange(5))))

# %% Bloch seminorm: interior maximum for exp(z^2)
est = dg.bloch_seminorm(dg.NonVanishingMap(dg.exp_poly([0, 0, 1]), ComplexSeries.zeros()))
print(f"beta(exp(z^2)) = {est.seminorm:.12f}  (4/(3 sqrt 3) = {4 / (3 * np.sqrt(3)):.12f}) at |z| = {abs(est.witness_z):.6f}")

# %% invariance under f -> f^a conj(f)^b and under automorphisms
rep = dg.invariance_checks(f, 1 + 0.5j, -0.4, 0.6j)
for k in ("beta_f", "beta_affine", "affine_gap", "beta_mobius", "mobius_rel_diff"):
    print(f"{k:<16} {rep.details[k]}")
