"""Pre-Schwarzian, Schwarzian and Bloch seminorm of non-vanishing log-harmonic maps.

For ``f = h conj(g)`` write ``A = h'/h`` and ``B = g'/g``.  The dilatation
is ``mu = B/A`` (the complex ratio, not a ratio of moduli), and

    J_f = |A|^2 (1 - |mu|^2)
    P_f = d/dz log J_f = A'/A - conj(mu) mu' / (1 - |mu|^2)
    S_f = d/dz P_f - P_f^2 / 2

Everything is assembled pointwise from the analytic series of ``log h`` and
``log g``; ``conj(z)`` enters only through ``conj(mu)`` and ``|mu|^2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np
from scipy.optimize import minimize_scalar

from . import cseries as cs
from .cseries import ComplexSeries
from .sampling import SamplingConfig, VerificationReport

A_TOL = 1e-14
FD_STEP = 1e-4


class CriticalPoint(ArithmeticError):
    """``h'`` vanishes: the pre-Schwarzian is undefined."""


class DegenerateDilatation(ArithmeticError):
    """``|mu| >= 1``: the map is not sense-preserving at the point."""


@dataclass(frozen=True, eq=False)
class NonVanishingMap:
    """``f = h conj(g)`` held through ``log h`` (any constant) and ``log g`` (constant 0)."""

    log_h: ComplexSeries
    log_g: ComplexSeries
    name: str = "nonvanishing"

    def __post_init__(self):
        if abs(self.log_g.coeffs[0]) > cs.CONSTANT_TOL:
            raise ValueError("g(0) must be 1")

    @classmethod
    def from_factors(cls, h: ComplexSeries, g: ComplexSeries, name: str = "nonvanishing"):
        h0 = complex(h.coeffs[0])
        if abs(h0) < cs.CONSTANT_TOL:
            raise ValueError("h(0) must be nonzero")
        lh = cs.log_series(h / h0) + np.log(h0)
        return cls(lh, cs.log_series(g), name)

    @classmethod
    def with_dilatation(cls, log_h: ComplexSeries, mu: ComplexSeries, name: str = "nonvanishing"):
        """Map whose dilatation is ``mu``: ``log g = int mu (log h)'``.

        Both series are padded to the larger order (plus one for the
        integration) so that polynomial inputs are handled exactly.
        """
        n = max(log_h.order, mu.order) + 1
        log_h, mu = log_h.truncate(n), mu.truncate(n)
        lg = cs.integrate(cs.mul(mu, cs.differentiate(log_h)))
        return cls(log_h, lg, name)

    @property
    def order(self) -> int:
        return min(self.log_h.order, self.log_g.order)

    @cached_property
    def _derivs(self):
        out = []
        for s in (self.log_h, self.log_g):
            d1 = cs.differentiate(s)
            d2 = cs.differentiate(d1)
            d3 = cs.differentiate(d2)
            out.append((d1, d2, d3))
        return out

    def log_derivatives(self, z):
        """``(A, A', A'', B, B', B'')`` at ``z``."""
        (a1, a2, a3), (b1, b2, b3) = self._derivs
        return tuple(cs.evaluate(s, z) for s in (a1, a2, a3, b1, b2, b3))

    def evaluate(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.exp(cs.evaluate(self.log_h, z) + np.conj(cs.evaluate(self.log_g, z)))
        return out if out.ndim else complex(out)


def _local(m: NonVanishingMap, z):
    """Pointwise ``A, A', A'', mu, mu', mu''`` with the error checks."""
    A, A1, A2, B, B1, B2 = m.log_derivatives(z)
    if np.any(np.abs(A) < A_TOL):
        raise CriticalPoint("h' vanishes")
    mu = B / A
    # from B = mu A
    mu1 = (B1 - mu * A1) / A
    mu2 = (B2 - 2 * mu1 * A1 - mu * A2) / A
    if np.any(np.abs(mu) >= 1):
        raise DegenerateDilatation("|mu| >= 1")
    return A, A1, A2, mu, mu1, mu2


def dilatation(m: NonVanishingMap, z):
    A, _, _, B, _, _ = m.log_derivatives(z)
    if np.any(np.abs(A) < A_TOL):
        raise CriticalPoint("h' vanishes")
    return B / A


def log_jacobian(m: NonVanishingMap, z):
    """``log(|h'/h|^2 (1 - |mu|^2))``."""
    A, _, _, mu, _, _ = _local(m, z)
    return np.log(np.abs(A) ** 2 * (1 - np.abs(mu) ** 2))


def pre_schwarzian(m: NonVanishingMap, z):
    """``(h''/h' - h'/h) - conj(mu) mu' / (1 - |mu|^2)``.

    ``h''/h' - h'/h`` equals ``A'/A`` and is evaluated in that form.
    """
    A, A1, _, mu, mu1, _ = _local(m, z)
    return A1 / A - np.conj(mu) * mu1 / (1 - np.abs(mu) ** 2)


def schwarzian(m: NonVanishingMap, z):
    """Five-term expansion of ``d/dz P_f - P_f^2/2``."""
    A, A1, A2, mu, mu1, mu2 = _local(m, z)
    q = A1 / A
    dq = A2 / A - q * q
    one = 1 - np.abs(mu) ** 2
    m1 = np.conj(mu) * mu1 / one
    return dq - 0.5 * q * q + q * m1 - np.conj(mu) * mu2 / one - 1.5 * m1 * m1


def mixed_derivative_Pf(m: NonVanishingMap, z):
    """``d^2 P_f / dz dzbar = -conj(mu') (mu'' (1-|mu|^2) + 2 mu'^2 conj(mu)) / (1-|mu|^2)^3``.

    The leading minus sign comes from the minus in front of the
    ``conj(mu) mu'`` term of ``P_f``; the finite-difference Laplacian in
    :func:`mixed_derivative_Pf_fd` confirms it.
    """
    _, _, _, mu, mu1, mu2 = _local(m, z)
    one = 1 - np.abs(mu) ** 2
    return -np.conj(mu1) * (mu2 * one + 2 * mu1 ** 2 * np.conj(mu)) / one ** 3


def mixed_derivative_Pf_fd(m: NonVanishingMap, z, step: float = FD_STEP):
    """``Laplacian(P_f) / 4`` by the five-point stencil with one Richardson step."""
    z = np.asarray(z, dtype=complex)

    def lap(hh):
        s = (pre_schwarzian(m, z + hh) + pre_schwarzian(m, z - hh)
             + pre_schwarzian(m, z + 1j * hh) + pre_schwarzian(m, z - 1j * hh)
             - 4 * pre_schwarzian(m, z))
        return s / (4 * hh * hh)

    return (4 * lap(step / 2) - lap(step)) / 3


def pre_schwarzian_fd(m: NonVanishingMap, z, step: float = FD_STEP):
    """``d/dz log J_f`` by central differences: ``(d/dx - i d/dy) / 2``."""
    z = np.asarray(z, dtype=complex)

    def d(hh):
        dx = (log_jacobian(m, z + hh) - log_jacobian(m, z - hh)) / (2 * hh)
        dy = (log_jacobian(m, z + 1j * hh) - log_jacobian(m, z - 1j * hh)) / (2 * hh)
        return 0.5 * (dx - 1j * dy)

    return (4 * d(step / 2) - d(step)) / 3


def schwarzian_fd(m: NonVanishingMap, z, step: float = FD_STEP):
    """``d/dz P_f - P_f^2 / 2`` with the derivative taken by central differences."""
    z = np.asarray(z, dtype=complex)

    def d(hh):
        dx = (pre_schwarzian(m, z + hh) - pre_schwarzian(m, z - hh)) / (2 * hh)
        dy = (pre_schwarzian(m, z + 1j * hh) - pre_schwarzian(m, z - 1j * hh)) / (2 * hh)
        return 0.5 * (dx - 1j * dy)

    p = pre_schwarzian(m, z)
    return (4 * d(step / 2) - d(step)) / 3 - 0.5 * p * p


# -- chain rules -------------------------------------------------------------

def compose(m: NonVanishingMap, phi: ComplexSeries) -> NonVanishingMap:
    """Factors of ``f o phi``, renormalized so that ``g(0) = 1``.

    ``f(phi) = e^{log h(phi)} conj(e^{log g(phi)})``; the constant of
    ``log g(phi)`` is moved into the ``h`` factor as its conjugate.  A
    low-order ``phi`` is padded so that polynomials compose exactly.
    """
    phi = phi.truncate(max(phi.order, m.order))
    lh = cs.compose(m.log_h, phi)
    lg = cs.compose(m.log_g, phi)
    c = complex(lg.coeffs[0])
    return NonVanishingMap(lh + np.conj(c), lg - c, f"{m.name} o phi")


def analytic_pre_schwarzian(phi: ComplexSeries, z):
    d1 = cs.differentiate(phi)
    return cs.evaluate(cs.differentiate(d1), z) / cs.evaluate(d1, z)


def analytic_schwarzian(phi: ComplexSeries, z):
    d1 = cs.differentiate(phi)
    d2 = cs.differentiate(d1)
    d3 = cs.differentiate(d2)
    p1, p2, p3 = (cs.evaluate(s, z) for s in (d1, d2, d3))
    return p3 / p1 - 1.5 * (p2 / p1) ** 2


def chain_rule_residuals(m: NonVanishingMap, phi: ComplexSeries, z) -> tuple[float, float]:
    """``(|P_{f o phi} - (P_f o phi) phi' - P_phi|, same for S with phi'^2)``."""
    composed = compose(m, phi)
    w = cs.evaluate(phi, z)
    dphi = cs.evaluate(cs.differentiate(phi), z)
    rp = pre_schwarzian(composed, z) - (pre_schwarzian(m, w) * dphi + analytic_pre_schwarzian(phi, z))
    rs = schwarzian(composed, z) - (schwarzian(m, w) * dphi ** 2 + analytic_schwarzian(phi, z))
    return float(np.max(np.abs(rp))), float(np.max(np.abs(rs)))


def chain_rule_check(m: NonVanishingMap, phi: ComplexSeries, z) -> float:
    return max(chain_rule_residuals(m, phi, z))


# -- Bloch seminorm ----------------------------------------------------------

@dataclass(frozen=True)
class BlochEstimate:
    seminorm: float
    witness_z: complex
    samples: int
    f0: float = 0.0

    @property
    def norm(self) -> float:
        return self.f0 + self.seminorm


def bloch_density(m: NonVanishingMap, z):
    """``(1 - |z|^2)(|h'/h| + |g'/g|)``."""
    z = np.asarray(z, dtype=complex)
    (a1, _, _), (b1, _, _) = m._derivs
    return (1 - np.abs(z) ** 2) * (np.abs(cs.evaluate(a1, z)) + np.abs(cs.evaluate(b1, z)))


def _polish(m: NonVanishingMap, z0: complex, dr: float, dt: float, rounds: int = 4):
    """Alternate bounded 1-d maximizations along the ray and along the circle."""
    r, t = abs(z0), float(np.angle(z0))
    best = float(bloch_density(m, z0))
    for _ in range(rounds):
        res = minimize_scalar(lambda s: -float(bloch_density(m, s * np.exp(1j * t))),
                              bounds=(max(r - dr, 0.0), min(r + dr, 1.0)), method="bounded",
                              options={"xatol": 1e-12})
        if -res.fun > best:
            best, r = -res.fun, float(res.x)
        res = minimize_scalar(lambda s: -float(bloch_density(m, r * np.exp(1j * s))),
                              bounds=(t - dt, t + dt), method="bounded", options={"xatol": 1e-12})
        if -res.fun > best:
            best, t = -res.fun, float(res.x)
    return best, r * np.exp(1j * t)


def bloch_seminorm(m: NonVanishingMap, cfg: SamplingConfig | None = None, extra_points=(),
                   n_polish: int = 4) -> BlochEstimate:
    """Grid estimate of ``sup (1-|z|^2)(|h'/h| + |g'/g|)``.

    The polar grid (plus the origin and ``extra_points``) is followed by a
    polish around the ``n_polish`` best grid points.
    """
    cfg = cfg or SamplingConfig()
    z = np.concatenate([[0j], cfg.points().ravel(), np.asarray(extra_points, dtype=complex).ravel()])
    vals = bloch_density(m, z)
    order = np.argsort(vals)[::-1][:n_polish]
    radii = np.asarray(cfg.radii)
    dr = float(np.max(np.diff(np.concatenate([[0.0], radii, [1.0]]))))
    dt = 2 * np.pi / cfg.angles
    best_v, best_z = float(vals[order[0]]), complex(z[order[0]])
    for k in order:
        v, w = _polish(m, complex(z[k]), dr, dt)
        if v > best_v:
            best_v, best_z = v, complex(w)
    f0 = float(np.abs(np.exp(m.log_h.coeffs[0])))
    return BlochEstimate(best_v, best_z, int(z.size), f0)


def bloch_norm(m: NonVanishingMap, cfg: SamplingConfig | None = None) -> float:
    return bloch_seminorm(m, cfg).norm


def affine_transform(m: NonVanishingMap, a: complex, b: complex) -> NonVanishingMap:
    """``f^a conj(f)^b`` with factors ``h^a g^b`` and ``h^conj(b) g^conj(a)``."""
    lh = a * m.log_h + b * m.log_g
    lg = np.conj(b) * m.log_h + np.conj(a) * m.log_g
    c = complex(lg.coeffs[0])
    return NonVanishingMap(lh + np.conj(c), lg - c, f"{m.name}^({a},{b})")


def invariance_checks(m: NonVanishingMap, a: complex, b: complex, alpha_mobius: complex,
                      cfg: SamplingConfig | None = None, rel_tol: float = 1e-3,
                      tol: float = 1e-9, compose_order: int = 160) -> VerificationReport:
    """Affine bound and Moebius invariance of the Bloch seminorm.

    Margin is the smaller of ``(|a|+|b|) beta(f) + tol - beta(F)`` (scaled to
    a pass/fail at ``tol``) and ``rel_tol - |beta(f o phi) - beta(f)| / beta(f)``.
    """
    if abs(alpha_mobius) >= 1:
        raise ValueError("|alpha_mobius| must be < 1")
    cfg = cfg or SamplingConfig()
    F = affine_transform(m, a, b)
    bF = bloch_seminorm(F, cfg)
    bf = bloch_seminorm(m, cfg, extra_points=[bF.witness_z])
    affine_gap = (abs(a) + abs(b)) * bf.seminorm - bF.seminorm

    big = NonVanishingMap(m.log_h.truncate(compose_order), m.log_g.truncate(compose_order), m.name)
    phi = cs.mobius_series(alpha_mobius, compose_order)
    C = compose(big, phi)
    bC = bloch_seminorm(C, cfg)
    rel = abs(bC.seminorm - bf.seminorm) / bf.seminorm
    passed = affine_gap >= -tol and rel <= rel_tol
    worst_z = bF.witness_z if affine_gap < 0 else bC.witness_z
    return VerificationReport(
        f"bloch_invariance[{m.name}]", passed, float(min(affine_gap + tol, rel_tol - rel)),
        worst_z, bF.samples + bf.samples + bC.samples, tol,
        {"beta_f": bf.seminorm, "beta_affine": bF.seminorm, "affine_gap": affine_gap,
         "beta_mobius": bC.seminorm, "mobius_rel_diff": rel, "a": complex(a), "b": complex(b),
         "alpha_mobius": complex(alpha_mobius),
         "witness_f": bf.witness_z, "witness_mobius": bC.witness_z},
    )


# -- small constructors used by tests, demos and the CLI --------------------

def exp_poly(coeffs, order: int = cs.DEFAULT_ORDER) -> ComplexSeries:
    """Log-factor series ``sum c_n z^n``, i.e. the factor ``exp(sum c_n z^n)``."""
    return ComplexSeries.from_coeffs(coeffs, order)


def random_bloch_map(rng: np.random.Generator, order: int = cs.DEFAULT_ORDER,
                     decay: float = 0.4, g_scale: float = 0.15) -> NonVanishingMap:
    """Random map with ``|h'/h - 1| <= 2/3`` and ``|g'/g| <= 0.25`` on the disk.

    Keeps ``h'`` zero-free and ``|mu| < 0.76``, so every operation here is
    defined everywhere in the disc.
    """
    n = np.arange(1, order + 1)

    def unit(k):
        return np.sqrt(rng.uniform(0, 1, k)) * np.exp(2j * np.pi * rng.uniform(0, 1, k))

    ch = decay ** (n - 1) / n * unit(order)
    ch[0] = 1.0
    cg = g_scale * decay ** (n - 1) / n * unit(order)
    lh = ComplexSeries(np.concatenate([[0], ch]))
    lg = ComplexSeries(np.concatenate([[0], cg]))
    return NonVanishingMap(lh, lg, "random_bloch")
