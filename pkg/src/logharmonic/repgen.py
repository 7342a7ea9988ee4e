"""Starlike log-harmonic maps of order alpha built from atomic measures.

Two probability measures on the circle, ``delta`` (atoms ``eta``) and
``kappa`` (atoms ``xi``), determine

    log h(z) = sum_ij w_i v_j K1(z, eta_i, xi_j, alpha)
    log g(z) = sum_ij w_i v_j K2(z, eta_i, xi_j, alpha)

Coefficients are available along two separate routes: series arithmetic
on the kernels (:func:`generate`) and the closed double sum
(:func:`coefficient_an`, :func:`coefficient_bn`).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import cseries as cs
from .cseries import ComplexSeries
from .lhmap import BadParameter, ClosedForm, LogHarmonicMap

CONFLUENT_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class DiscreteMeasure:
    atoms: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        atoms = np.atleast_1d(np.asarray(self.atoms, dtype=complex))
        weights = np.atleast_1d(np.asarray(self.weights, dtype=float))
        if atoms.shape != weights.shape or atoms.ndim != 1 or atoms.size == 0:
            raise BadParameter("atoms and weights must be matching non-empty 1-d lists")
        if np.any(np.abs(np.abs(atoms) - 1) > 1e-14):
            raise BadParameter("atoms must lie on the unit circle")
        if np.any(weights <= 0):
            raise BadParameter("weights must be positive")
        if abs(weights.sum() - 1) > 1e-14:
            raise BadParameter("weights must sum to 1")
        atoms.setflags(write=False)
        weights.setflags(write=False)
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def dirac(cls, eta: complex = 1.0) -> "DiscreteMeasure":
        return cls([eta], [1.0])

    @classmethod
    def from_angles(cls, angles, weights) -> "DiscreteMeasure":
        w = np.asarray(weights, dtype=float)
        return cls(np.exp(1j * np.asarray(angles, dtype=float)), w / w.sum())

    @classmethod
    def random(cls, rng: np.random.Generator, max_atoms: int = 5,
               n_atoms: int | None = None) -> "DiscreteMeasure":
        """Uniform atoms on the circle; weights from a flat Dirichlet."""
        k = n_atoms or int(rng.integers(1, max_atoms + 1))
        theta = rng.uniform(0, 2 * np.pi, k)
        w = rng.dirichlet(np.ones(k))
        w = w / w.sum()
        return cls(np.exp(1j * theta), w)

    def pairs(self, other: "DiscreteMeasure"):
        """Yield ``(weight, eta, xi)`` over the product measure."""
        for w, eta in zip(self.weights, self.atoms):
            for v, xi in zip(other.weights, other.atoms):
                yield w * v, eta, xi

    def to_dict(self) -> dict:
        return {
            "atoms": [[float(a.real), float(a.imag)] for a in self.atoms],
            "weights": [float(w) for w in self.weights],
        }


def _confluent(eta, xi) -> bool:
    return abs(eta - xi) < CONFLUENT_TOL


def kernel_K1(z, eta: complex, xi: complex, alpha: float):
    """Kernel for ``log h``; principal logarithms throughout."""
    z = np.asarray(z, dtype=complex)
    l_eta = np.log(1 - eta * z)
    if _confluent(eta, xi):
        return 2 * (1 - alpha) * eta * z / (1 - eta * z) - l_eta
    c = ((1 - 2 * alpha) * eta + xi) / (eta - xi)
    # both 1 - xi z and 1 - eta z lie in the right half-plane, so the
    # log of the quotient is the difference of logs
    return c * (np.log(1 - xi * z) - l_eta) - l_eta


def kernel_K2(z, eta: complex, xi: complex, alpha: float):
    """Kernel for ``log g``."""
    z = np.asarray(z, dtype=complex)
    l_eta = np.log(1 - eta * z)
    if _confluent(eta, xi):
        return 2 * (1 - alpha) * eta * z / (1 - eta * z) + (1 - 2 * alpha) * l_eta
    c = ((1 - 2 * alpha) * eta + xi) / (eta - xi)
    return c * (np.log(1 - xi * z) - l_eta) + (1 - 2 * alpha) * l_eta


def dkernel_K1(z, eta: complex, xi: complex, alpha: float):
    """``d/dz K1``."""
    z = np.asarray(z, dtype=complex)
    d_eta = eta / (1 - eta * z)
    if _confluent(eta, xi):
        return 2 * (1 - alpha) * eta / (1 - eta * z) ** 2 + d_eta
    c = ((1 - 2 * alpha) * eta + xi) / (eta - xi)
    return c * (d_eta - xi / (1 - xi * z)) + d_eta


def dkernel_K2(z, eta: complex, xi: complex, alpha: float):
    z = np.asarray(z, dtype=complex)
    d_eta = eta / (1 - eta * z)
    if _confluent(eta, xi):
        return 2 * (1 - alpha) * eta / (1 - eta * z) ** 2 - (1 - 2 * alpha) * d_eta
    c = ((1 - 2 * alpha) * eta + xi) / (eta - xi)
    return c * (d_eta - xi / (1 - xi * z)) - (1 - 2 * alpha) * d_eta


@dataclass(frozen=True, eq=False)
class MeasureKernelForm(ClosedForm):
    """Pointwise ``log h``, ``log g`` straight from the kernels."""

    delta: DiscreteMeasure
    kappa: DiscreteMeasure
    alpha: float
    name: str = "kernel"

    def _mix(self, kernel, z):
        z = np.asarray(z, dtype=complex)
        out = np.zeros(z.shape, dtype=complex)
        for w, eta, xi in self.delta.pairs(self.kappa):
            out = out + w * kernel(z, eta, xi, self.alpha)
        return out

    def log_h(self, z):
        return self._mix(kernel_K1, z)

    def log_g(self, z):
        return self._mix(kernel_K2, z)

    def dlog_h(self, z):
        return self._mix(dkernel_K1, z)

    def dlog_g(self, z):
        return self._mix(dkernel_K2, z)


def _log_one_minus(c: complex, order: int) -> ComplexSeries:
    return cs.log_series(ComplexSeries.from_coeffs([1, -c], order))


def _kernel_series(eta: complex, xi: complex, alpha: float, order: int):
    """Series of ``(K1, K2)`` in ``z`` via series arithmetic."""
    l_eta = _log_one_minus(eta, order)
    if _confluent(eta, xi):
        one = ComplexSeries.constant(1, order)
        frac = cs.div(ComplexSeries.from_coeffs([0, eta], order),
                      one - ComplexSeries.from_coeffs([0, eta], order))
        common = 2 * (1 - alpha) * frac
    else:
        c = ((1 - 2 * alpha) * eta + xi) / (eta - xi)
        common = c * (_log_one_minus(xi, order) - l_eta)
    return common - l_eta, common + (1 - 2 * alpha) * l_eta


def _check_alpha(alpha: float, upper_open: bool = True):
    ok = 0 <= alpha < 1 if upper_open else 0 <= alpha <= 1
    if not ok:
        raise BadParameter("alpha must lie in [0, 1)" if upper_open else "alpha must lie in [0, 1]")


def generate(delta: DiscreteMeasure, kappa: DiscreteMeasure, alpha: float,
             order: int = cs.DEFAULT_ORDER) -> LogHarmonicMap:
    """Member of the order-``alpha`` starlike class determined by two measures."""
    _check_alpha(alpha)
    log_h = ComplexSeries.zeros(order)
    log_g = ComplexSeries.zeros(order)
    for w, eta, xi in delta.pairs(kappa):
        k1, k2 = _kernel_series(eta, xi, alpha, order)
        log_h = log_h + w * k1
        log_g = log_g + w * k2
    return LogHarmonicMap(
        log_h, log_g,
        closed_form=MeasureKernelForm(delta, kappa, alpha),
        alpha=alpha,
        name=f"generated({delta.atoms.size}x{kappa.atoms.size} atoms, alpha={alpha:g})",
        meta={"delta": delta, "kappa": kappa},
    )


def random_map(rng: np.random.Generator, alpha: float, order: int = cs.DEFAULT_ORDER,
               max_atoms: int = 5) -> LogHarmonicMap:
    return generate(DiscreteMeasure.random(rng, max_atoms), DiscreteMeasure.random(rng, max_atoms),
                    alpha, order)


def _geometric_sums(eta: complex, xi: complex, n_max: int) -> np.ndarray:
    """``S_n = sum_{k=0}^{n-1} eta^(n-1-k) xi^k`` for ``n = 1..n_max``.

    Recurrence ``S_{n+1} = eta S_n + xi^n``; no division by ``eta - xi``.
    """
    s = np.empty(n_max, dtype=complex)
    s[0] = 1.0
    xi_pow = 1.0 + 0j
    for n in range(1, n_max):
        xi_pow *= xi
        s[n] = eta * s[n - 1] + xi_pow
    return s


def coefficients(delta: DiscreteMeasure, kappa: DiscreteMeasure, alpha: float,
                 n_max: int) -> tuple[np.ndarray, np.ndarray]:
    """Arrays ``(a_1..a_nmax, b_1..b_nmax)`` from the closed double sum."""
    _check_alpha(alpha, upper_open=False)
    if n_max < 1:
        raise BadParameter("n_max must be >= 1")
    n = np.arange(1, n_max + 1)
    a = np.zeros(n_max, dtype=complex)
    b = np.zeros(n_max, dtype=complex)
    for w, eta, xi in delta.pairs(kappa):
        common = ((1 - 2 * alpha) * eta + xi) * _geometric_sums(eta, xi, n_max)
        eta_n = eta ** n
        a += w * (eta_n + common)
        b += w * ((2 * alpha - 1) * eta_n + common)
    return a / n, b / n


def coefficient_an(delta: DiscreteMeasure, kappa: DiscreteMeasure, alpha: float, n: int) -> complex:
    if n < 1:
        raise BadParameter("n must be >= 1")
    return complex(coefficients(delta, kappa, alpha, n)[0][n - 1])


def coefficient_bn(delta: DiscreteMeasure, kappa: DiscreteMeasure, alpha: float, n: int) -> complex:
    if n < 1:
        raise BadParameter("n must be >= 1")
    return complex(coefficients(delta, kappa, alpha, n)[1][n - 1])


def zphi_over_phi(delta: DiscreteMeasure, alpha: float, z):
    """``z phi'/phi = (1-alpha) int (1+eta z)/(1-eta z) d delta + alpha``.

    Depends on ``delta`` only; used as an independent check of membership.
    """
    z = np.asarray(z, dtype=complex)
    p = np.zeros(z.shape, dtype=complex)
    for w, eta in zip(delta.weights, delta.atoms):
        p = p + w * (1 + eta * z) / (1 - eta * z)
    return (1 - alpha) * p + alpha
