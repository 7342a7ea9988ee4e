"""Slit tips and inner mapping radii of the one-slit family and the catalog slit maps.

When the image of a catalog map is a scaled copy ``c M(D)`` of the image of
a known conformal model ``M`` (Koebe, half-plane, two-slit), the inner
mapping radius is ``c M'(0)``.  The scale ``c`` is measured as the ratio of
the distances from 0 to the two image boundaries; nothing is uniformized
numerically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import lhmap
from .bounds import BOUNDARY_EPS, boundary_distance, boundary_minima
from .lhmap import BadParameter, LogHarmonicMap


@dataclass(frozen=True)
class ConformalModel:
    """Analytic univalent ``M`` with ``M(0) = 0``, ``M'(0) = 1``."""

    name: str
    distance: float  # d(0, boundary of M(D))
    closest: complex  # a nearest omitted point


KOEBE = ConformalModel("koebe z/(1-z)^2", 0.25, -0.25)
HALF_PLANE = ConformalModel("half-plane z/(1-z)", 0.5, -0.5)
TWO_SLIT = ConformalModel("two-slit z/(1-z^2)", 0.5, 0.5j)

MODELS = {"f1": KOEBE, "f2": KOEBE, "LR": HALF_PLANE, "LS": TWO_SLIT}


def _check_lambda(lam: float):
    if not 0 <= lam <= 1:
        raise BadParameter("lambda must lie in [0, 1]")


def slit_tip(lam: float) -> complex:
    """Tip ``-e^{-2(1-lam)}`` of the slit omitted by ``F_lam``."""
    _check_lambda(lam)
    return complex(-np.exp(-2 * (1 - lam)))


def inner_radius(lam: float) -> float:
    """``rho_0(F_lam) = 4 e^{-2(1-lam)}``: the image is ``4|tip| k(D)``."""
    _check_lambda(lam)
    return float(4 * np.exp(-2 * (1 - lam)))


def numerical_tip(lam: float, eps=BOUNDARY_EPS) -> complex:
    """Limit of ``F_lam(-1+eps)`` as ``eps -> 0`` by polynomial (Richardson) extrapolation."""
    m = lhmap.f_lambda(lam)
    eps = np.asarray(eps, dtype=float)
    vals = lhmap.evaluate_f(m, -1 + eps, method="closed")
    re = np.polyval(np.polyfit(eps, vals.real, eps.size - 1), 0.0)
    im = np.polyval(np.polyfit(eps, vals.imag, eps.size - 1), 0.0)
    return complex(re, im)


def near_boundary_min(m: LogHarmonicMap, eps=BOUNDARY_EPS) -> tuple[float, complex]:
    """Smallest ``|f|`` over the circles ``|z| = 1 - eps``, extrapolated to the circle.

    Returns the extrapolated value and the minimizer found on the innermost
    circle (closest to the boundary).
    """
    mins = boundary_minima(m, "f", eps)
    return boundary_distance(m, "f", eps), mins[-1][1]


@dataclass(frozen=True)
class SlitMapAnalysis:
    lam: float
    tip: complex
    rho0: float
    numerical_tip: complex
    boundary_min: float

    @property
    def tip_error(self) -> float:
        return abs(self.numerical_tip - self.tip)


def analyze(lam: float) -> SlitMapAnalysis:
    tip = slit_tip(lam)
    d, _ = near_boundary_min(lhmap.f_lambda(lam))
    return SlitMapAnalysis(float(lam), tip, inner_radius(lam), numerical_tip(lam), d)


@dataclass(frozen=True)
class InnerRadiusEstimate:
    name: str
    model: str
    distance: float  # d(0, boundary of f(D))
    scale: float  # c with f(D) = c M(D)
    rho0: float


def catalog_inner_radius(name: str) -> InnerRadiusEstimate:
    """``rho_0`` for a catalog map whose image is a scaled conformal-model image."""
    if name not in MODELS:
        raise BadParameter(f"no conformal model recorded for {name!r}")
    model = MODELS[name]
    m = lhmap.from_catalog(name)
    d = boundary_distance(m, "f")
    c = d / model.distance
    return InnerRadiusEstimate(name, model.name, d, c, c)


def inner_radius_sweep(lams) -> list[SlitMapAnalysis]:
    return [analyze(float(x)) for x in lams]
