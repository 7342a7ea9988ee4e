"""Grid verification of the sharp distortion, boundary-distance and coefficient bounds.

Distortion margins are measured in log scale: ``log(upper) - log|f|`` and
``log|f| - log(lower)``.  Near the circle the extremal maps reach
``|f| ~ 1e170`` and absolute differences carry no information there.
"""

from __future__ import annotations

import numpy as np
from scipy.optimize import minimize_scalar

from . import lhmap
from .cseries import tail_estimate
from .lhmap import LogHarmonicMap
from .repgen import DiscreteMeasure, coefficients
from .sampling import SamplingConfig, VerificationReport, combine

BOUNDARY_EPS = (1e-2, 1e-3, 1e-4)
BOUNDARY_ANGLES = 4096
MIN_SERIES_ORDER = 64


class TruncationUnreliable(RuntimeError):
    pass


# -- bound functions -------------------------------------------------------

def log_bounds_f(r, alpha: float):
    """``(log lower, log upper)`` for ``|f|`` at ``|z| = r``."""
    r = np.asarray(r, dtype=float)
    lo = np.log(r) - 2 * alpha * np.log1p(r) - 4 * (1 - alpha) * r / (1 + r)
    hi = np.log(r) - 2 * alpha * np.log1p(-r) + 4 * (1 - alpha) * r / (1 - r)
    return lo, hi


def log_bounds_h(r, alpha: float):
    r = np.asarray(r, dtype=float)
    lo = -np.log1p(r) - 2 * (1 - alpha) * r / (1 + r)
    hi = -np.log1p(-r) + 2 * (1 - alpha) * r / (1 - r)
    return lo, hi


def log_bounds_g(r, alpha: float):
    r = np.asarray(r, dtype=float)
    lo = -(2 * alpha - 1) * np.log1p(r) - 2 * (1 - alpha) * r / (1 + r)
    hi = -(2 * alpha - 1) * np.log1p(-r) + 2 * (1 - alpha) * r / (1 - r)
    return lo, hi


def bounds_f(r, alpha: float):
    lo, hi = log_bounds_f(r, alpha)
    return np.exp(lo), np.exp(hi)


def bounds_h(r, alpha: float):
    lo, hi = log_bounds_h(r, alpha)
    return np.exp(lo), np.exp(hi)


def bounds_g(r, alpha: float):
    lo, hi = log_bounds_g(r, alpha)
    return np.exp(lo), np.exp(hi)


def coefficient_bound_a(n, alpha: float):
    return 2 * (1 - alpha) + 1 / np.asarray(n, dtype=float)


def coefficient_bound_b(n, alpha: float):
    return 2 * (1 - alpha) + (2 * alpha - 1) / np.asarray(n, dtype=float)


def distance_interval(alpha: float, which: str) -> tuple[float, float]:
    """Sharp lower bound and the trivial upper bound 1 for ``d(0, boundary)``."""
    if which == "H":
        lo = 1 / (2 * np.exp(1 - alpha))
    elif which == "G":
        lo = 1 / (2 ** (2 * alpha - 1) * np.exp(1 - alpha))
    elif which == "f":
        lo = 1 / (2 ** (2 * alpha) * np.exp(2 * (1 - alpha)))
    else:
        raise ValueError(f"which must be H, G or f, not {which!r}")
    return float(lo), 1.0


# -- distortion --------------------------------------------------------------

def _alpha_of(m: LogHarmonicMap, alpha: float | None) -> float:
    if alpha is not None:
        return alpha
    if m.alpha is None:
        raise ValueError("alpha not given and the map carries none")
    return m.alpha


def verify_distortion_f(m: LogHarmonicMap, alpha: float | None = None,
                        cfg: SamplingConfig | None = None, method: str = "auto") -> VerificationReport:
    """Two-sided modulus bound for ``|f|`` on the grid (log-scale margins)."""
    alpha = _alpha_of(m, alpha)
    cfg = cfg or SamplingConfig()
    z = cfg.points()
    r = np.abs(z)
    lf = lhmap.log_abs_f(m, z, method)
    lo, hi = log_bounds_f(r, alpha)
    margins = np.minimum(hi - lf, lf - lo)
    return VerificationReport.from_margins(f"distortion_f[{m.name}]", z, margins, cfg.tol, alpha=alpha)


def verify_distortion_hg(m: LogHarmonicMap, alpha: float | None = None,
                         cfg: SamplingConfig | None = None, method: str = "auto") -> VerificationReport:
    """Upper and lower modulus bounds for both ``|h|`` and ``|g|``."""
    alpha = _alpha_of(m, alpha)
    cfg = cfg or SamplingConfig()
    z = cfg.points()
    r = np.abs(z)
    lh, lg = lhmap.log_factors(m, z, method)
    reports = []
    for label, val, (lo, hi) in (("h", lh.real, log_bounds_h(r, alpha)),
                                 ("g", lg.real, log_bounds_g(r, alpha))):
        margins = np.minimum(hi - val, val - lo)
        reports.append(VerificationReport.from_margins(label, z, margins, cfg.tol))
    worst = combine(f"distortion_hg[{m.name}]", reports, alpha=alpha,
                    margin_h=reports[0].worst_margin, margin_g=reports[1].worst_margin)
    return worst


DISTORTION_PARTS = ("f_lower", "f_upper", "h_lower", "h_upper", "g_lower", "g_upper")


def distortion_parts(m: LogHarmonicMap, alpha: float | None = None,
                     cfg: SamplingConfig | None = None, method: str = "auto") -> dict[str, VerificationReport]:
    """One report per one-sided bound, keyed by :data:`DISTORTION_PARTS`."""
    alpha = _alpha_of(m, alpha)
    cfg = cfg or SamplingConfig()
    z = cfg.points()
    r = np.abs(z)
    lh, lg = lhmap.log_factors(m, z, method)
    vals = {"f": np.log(r) + lh.real + lg.real, "h": lh.real, "g": lg.real}
    bnds = {"f": log_bounds_f(r, alpha), "h": log_bounds_h(r, alpha), "g": log_bounds_g(r, alpha)}
    out = {}
    for key in DISTORTION_PARTS:
        which, side = key.split("_")
        lo, hi = bnds[which]
        margins = vals[which] - lo if side == "lower" else hi - vals[which]
        out[key] = VerificationReport.from_margins(f"{key}[{m.name}]", z, margins, cfg.tol, alpha=alpha)
    return out


# -- boundary distance ---------------------------------------------------------

def _modulus_on_circle(m: LogHarmonicMap, which: str, z, method: str):
    lh, lg = lhmap.log_factors(m, z, method)
    if which == "H":
        return np.exp(lh.real)
    if which == "G":
        return np.exp(lg.real)
    if which == "f":
        # |f(z)/z|; the liminf as |z| -> 1 equals that of |f|
        return np.exp(lh.real + lg.real)
    raise ValueError(f"which must be H, G or f, not {which!r}")


def _circle_min(m: LogHarmonicMap, which: str, r: float, angles: int, method: str):
    theta = 2 * np.pi * np.arange(angles) / angles
    with np.errstate(over="ignore", invalid="ignore"):
        vals = _modulus_on_circle(m, which, r * np.exp(1j * theta), method)
    vals = np.where(np.isnan(vals), np.inf, vals)
    k = int(np.argmin(vals))
    step = 2 * np.pi / angles

    def obj(t):
        with np.errstate(over="ignore", invalid="ignore"):
            v = float(_modulus_on_circle(m, which, r * np.exp(1j * t), method))
        return v if np.isfinite(v) else np.inf

    res = minimize_scalar(obj, bounds=(theta[k] - step, theta[k] + step), method="bounded",
                          options={"xatol": 1e-12})
    if res.fun < vals[k]:
        return float(res.fun), r * np.exp(1j * res.x)
    return float(vals[k]), r * np.exp(1j * theta[k])


def boundary_minima(m: LogHarmonicMap, which: str, eps=BOUNDARY_EPS,
                    angles: int = BOUNDARY_ANGLES, method: str = "auto"):
    """Minimum modulus on the circles ``|z| = 1 - eps`` with their minimizers."""
    return [_circle_min(m, which, 1 - e, angles, method) for e in eps]


def boundary_distance(m: LogHarmonicMap, which: str = "f", eps=BOUNDARY_EPS,
                      angles: int = BOUNDARY_ANGLES) -> float:
    """Estimate ``d(0, boundary of the image)`` for ``H = z h``, ``G = z g`` or ``f``.

    Takes the minimum modulus of ``h``, ``g`` or ``f/z`` on circles close to
    the boundary and extrapolates polynomially to ``eps -> 0``.  Without a
    closed form only radii up to 0.999 are used, and only if the series tail
    there is negligible.
    """
    eps = tuple(sorted(eps, reverse=True))
    method = "closed"
    if m.closed_form is None:
        if m.order < MIN_SERIES_ORDER:
            raise TruncationUnreliable(f"series order {m.order} < {MIN_SERIES_ORDER}")
        eps = tuple(e for e in eps if e >= 1e-3) or (1e-3,)
        tail = max(tail_estimate(m.log_h, 1 - eps[-1]), tail_estimate(m.log_g, 1 - eps[-1]))
        if tail > 1e-8:
            raise TruncationUnreliable(f"series tail {tail:.2e} near the circle")
        method = "series"
    mins = np.array([v for v, _ in boundary_minima(m, which, eps, angles, method)])
    if len(eps) == 1:
        return float(mins[0])
    coef = np.polyfit(np.asarray(eps), mins, len(eps) - 1)
    # a distance; extrapolation of a vanishing minimum can undershoot 0
    return max(float(np.polyval(coef, 0.0)), 0.0)


# -- coefficients ------------------------------------------------------------

def verify_coefficient_bounds(delta: DiscreteMeasure, kappa: DiscreteMeasure, alpha: float,
                              n_max: int, tol: float = 1e-9) -> VerificationReport:
    """Check ``|a_n|`` and ``|b_n|`` against their sharp bounds for ``n <= n_max``."""
    a, b = coefficients(delta, kappa, alpha, n_max)
    n = np.arange(1, n_max + 1)
    slack_a = coefficient_bound_a(n, alpha) - np.abs(a)
    slack_b = coefficient_bound_b(n, alpha) - np.abs(b)
    ka, kb = int(np.argmin(slack_a)), int(np.argmin(slack_b))
    if slack_a[ka] <= slack_b[kb]:
        worst, which, k = float(slack_a[ka]), "a", ka
    else:
        worst, which, k = float(slack_b[kb]), "b", kb
    return VerificationReport(
        "coefficient_bounds", worst >= -tol, worst, 0j, 2 * n_max, tol,
        {"alpha": alpha, "worst_n": int(n[k]), "worst_coeff": which,
         "slack_a_n1": float(slack_a[0]), "slack_b_n1": float(slack_b[0])},
    )
