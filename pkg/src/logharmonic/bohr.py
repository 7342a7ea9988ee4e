"""Bohr radii of the order-alpha starlike class and the Bohr-type inequalities."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bounds import boundary_distance
from .lhmap import LogHarmonicMap
from .sampling import VerificationReport

WHICH = ("r_H", "r_G", "r_f")
LO, HI = 1e-9, 1 - 1e-9


class TailTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class RadiusSolution:
    alpha: float
    which: str
    root: float
    residual: float
    iterations: int
    bracket: tuple[float, float] = (LO, HI)


def _equation(alpha: float, which: str):
    """``(log LHS(r), log RHS)``; both sides are positive, LHS increasing."""
    a = alpha
    if which == "r_H":
        rhs = -np.log(2.0) - (1 - a)
        def lhs(r): return np.log(r) - np.log1p(-r) + 2 * (1 - a) * r / (1 - r)
    elif which == "r_G":
        rhs = -(2 * a - 1) * np.log(2.0) - (1 - a)
        def lhs(r): return np.log(r) - (2 * a - 1) * np.log1p(-r) + 2 * (1 - a) * r / (1 - r)
    elif which == "r_f":
        rhs = -2 * a * np.log(2.0) - 2 * (1 - a)
        def lhs(r): return np.log(r) - 2 * a * np.log1p(-r) + 4 * (1 - a) * r / (1 - r)
    else:
        raise ValueError(f"which must be one of {WHICH}")
    return lhs, rhs


def bohr_equation_residual(alpha: float, which: str, r: float) -> float:
    """``LHS(r) - RHS`` in the original (not logarithmic) scale."""
    lhs, rhs = _equation(alpha, which)
    return float(np.exp(lhs(r)) - np.exp(rhs))


def solve_bohr_radius(alpha: float, which: str, width: float = 1e-15,
                      max_iter: int = 200) -> RadiusSolution:
    """Unique root in ``(0, 1)`` by bisection on the log form of the equation."""
    if not 0 <= alpha <= 1:
        raise ValueError("alpha must lie in [0, 1]")
    lhs, rhs = _equation(alpha, which)
    lo, hi = LO, HI
    if not (lhs(lo) < rhs < lhs(hi)):
        raise RuntimeError("root not bracketed")  # cannot happen for alpha in [0, 1]
    it = 0
    while hi - lo > width and it < max_iter:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if lhs(mid) < rhs:
            lo = mid
        else:
            hi = mid
        it += 1
    root = 0.5 * (lo + hi)
    return RadiusSolution(float(alpha), which, root, bohr_equation_residual(alpha, which, root), it)


def bohr_radii(alpha: float) -> dict[str, RadiusSolution]:
    return {w: solve_bohr_radius(alpha, w) for w in WHICH}


def _tail(alpha: float, r: float, start: int, which: str) -> float:
    """Bound on ``sum_{n >= start} c_n r^n`` from the sharp coefficient bounds."""
    if r <= 0:
        return 0.0
    geo = r ** start / (1 - r)
    # sum_{n>=start} r^n / n <= geo / start
    harm = geo / start
    if which == "H":
        return 2 * (1 - alpha) * geo + harm
    if which == "G":
        return 2 * (1 - alpha) * geo + max(2 * alpha - 1, 0.0) * harm
    return 4 * (1 - alpha) * geo + 2 * alpha * harm


@dataclass(frozen=True)
class BohrSum:
    value: float
    tail: float  # certified bound on the omitted exponent

    @property
    def upper(self) -> float:
        return self.value * float(np.exp(self.tail))


def bohr_sum_detail(m: LogHarmonicMap, r: float, which: str = "H", tol: float = 1e-12,
                    alpha: float | None = None) -> BohrSum:
    if not 0 <= r < 1:
        raise ValueError("r must lie in [0, 1)")
    if which not in ("H", "G", "f"):
        raise ValueError("which must be H, G or f")
    if r == 0:
        return BohrSum(0.0, 0.0)
    if alpha is None:
        # alpha = 0 gives the weakest coefficient bounds, hence a valid tail
        alpha = m.alpha if m.alpha is not None else 0.0
    n = np.arange(1, m.order + 1)
    if which == "H":
        c = np.abs(m.a)
    elif which == "G":
        c = np.abs(m.b)
    else:
        c = np.abs(m.a) + np.abs(m.b)
    expo = float(np.sum(c * r ** n))
    tail = _tail(alpha, r, m.order + 1, which)
    if tail > tol:
        raise TailTooLarge(f"omitted tail {tail:.2e} exceeds {tol:.0e} at r={r}")
    return BohrSum(r * float(np.exp(expo)), tail)


def bohr_sum(m: LogHarmonicMap, r: float, which: str = "H", tol: float = 1e-12) -> float:
    """``r exp(sum |a_n| r^n)`` (H), with ``|b_n|`` (G) or ``|a_n|+|b_n|`` (f)."""
    return bohr_sum_detail(m, r, which, tol).value


def verify_bohr(m: LogHarmonicMap, alpha: float | None = None, which: str = "H",
                points: int = 64, tol: float = 1e-9,
                distance: float | None = None) -> VerificationReport:
    """Check the Bohr inequality on ``0 < r <= r_which(alpha)``.

    The sum is taken with its certified tail; the boundary distance comes
    from :func:`boundary_distance` unless supplied.
    """
    alpha = m.alpha if alpha is None else alpha
    if alpha is None:
        raise ValueError("alpha not given and the map carries none")
    sol = solve_bohr_radius(alpha, "r_" + which)
    d = boundary_distance(m, which) if distance is None else distance
    rs = np.linspace(sol.root / points, sol.root, points)
    sums = np.array([bohr_sum_detail(m, r, which, alpha=alpha).upper for r in rs])
    margins = d - sums
    rep = VerificationReport.from_margins(f"bohr_{which}[{m.name}]", rs.astype(complex), margins, tol,
                                          alpha=alpha, radius=sol.root, distance=d,
                                          gap_at_radius=float(margins[-1]))
    return rep
