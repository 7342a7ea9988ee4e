"""Log-harmonic maps ``f(z) = z h(z) conj(g(z))`` and their pointwise analysis.

A map is stored through its log-factors ``log h = sum a_n z^n`` and
``log g = sum b_n z^n`` (both without constant term).  The factor series
``h`` and ``g`` are derived from them on demand.  Storing the logarithms
keeps the ``a_n, b_n`` exact: for Koebe-type maps ``h`` has coefficients
near ``1e8`` at order 64 and taking its logarithm again costs about eight
digits.

Near the unit circle the truncated series are useless, so maps may carry
a closed-form evaluator.  ``method="auto"`` uses it whenever present.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import cseries as cs
from .cseries import ComplexSeries
from .sampling import SamplingConfig, VerificationReport


class BadParameter(ValueError):
    pass


class DenominatorVanishes(ArithmeticError):
    """``1 + z h'/h`` vanished: the map is not locally univalent there."""


class ClosedForm:
    """Exact pointwise evaluator for ``log h``, ``log g`` and their derivatives."""

    name = "closed"

    def log_h(self, z):
        raise NotImplementedError

    def log_g(self, z):
        raise NotImplementedError

    def dlog_h(self, z):
        raise NotImplementedError

    def dlog_g(self, z):
        raise NotImplementedError


class IdentityForm(ClosedForm):
    name = "identity"

    def log_h(self, z):
        return np.zeros_like(np.asarray(z, dtype=complex))

    log_g = dlog_h = dlog_g = log_h


@dataclass(frozen=True)
class KoebeTypeForm(ClosedForm):
    """``log h = -log(1-z) + c z/(1-z)``, ``log g = p log(1-z) + c z/(1-z)``.

    ``c = 2(1-alpha), p = 1-2 alpha`` gives the extremal map of order
    ``alpha``; ``c = 2(1-lam), p = 1`` gives the slit family ``F_lam``.
    """

    c: float
    p: float
    name: str = "koebe_type"

    def log_h(self, z):
        z = np.asarray(z, dtype=complex)
        return -np.log(1 - z) + self.c * z / (1 - z)

    def log_g(self, z):
        z = np.asarray(z, dtype=complex)
        return self.p * np.log(1 - z) + self.c * z / (1 - z)

    def dlog_h(self, z):
        z = np.asarray(z, dtype=complex)
        return 1 / (1 - z) + self.c / (1 - z) ** 2

    def dlog_g(self, z):
        z = np.asarray(z, dtype=complex)
        return -self.p / (1 - z) + self.c / (1 - z) ** 2


class TwoSlitForm(ClosedForm):
    """``LS``: h = (1-z^2)^(-1/2) e^{z^2/(1-z^2)}, g = (1-z^2)^(1/2) e^{z^2/(1-z^2)}."""

    name = "LS"

    def log_h(self, z):
        w = np.asarray(z, dtype=complex) ** 2
        return -0.5 * np.log(1 - w) + w / (1 - w)

    def log_g(self, z):
        w = np.asarray(z, dtype=complex) ** 2
        return 0.5 * np.log(1 - w) + w / (1 - w)

    def dlog_h(self, z):
        z = np.asarray(z, dtype=complex)
        w = z * z
        return 2 * z * (0.5 / (1 - w) + 1 / (1 - w) ** 2)

    def dlog_g(self, z):
        z = np.asarray(z, dtype=complex)
        w = z * z
        return 2 * z * (-0.5 / (1 - w) + 1 / (1 - w) ** 2)


@dataclass(frozen=True, eq=False)
class LogHarmonicMap:
    log_h: ComplexSeries
    log_g: ComplexSeries
    closed_form: ClosedForm | None = None
    alpha: float | None = None
    name: str = "series"
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        for s, label in ((self.log_h, "h"), (self.log_g, "g")):
            if abs(s.coeffs[0]) > cs.CONSTANT_TOL:
                raise BadParameter(f"{label}(0) must be 1 (log-factor constant term 0)")
        if self.alpha is not None and not 0 <= self.alpha < 1:
            raise BadParameter("alpha must lie in [0, 1)")

    @classmethod
    def from_factors(cls, h: ComplexSeries, g: ComplexSeries, **kw) -> "LogHarmonicMap":
        return cls(cs.log_series(h), cs.log_series(g), **kw)

    @classmethod
    def from_coefficients(cls, a, b, order: int | None = None, **kw) -> "LogHarmonicMap":
        """Build from ``a_1, a_2, ...`` and ``b_1, b_2, ...``."""
        a = np.concatenate([[0], np.asarray(a, dtype=complex)])
        b = np.concatenate([[0], np.asarray(b, dtype=complex)])
        return cls(ComplexSeries.from_coeffs(a, order), ComplexSeries.from_coeffs(b, order), **kw)

    @property
    def order(self) -> int:
        return min(self.log_h.order, self.log_g.order)

    @property
    def a(self) -> np.ndarray:
        """``a_1 .. a_N``; ``a[n-1]`` is ``a_n``."""
        return self.log_h.coeffs[1:]

    @property
    def b(self) -> np.ndarray:
        return self.log_g.coeffs[1:]

    @cached_property
    def h(self) -> ComplexSeries:
        return cs.exp_series(self.log_h)

    @cached_property
    def g(self) -> ComplexSeries:
        return cs.exp_series(self.log_g)

    @cached_property
    def _dlog_h(self) -> ComplexSeries:
        return cs.differentiate(self.log_h)

    @cached_property
    def _dlog_g(self) -> ComplexSeries:
        return cs.differentiate(self.log_g)


# -- catalog ---------------------------------------------------------------

CATALOG_NAMES = ("koebe_alpha", "LR", "LS", "F_lambda", "f1", "f2", "identity")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    param: float | None = None

    def __post_init__(self):
        if self.name not in CATALOG_NAMES:
            raise BadParameter(f"unknown catalog map {self.name!r}")
        if self.name == "koebe_alpha":
            if self.param is None or not 0 <= self.param < 1:
                raise BadParameter("koebe_alpha needs alpha in [0, 1)")
        elif self.name == "F_lambda":
            if self.param is None or not 0 <= self.param <= 1:
                raise BadParameter("F_lambda needs lambda in [0, 1]")


def _koebe_type(c: float, p: float, order: int, **kw) -> LogHarmonicMap:
    n = np.arange(1, order + 1)
    return LogHarmonicMap.from_coefficients(c + 1 / n, c - p / n, order,
                                            closed_form=KoebeTypeForm(c, p), **kw)


def koebe_alpha(alpha: float, order: int = cs.DEFAULT_ORDER) -> LogHarmonicMap:
    """Extremal map of order ``alpha``; ``a_n = 2(1-a)+1/n``, ``b_n = 2(1-a)+(2a-1)/n``."""
    CatalogEntry("koebe_alpha", alpha)
    return _koebe_type(2 * (1 - alpha), 1 - 2 * alpha, order, alpha=alpha,
                       name=f"koebe_alpha({alpha:g})")


def f_lambda(lam: float, order: int = cs.DEFAULT_ORDER) -> LogHarmonicMap:
    """``F_lam = f1^lam f2^(1-lam)``; its associated analytic map is the Koebe function."""
    CatalogEntry("F_lambda", lam)
    return _koebe_type(2 * (1 - lam), 1.0, order, alpha=0.0, name=f"F_lambda({lam:g})")


def two_slit(order: int = cs.DEFAULT_ORDER) -> LogHarmonicMap:
    n = np.arange(1, order + 1)
    even = (n % 2 == 0).astype(float)
    return LogHarmonicMap.from_coefficients(even * (1 + 1 / n), even * (1 - 1 / n), order,
                                            closed_form=TwoSlitForm(), alpha=0.0, name="LS")


def identity(order: int = cs.DEFAULT_ORDER) -> LogHarmonicMap:
    z = ComplexSeries.zeros(order)
    return LogHarmonicMap(z, z, closed_form=IdentityForm(), alpha=0.0, name="identity")


def from_catalog(entry: CatalogEntry | str, param: float | None = None,
                 order: int = cs.DEFAULT_ORDER) -> LogHarmonicMap:
    if isinstance(entry, str):
        entry = CatalogEntry(entry, param)
    if entry.name == "koebe_alpha":
        return koebe_alpha(entry.param, order)
    if entry.name == "F_lambda":
        return f_lambda(entry.param, order)
    if entry.name == "f1":
        m = f_lambda(1.0, order)
    elif entry.name == "f2":
        m = f_lambda(0.0, order)
    elif entry.name == "LR":
        # LR is the order-1/2 extremal map
        m = koebe_alpha(0.5, order)
    elif entry.name == "LS":
        return two_slit(order)
    else:
        return identity(order)
    return LogHarmonicMap(m.log_h, m.log_g, m.closed_form, m.alpha, entry.name)


# -- pointwise evaluation ----------------------------------------------------

def _use_closed(m: LogHarmonicMap, method: str) -> bool:
    if method == "auto":
        return m.closed_form is not None
    if method == "closed":
        if m.closed_form is None:
            raise ValueError(f"{m.name} has no closed-form evaluator")
        return True
    if method == "series":
        return False
    raise ValueError(f"unknown method {method!r}")


def log_factors(m: LogHarmonicMap, z, method: str = "auto"):
    """``(log h(z), log g(z))``."""
    if _use_closed(m, method):
        return m.closed_form.log_h(z), m.closed_form.log_g(z)
    return cs.evaluate(m.log_h, z), cs.evaluate(m.log_g, z)


def dlog_factors(m: LogHarmonicMap, z, method: str = "auto"):
    """``(h'/h, g'/g)`` at ``z``."""
    if _use_closed(m, method):
        return m.closed_form.dlog_h(z), m.closed_form.dlog_g(z)
    return cs.evaluate(m._dlog_h, z), cs.evaluate(m._dlog_g, z)


def evaluate_h(m: LogHarmonicMap, z, method: str = "auto"):
    return np.exp(log_factors(m, z, method)[0])


def evaluate_g(m: LogHarmonicMap, z, method: str = "auto"):
    return np.exp(log_factors(m, z, method)[1])


def evaluate_f(m: LogHarmonicMap, z, method: str = "auto"):
    """``z h(z) conj(g(z))``."""
    z = np.asarray(z, dtype=complex)
    lh, lg = log_factors(m, z, method)
    with np.errstate(over="ignore", invalid="ignore"):
        out = z * np.exp(lh + np.conj(lg))
    return out if out.ndim else complex(out)


def log_abs_f(m: LogHarmonicMap, z, method: str = "auto"):
    """``log|f(z)|``; stays finite where ``|f|`` itself would overflow."""
    z = np.asarray(z, dtype=complex)
    lh, lg = log_factors(m, z, method)
    return np.log(np.abs(z)) + lh.real + lg.real


def dilatation(m: LogHarmonicMap, z, method: str = "auto"):
    """Second complex dilatation ``(z g'/g) / (1 + z h'/h)``."""
    z = np.asarray(z, dtype=complex)
    dh, dg = dlog_factors(m, z, method)
    den = 1 + z * dh
    if np.any(np.abs(den) < 1e-14):
        raise DenominatorVanishes("1 + z h'/h vanishes")
    out = z * dg / den
    return out if out.ndim else complex(out)


def jacobian(m: LogHarmonicMap, z, method: str = "auto"):
    """``|f_z|^2 (1 - |mu|^2)`` with ``f_z = h conj(g) (1 + z h'/h)``."""
    z = np.asarray(z, dtype=complex)
    lh, lg = log_factors(m, z, method)
    dh, _ = dlog_factors(m, z, method)
    fz = np.exp(lh + np.conj(lg)) * (1 + z * dh)
    mu = dilatation(m, z, method)
    out = np.abs(fz) ** 2 * (1 - np.abs(mu) ** 2)
    return out if out.ndim else float(out)


def associated_analytic(m: LogHarmonicMap) -> ComplexSeries:
    """Series of ``phi(z)/z = h/g`` where ``phi = z h / g``.

    The factor ``z`` is left off so the result has constant term 1.
    """
    return cs.exp_series(m.log_h - m.log_g)


def re_df_over_f(m: LogHarmonicMap, z, method: str = "auto"):
    """``Re((z f_z - conj(z) f_zbar) / f) = Re(1 + z h'/h) - Re(z g'/g)``."""
    z = np.asarray(z, dtype=complex)
    dh, dg = dlog_factors(m, z, method)
    return (1 + z * dh).real - (z * dg).real


def starlike_order_margin(m: LogHarmonicMap, alpha: float, grid: SamplingConfig | None = None,
                          method: str = "auto") -> VerificationReport:
    """Minimum of ``Re(Df/f) - alpha`` over the grid (which must avoid 0)."""
    grid = grid or SamplingConfig()
    z = grid.points()
    if np.any(np.abs(z) == 0):
        raise ValueError("grid must exclude z = 0")
    margins = re_df_over_f(m, z, method) - alpha
    return VerificationReport.from_margins(f"starlike_order[{m.name}]", z, margins, grid.tol,
                                           alpha=alpha)
