"""Truncated power series with complex coefficients.

A :class:`ComplexSeries` holds ``c_0 .. c_N`` densely.  Binary operations
truncate to the smaller of the two orders.  Everything here is pure; series
are immutable once built.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_ORDER = 64
CONSTANT_TOL = 1e-12


class SeriesError(ValueError):
    pass


class ZeroConstantTerm(SeriesError):
    pass


class BadConstantTerm(SeriesError):
    pass


@dataclass(frozen=True, eq=False)
class ComplexSeries:
    coeffs: np.ndarray

    # numpy scalars must defer to our reflected operators
    __array_ufunc__ = None

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex).ravel()
        if c.size < 1:
            raise SeriesError("a series needs at least one coefficient")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    @classmethod
    def zeros(cls, order: int = DEFAULT_ORDER) -> "ComplexSeries":
        return cls(np.zeros(order + 1, dtype=complex))

    @classmethod
    def constant(cls, value: complex, order: int = DEFAULT_ORDER) -> "ComplexSeries":
        c = np.zeros(order + 1, dtype=complex)
        c[0] = value
        return cls(c)

    @classmethod
    def from_coeffs(cls, coeffs, order: int | None = None) -> "ComplexSeries":
        """Pad (with zeros) or cut ``coeffs`` to ``order``."""
        c = np.asarray(coeffs, dtype=complex).ravel()
        if order is None:
            return cls(c)
        out = np.zeros(order + 1, dtype=complex)
        m = min(c.size, order + 1)
        out[:m] = c[:m]
        return cls(out)

    @classmethod
    def variable(cls, order: int = DEFAULT_ORDER) -> "ComplexSeries":
        return cls.from_coeffs([0, 1], order)

    def truncate(self, order: int) -> "ComplexSeries":
        return ComplexSeries.from_coeffs(self.coeffs, order)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return self.coeffs.size

    def __repr__(self):
        head = ", ".join(f"{c:.6g}" for c in self.coeffs[:5])
        more = ", ..." if self.order >= 5 else ""
        return f"ComplexSeries([{head}{more}], order={self.order})"

    def __add__(self, other):
        return add(self, _coerce(other, self.order))

    __radd__ = __add__

    def __sub__(self, other):
        return add(self, scale(_coerce(other, self.order), -1))

    def __rsub__(self, other):
        return add(_coerce(other, self.order), scale(self, -1))

    def __neg__(self):
        return scale(self, -1)

    def __mul__(self, other):
        if np.isscalar(other):
            return scale(self, other)
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if np.isscalar(other):
            return scale(self, 1 / other)
        return div(self, other)

    def __rtruediv__(self, other):
        return div(_coerce(other, self.order), self)

    def __call__(self, z):
        return evaluate(self, z)

    def allclose(self, other: "ComplexSeries", atol: float = 1e-12) -> bool:
        n = min(self.order, other.order) + 1
        return bool(np.max(np.abs(self.coeffs[:n] - other.coeffs[:n])) <= atol)


def _coerce(x, order: int) -> ComplexSeries:
    if isinstance(x, ComplexSeries):
        return x
    return ComplexSeries.constant(x, order)


def add(a: ComplexSeries, b: ComplexSeries) -> ComplexSeries:
    n = min(a.order, b.order) + 1
    return ComplexSeries(a.coeffs[:n] + b.coeffs[:n])


def scale(a: ComplexSeries, c: complex) -> ComplexSeries:
    return ComplexSeries(a.coeffs * c)


def mul(a: ComplexSeries, b: ComplexSeries) -> ComplexSeries:
    """Cauchy product truncated at ``min(a.order, b.order)``."""
    n = min(a.order, b.order) + 1
    return ComplexSeries(np.convolve(a.coeffs[:n], b.coeffs[:n])[:n])


def div(a: ComplexSeries, b: ComplexSeries) -> ComplexSeries:
    """Return ``q`` with ``q * b == a`` up to truncation."""
    n = min(a.order, b.order) + 1
    bc = b.coeffs[:n]
    if abs(bc[0]) < CONSTANT_TOL:
        raise ZeroConstantTerm("divisor has a vanishing constant term")
    ac = a.coeffs[:n]
    q = np.zeros(n, dtype=complex)
    for k in range(n):
        q[k] = (ac[k] - np.dot(q[:k], bc[k:0:-1])) / bc[0]
    return ComplexSeries(q)


def exp_series(s: ComplexSeries) -> ComplexSeries:
    """Exponential via ``E' = s' E``, i.e. ``n E_n = sum_k k s_k E_{n-k}``."""
    c = s.coeffs
    n_terms = c.size
    ks = np.arange(n_terms) * c
    e = np.zeros(n_terms, dtype=complex)
    e[0] = np.exp(c[0])
    for n in range(1, n_terms):
        # ks[1..n] against e[n-1..0]
        e[n] = np.dot(ks[1 : n + 1], e[n - 1 :: -1][:n]) / n
    return ComplexSeries(e)


def log_series(s: ComplexSeries) -> ComplexSeries:
    """Logarithm of a series with constant term 1; ``L_0 = 0``."""
    c = s.coeffs
    if abs(c[0] - 1) > CONSTANT_TOL:
        raise BadConstantTerm(f"log_series needs constant term 1, got {c[0]!r}")
    n_terms = c.size
    kl = np.zeros(n_terms, dtype=complex)  # k * L_k
    for n in range(1, n_terms):
        # n L_n = n c_n - sum_{k=1}^{n-1} k L_k c_{n-k}
        kl[n] = n * c[n] - np.dot(kl[1:n], c[n - 1 : 0 : -1])
    out = np.zeros(n_terms, dtype=complex)
    out[1:] = kl[1:] / np.arange(1, n_terms)
    return ComplexSeries(out)


def power_series(s: ComplexSeries, p: complex) -> ComplexSeries:
    """Principal ``s**p`` for a series with constant term 1."""
    return exp_series(scale(log_series(s), p))


def differentiate(s: ComplexSeries) -> ComplexSeries:
    """Termwise derivative; the result keeps ``s.order`` (top coefficient 0)."""
    c = s.coeffs
    out = np.zeros_like(c)
    out[:-1] = c[1:] * np.arange(1, c.size)
    return ComplexSeries(out)


def integrate(s: ComplexSeries) -> ComplexSeries:
    """Antiderivative vanishing at 0, truncated to ``s.order``."""
    c = s.coeffs
    out = np.zeros_like(c)
    out[1:] = c[:-1] / np.arange(1, c.size)
    return ComplexSeries(out)


def shift_up(s: ComplexSeries) -> ComplexSeries:
    """Multiply by ``z`` keeping the order."""
    out = np.zeros_like(s.coeffs)
    out[1:] = s.coeffs[:-1]
    return ComplexSeries(out)


def compose(outer: ComplexSeries, inner: ComplexSeries) -> ComplexSeries:
    """Truncated ``outer(inner(z))`` by Horner's rule.

    ``inner`` may have a nonzero constant term; the truncated polynomial
    ``outer`` is then composed exactly.  Values of ``inner`` must stay where
    ``outer`` is meant to be evaluated (for maps of the disk, ``|inner| < 1``).
    """
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    acc = ComplexSeries.constant(outer.coeffs[outer.order], n)
    for c in outer.coeffs[-2::-1]:
        acc = mul(acc, inner) + c
    return acc


def evaluate(s: ComplexSeries, z):
    """Horner evaluation; accepts scalars or arrays of ``z``."""
    z = np.asarray(z, dtype=complex)
    acc = np.full(z.shape, s.coeffs[-1], dtype=complex)
    for c in s.coeffs[-2::-1]:
        acc = acc * z + c
    return acc if acc.ndim else complex(acc)


def tail_estimate(s: ComplexSeries, r: float, k: int = 8) -> float:
    """Crude size of the omitted tail at radius ``r``.

    Extrapolates the last ``k`` coefficient moduli geometrically; only meant
    as a flag for evaluations too close to the circle of convergence.
    """
    mags = np.abs(s.coeffs[-k:])
    top = float(mags.max(initial=0.0))
    if top == 0.0 or r <= 0:
        return 0.0
    if r >= 1:
        return float("inf")
    return top * r ** (s.order + 1) / (1 - r)


def taylor_coefficients(func, order: int = DEFAULT_ORDER, radius: float = 0.5,
                        samples: int | None = None) -> ComplexSeries:
    """Taylor coefficients of an analytic callable by the trapezoid rule on a circle."""
    m = samples or max(4 * (order + 1), 256)
    w = radius * np.exp(2j * np.pi * np.arange(m) / m)
    vals = np.asarray(func(w), dtype=complex)
    c = np.fft.fft(vals) / m
    c = c[: order + 1] / radius ** np.arange(order + 1)
    return ComplexSeries(c)


def mobius_series(a: complex, order: int = DEFAULT_ORDER) -> ComplexSeries:
    """Series of the disk automorphism ``(z + a) / (1 + conj(a) z)``."""
    num = ComplexSeries.from_coeffs([a, 1], order)
    den = ComplexSeries.from_coeffs([1, np.conj(a)], order)
    return div(num, den)
