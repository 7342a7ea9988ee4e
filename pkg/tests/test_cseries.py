import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from logharmonic import cseries as cs
from logharmonic.cseries import ComplexSeries


def random_series(rng, order=64, scale=0.5, decay=0.8):
    n = np.arange(order + 1)
    c = scale * decay ** n * (rng.normal(size=order + 1) + 1j * rng.normal(size=order + 1))
    return ComplexSeries(c)


def zero_const(s):
    c = s.coeffs.copy()
    c[0] = 0
    return ComplexSeries(c)


seeds = st.integers(min_value=0, max_value=2**31 - 1)


def test_exp_of_geometric_log():
    # log(1/(1-z)) = sum z^n/n
    n = np.arange(1, 11)
    s = ComplexSeries(np.concatenate([[0], 1 / n]))
    assert np.allclose(cs.exp_series(s).coeffs, np.ones(11), atol=1e-14)


def test_log_of_one_plus_z():
    s = cs.log_series(ComplexSeries.from_coeffs([1, 1], 8))
    n = np.arange(1, 9)
    assert np.allclose(s.coeffs[1:], (-1.0) ** (n + 1) / n, atol=1e-15)


def test_log_rejects_constant_not_one():
    with pytest.raises(cs.BadConstantTerm):
        cs.log_series(ComplexSeries.from_coeffs([2, 1], 4))


def test_division_by_zero_constant():
    with pytest.raises(cs.ZeroConstantTerm):
        cs.div(ComplexSeries.constant(1, 4), ComplexSeries.variable(4))


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_exp_log_roundtrip(seed):
    s = zero_const(random_series(np.random.default_rng(seed)))
    back = cs.log_series(cs.exp_series(s))
    assert np.max(np.abs(back.coeffs - s.coeffs)) < 1e-12


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_derivative_identity(seed):
    s = zero_const(random_series(np.random.default_rng(seed)))
    e = cs.exp_series(s)
    lhs = cs.differentiate(e)
    rhs = cs.mul(cs.differentiate(s), e)
    # the top coefficient of a derivative is dropped by truncation
    assert np.max(np.abs(lhs.coeffs[:-1] - rhs.coeffs[:-1])) < 1e-12


@settings(max_examples=30, deadline=None)
@given(seeds)
def test_div_inverts_mul(seed):
    rng = np.random.default_rng(seed)
    # a zero-free divisor keeps 1/b bounded on the disk
    a, b = random_series(rng), cs.exp_series(zero_const(random_series(rng)))
    assert cs.div(cs.mul(a, b), b).allclose(a, 1e-11)


@settings(max_examples=30, deadline=None)
@given(seeds, st.floats(min_value=0.0, max_value=0.6))
def test_evaluate_matches_products(seed, r):
    rng = np.random.default_rng(seed)
    a, b = random_series(rng), random_series(rng)
    z = r * np.exp(2j * np.pi * rng.uniform(size=5))
    # truncation error of the product at |z| <= 0.6 is far below the tolerance
    assert np.allclose(cs.evaluate(a * b, z), cs.evaluate(a, z) * cs.evaluate(b, z), atol=1e-9)


def test_integrate_differentiate():
    s = zero_const(random_series(np.random.default_rng(0)))
    assert cs.integrate(cs.differentiate(s)).truncate(s.order - 1).allclose(s.truncate(s.order - 1), 1e-14)


def test_compose_with_identity():
    s = random_series(np.random.default_rng(1))
    assert cs.compose(s, ComplexSeries.variable(64)).allclose(s, 1e-15)


def test_compose_matches_pointwise():
    rng = np.random.default_rng(2)
    outer = random_series(rng)
    phi = cs.mobius_series(0.3 - 0.2j, 64)
    z = 0.2 * np.exp(2j * np.pi * rng.uniform(size=6))
    lhs = cs.evaluate(cs.compose(outer, phi), z)
    rhs = cs.evaluate(outer, cs.evaluate(phi, z))
    assert np.allclose(lhs, rhs, atol=1e-10)


def test_mobius_series():
    a = 0.4 + 0.3j
    z = np.array([0.1, -0.3j, 0.5 + 0.1j])
    exact = (z + a) / (1 + np.conj(a) * z)
    assert np.allclose(cs.evaluate(cs.mobius_series(a, 80), z), exact, atol=1e-12)


def test_taylor_coefficients_of_exp():
    from math import factorial
    s = cs.taylor_coefficients(np.exp, 12)
    assert np.allclose(s.coeffs, [1 / factorial(k) for k in range(13)], atol=1e-13)


def test_power_series_square_root():
    s = ComplexSeries.from_coeffs([1, -1], 16)
    root = cs.power_series(s, 0.5)
    assert cs.mul(root, root).allclose(s, 1e-14)


def test_operators_and_numpy_scalars():
    s = ComplexSeries.from_coeffs([1, 2, 3])
    w = np.float64(2.0)
    assert (w * s).allclose(ComplexSeries.from_coeffs([2, 4, 6]))
    assert (s - 1).allclose(ComplexSeries.from_coeffs([0, 2, 3]))
    assert (1 - s).allclose(ComplexSeries.from_coeffs([0, -2, -3]))
    assert s(0.0) == 1


def test_immutable():
    s = ComplexSeries.from_coeffs([1, 2])
    with pytest.raises(ValueError):
        s.coeffs[0] = 5


def test_tail_estimate_flags_boundary():
    s = ComplexSeries(np.ones(65))
    assert cs.tail_estimate(s, 0.5) < 1e-15
    assert cs.tail_estimate(s, 0.999) > 1e-2
    assert cs.tail_estimate(s, 1.0) == float("inf")
