import numpy as np
import pytest

from logharmonic import lhmap, repgen
from logharmonic.cseries import ComplexSeries
from logharmonic.sampling import SamplingConfig


Z = np.array([0.3, -0.5 + 0.2j, 0.1j, 0.7 * np.exp(2j), -0.85])


@pytest.mark.parametrize("alpha", [0.0, 0.25, 0.5, 0.75])
def test_koebe_closed_form_matches_series(alpha):
    m = lhmap.koebe_alpha(alpha, order=200)
    z = Z[np.abs(Z) < 0.75]
    assert np.allclose(lhmap.evaluate_f(m, z, "closed"), lhmap.evaluate_f(m, z, "series"), rtol=1e-9)


def test_koebe_on_real_axis():
    # f_alpha(r) = r (1-r)^(-2 alpha) exp(4(1-alpha) r/(1-r))
    alpha, r = 0.3, 0.6
    m = lhmap.koebe_alpha(alpha)
    exact = r * (1 - r) ** (-2 * alpha) * np.exp(4 * (1 - alpha) * r / (1 - r))
    assert lhmap.evaluate_f(m, r) == pytest.approx(exact, rel=1e-13)


def test_f1_is_modulus_preserving():
    m = lhmap.from_catalog("f1")
    assert np.allclose(np.abs(lhmap.evaluate_f(m, Z)), np.abs(Z), rtol=1e-13)


def test_dilatations_of_f1_and_f2():
    # f1 has dilatation -z and f2 has dilatation z
    assert np.allclose(lhmap.dilatation(lhmap.from_catalog("f1"), Z), -Z)
    assert np.allclose(lhmap.dilatation(lhmap.from_catalog("f2"), Z), Z)


def test_f_lambda_dilatation():
    lam = 0.3
    m = lhmap.f_lambda(lam)
    want = Z * ((1 - 2 * lam) + Z) / (1 + (1 - 2 * lam) * Z)
    assert np.allclose(lhmap.dilatation(m, Z), want, atol=1e-13)


def test_ls_matches_printed_formula():
    m = lhmap.from_catalog("LS")
    w = Z * Z
    want = Z / (1 - w) * np.abs(1 - w) * np.exp(np.real(2 * w / (1 - w)))
    assert np.allclose(lhmap.evaluate_f(m, Z), want, rtol=1e-13)


def test_lr_matches_printed_formula():
    m = lhmap.from_catalog("LR")
    want = Z / (1 - Z) * np.exp(np.real(2 * Z / (1 - Z)))
    assert np.allclose(lhmap.evaluate_f(m, Z), want, rtol=1e-13)


def test_identity():
    m = lhmap.from_catalog("identity")
    assert np.allclose(lhmap.evaluate_f(m, Z), Z)
    assert np.allclose(lhmap.re_df_over_f(m, Z), 1.0)


def test_series_map_without_closed_form():
    m0 = lhmap.koebe_alpha(0.5, order=120)
    m = lhmap.LogHarmonicMap(m0.log_h, m0.log_g, alpha=0.5)
    z = Z[np.abs(Z) < 0.75]
    assert np.allclose(lhmap.evaluate_f(m, z), lhmap.evaluate_f(m0, z), rtol=1e-9)
    with pytest.raises(ValueError):
        lhmap.evaluate_f(m, 0.1, method="closed")


def test_rejects_bad_inputs():
    with pytest.raises(lhmap.BadParameter):
        lhmap.koebe_alpha(1.0)
    with pytest.raises(lhmap.BadParameter):
        lhmap.CatalogEntry("nope")
    with pytest.raises(ValueError):
        lhmap.LogHarmonicMap(ComplexSeries.constant(1.0, 4), ComplexSeries.zeros(4))


def test_from_factors_roundtrip():
    m0 = lhmap.koebe_alpha(0.25, order=32)
    m = lhmap.LogHarmonicMap.from_factors(m0.h, m0.g)
    assert np.allclose(m.a, m0.a, atol=1e-8)


def test_jacobian_positive_for_generated():
    rng = np.random.default_rng(4)
    m = repgen.random_map(rng, 0.25)
    z = SamplingConfig.polar(count=10, angles=32).points()
    assert np.all(lhmap.jacobian(m, z) > 0)
    assert np.all(np.abs(lhmap.dilatation(m, z)) < 1)


@pytest.mark.parametrize("alpha", [0.0, 0.3, 0.8])
def test_starlike_order_of_generated(alpha):
    rng = np.random.default_rng(11)
    for _ in range(5):
        rep = lhmap.starlike_order_margin(repgen.random_map(rng, alpha), alpha)
        assert rep.passed, rep


def test_associated_analytic_koebe():
    # phi = z h/g; for koebe_alpha phi = z/(1-z)^(2-2 alpha)
    m = lhmap.koebe_alpha(0.25, order=20)
    s = lhmap.associated_analytic(m)
    z = np.array([0.2, -0.3j])
    assert np.allclose(s(z), (1 - z) ** (-1.5), atol=1e-10)
