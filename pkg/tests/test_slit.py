import numpy as np
import pytest

from logharmonic import lhmap, slit

LAMS = [0.0, 0.25, 0.5, 0.75, 1.0]


def test_tip_values():
    assert slit.slit_tip(0.0) == pytest.approx(-np.exp(-2))
    assert slit.slit_tip(0.5) == pytest.approx(-1 / np.e)
    assert slit.slit_tip(1.0) == -1


def test_inner_radius_endpoints_exact():
    assert slit.inner_radius(0.0) == 4 * np.exp(-2)
    assert slit.inner_radius(1.0) == 4.0


def test_inner_radius_monotone_and_bounded():
    lam = np.linspace(0, 1, 101)
    rho = np.array([slit.inner_radius(x) for x in lam])
    assert np.all(np.diff(rho) > 0)
    assert rho.min() >= 4 * np.exp(-2) and rho.max() <= 4


@pytest.mark.parametrize("lam", LAMS)
def test_numerical_tip(lam):
    a = slit.analyze(lam)
    assert a.tip_error < 1e-6
    assert a.rho0 == pytest.approx(4 * abs(a.tip))
    # the tip is the omitted point closest to 0
    assert a.boundary_min == pytest.approx(abs(a.tip), abs=1e-6)


def test_f_lambda_interpolates_catalog():
    z = np.array([0.3, -0.2 + 0.4j])
    f1, f2 = lhmap.from_catalog("f1"), lhmap.from_catalog("f2")
    lam = 0.3
    # |F_lam| = |f1|^lam |f2|^(1-lam)
    lhs = np.abs(lhmap.evaluate_f(lhmap.f_lambda(lam), z))
    rhs = np.abs(lhmap.evaluate_f(f1, z)) ** lam * np.abs(lhmap.evaluate_f(f2, z)) ** (1 - lam)
    assert np.allclose(lhs, rhs)


def test_bad_lambda():
    with pytest.raises(lhmap.BadParameter):
        slit.slit_tip(1.5)
    with pytest.raises(lhmap.BadParameter):
        slit.inner_radius(-0.1)


def test_lr_inner_radius():
    est = slit.catalog_inner_radius("LR")
    assert est.rho0 == pytest.approx(1 / np.e, abs=1e-8)


def test_ls_boundary_collapses_to_two_points():
    m = lhmap.from_catalog("LS")
    theta = np.linspace(0.05, np.pi - 0.05, 50)
    vals = lhmap.evaluate_f(m, (1 - 1e-9) * np.exp(1j * theta))
    assert np.allclose(vals, 1j / np.e, atol=1e-6)


def test_ls_inner_radius_is_two_over_e():
    # LS(iy) runs from 0 to i/e, so the slits of LS(D) start at +-i/e = (2/e) * (+-i/2)
    est = slit.catalog_inner_radius("LS")
    assert est.distance == pytest.approx(1 / np.e, abs=1e-8)
    assert est.rho0 == pytest.approx(2 / np.e, abs=1e-8)
    y = 0.5
    assert lhmap.evaluate_f(lhmap.from_catalog("LS"), 1j * y) == pytest.approx(
        1j * y * np.exp(-2 * y * y / (1 + y * y)))


def test_f1_f2_inner_radius():
    assert slit.catalog_inner_radius("f1").rho0 == pytest.approx(4.0)
    assert slit.catalog_inner_radius("f2").rho0 == pytest.approx(4 * np.exp(-2), abs=1e-8)
    with pytest.raises(lhmap.BadParameter):
        slit.catalog_inner_radius("identity")
