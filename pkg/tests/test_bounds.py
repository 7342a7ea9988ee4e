import numpy as np
import pytest

from logharmonic import bounds, lhmap, repgen
from logharmonic.repgen import DiscreteMeasure
from logharmonic.sampling import SamplingConfig

CFG = SamplingConfig.polar(count=20, angles=64)


@pytest.mark.parametrize("alpha", [0.0, 0.25, 0.5, 0.75])
def test_koebe_attains_f_bounds_on_real_axis(alpha):
    m = lhmap.koebe_alpha(alpha)
    r = np.array([0.1, 0.5, 0.9, 0.99])
    lo, hi = bounds.log_bounds_f(r, alpha)
    assert np.allclose(lhmap.log_abs_f(m, r), hi, atol=1e-9)
    assert np.allclose(lhmap.log_abs_f(m, -r), lo, atol=1e-9)


@pytest.mark.parametrize("alpha", [0.0, 0.4, 0.8])
def test_f_and_h_bounds_for_generated(alpha):
    rng = np.random.default_rng(21)
    for _ in range(4):
        parts = bounds.distortion_parts(repgen.random_map(rng, alpha), alpha, CFG)
        for key in ("f_lower", "f_upper", "h_lower", "h_upper", "g_upper"):
            assert parts[key].passed, (key, parts[key].worst_margin)


def test_g_lower_bound_fails_for_f1():
    # |g(r)| = 1 - r for f1 while the lower bound at alpha = 0 is (1+r) e^(-2r/(1+r))
    m = lhmap.from_catalog("f1")
    rep = bounds.distortion_parts(m, 0.0, CFG)["g_lower"]
    assert not rep.passed
    r = 0.5
    assert abs(lhmap.evaluate_g(m, r)) == pytest.approx(1 - r)
    assert bounds.bounds_g(r, 0.0)[0] == pytest.approx((1 + r) * np.exp(-2 * r / (1 + r)))
    assert abs(lhmap.evaluate_g(m, r)) < bounds.bounds_g(r, 0.0)[0]


def test_verify_distortion_report_fields():
    m = lhmap.koebe_alpha(0.5)
    rep = bounds.verify_distortion_f(m, cfg=CFG)
    assert rep.passed and rep.samples == CFG.size
    assert rep.worst_margin == pytest.approx(0.0, abs=1e-9)


def test_boundary_distance_koebe():
    assert bounds.boundary_distance(lhmap.koebe_alpha(0.0), "f") == pytest.approx(np.exp(-2), abs=1e-8)
    assert bounds.boundary_distance(lhmap.koebe_alpha(0.5), "H") == pytest.approx(1 / (2 * np.sqrt(np.e)), abs=1e-8)
    assert bounds.boundary_distance(lhmap.from_catalog("identity"), "f") == pytest.approx(1.0)


@pytest.mark.parametrize("which", ["H", "f"])
def test_boundary_distance_lower_bound(which):
    alpha = 0.25
    lo, _ = bounds.distance_interval(alpha, which)
    rng = np.random.default_rng(2)
    for _ in range(3):
        d = bounds.boundary_distance(repgen.random_map(rng, alpha), which)
        assert d >= lo - 1e-9


def test_boundary_distance_of_g_can_vanish():
    # g = 1 - z for f1, so G(z) = z(1-z) reaches 0 at z = 1
    assert bounds.boundary_distance(lhmap.from_catalog("f1"), "G") < 1e-6


def test_series_only_map_guards():
    k = lhmap.koebe_alpha(0.0, order=32)
    with pytest.raises(bounds.TruncationUnreliable):
        bounds.boundary_distance(lhmap.LogHarmonicMap(k.log_h, k.log_g), "f")


@pytest.mark.parametrize("alpha", [0.0, 0.25, 0.5, 0.75, 1.0])
def test_dirac_attains_coefficient_bounds(alpha):
    d = DiscreteMeasure.dirac()
    rep = bounds.verify_coefficient_bounds(d, d, alpha, 50)
    assert rep.passed and abs(rep.worst_margin) < 1e-10


def test_random_coefficient_bounds():
    rng = np.random.default_rng(9)
    for alpha in (0.0, 0.5):
        for _ in range(30):
            rep = bounds.verify_coefficient_bounds(DiscreteMeasure.random(rng), DiscreteMeasure.random(rng),
                                                   alpha, 30)
            assert rep.passed, rep.details


def test_distance_interval_values():
    assert bounds.distance_interval(0.0, "f")[0] == pytest.approx(np.exp(-2))
    assert bounds.distance_interval(0.5, "H")[0] == pytest.approx(0.5 * np.exp(-0.5))
    with pytest.raises(ValueError):
        bounds.distance_interval(0.5, "x")
