import csv
from pathlib import Path

import mpmath as mp
import numpy as np
import pytest

from logharmonic import bohr, lhmap, repgen

GOLDEN = Path(__file__).parent / "data" / "bohr_radii.csv"


def mp_root(alpha: str, which: str) -> float:
    """Bisection at 40 digits on the equations in their exponential form."""
    a = mp.mpf(alpha)
    with mp.workdps(40):
        if which == "r_H":
            F = lambda r: r / (1 - r) * mp.exp((1 - a) * 2 * r / (1 - r)) - 1 / (2 * mp.e ** (1 - a))
        elif which == "r_G":
            F = lambda r: (r / (1 - r) ** (2 * a - 1) * mp.exp((1 - a) * 2 * r / (1 - r))
                           - 1 / (2 ** (2 * a - 1) * mp.e ** (1 - a)))
        else:
            F = lambda r: (r / (1 - r) ** (2 * a) * mp.exp((1 - a) * 4 * r / (1 - r))
                           - 1 / (2 ** (2 * a) * mp.e ** (2 * (1 - a))))
        lo, hi = mp.mpf("1e-12"), 1 - mp.mpf("1e-12")
        for _ in range(160):
            mid = (lo + hi) / 2
            lo, hi = (mid, hi) if F(mid) < 0 else (lo, mid)
        return float((lo + hi) / 2)


def golden_rows():
    with open(GOLDEN) as fh:
        return {row["alpha"]: row for row in csv.DictReader(fh)}


@pytest.mark.parametrize("alpha", ["0.0", "0.35", "0.75"])
@pytest.mark.parametrize("which", bohr.WHICH)
def test_golden_spot_values_against_oracle(alpha, which):
    assert float(golden_rows()[alpha][which]) == pytest.approx(mp_root(alpha, which), abs=1e-14)


def test_solver_reproduces_golden_file():
    rows = golden_rows()
    assert len(rows) == 21
    for key, row in rows.items():
        sol = bohr.bohr_radii(float(key))
        for w in bohr.WHICH:
            assert repr(sol[w].root) == row[w]


@pytest.mark.parametrize("alpha", np.linspace(0, 1, 11))
def test_residuals(alpha):
    for s in bohr.bohr_radii(alpha).values():
        assert abs(s.residual) < 1e-12
        assert 0 < s.root < 1


def test_alpha_one_limits():
    r = bohr.bohr_radii(1.0)
    assert r["r_H"].root == pytest.approx(1 / 3, abs=1e-12)
    assert r["r_G"].root == pytest.approx(1 / 3, abs=1e-12)
    assert r["r_f"].root == pytest.approx(3 - 2 * np.sqrt(2), abs=1e-12)


def test_orderings_and_monotonicity():
    alphas = np.linspace(0, 1, 21)
    sols = [bohr.bohr_radii(a) for a in alphas]
    rh = np.array([s["r_H"].root for s in sols])
    rg = np.array([s["r_G"].root for s in sols])
    rf = np.array([s["r_f"].root for s in sols])
    assert np.all(rf < rh) and np.all(rf < rg)
    assert np.all(np.diff(rh) > 0)
    assert np.all(np.diff(rg) < 0)
    assert np.all(np.diff(rf) > 0)


def test_bad_alpha():
    with pytest.raises(ValueError):
        bohr.solve_bohr_radius(1.5, "r_H")
    with pytest.raises(ValueError):
        bohr.solve_bohr_radius(0.5, "r_x")


@pytest.mark.parametrize("alpha", [0.0, 0.5])
def test_koebe_is_extremal(alpha):
    m = lhmap.koebe_alpha(alpha)
    for which in ("H", "f"):
        rep = bohr.verify_bohr(m, which=which)
        assert rep.passed
        assert abs(rep.details["gap_at_radius"]) < 1e-6


def test_random_maps_H_and_f():
    rng = np.random.default_rng(12)
    for _ in range(3):
        m = repgen.random_map(rng, 0.25)
        for which in ("H", "f"):
            assert bohr.verify_bohr(m, which=which).passed


def test_G_fails_where_g_distance_collapses():
    # r_G is computed from a lower bound for d(0, dG(D)) that koebe_alpha(0) violates
    rep = bohr.verify_bohr(lhmap.koebe_alpha(0.0), which="G")
    assert not rep.passed


def test_tail_guard():
    m = lhmap.koebe_alpha(0.0, order=8)
    with pytest.raises(bohr.TailTooLarge):
        bohr.bohr_sum(m, 0.5)
