"""Supremum engine and named norms, with 1-d maximization oracles."""

import os

import numpy as np
import pytest
from scipy.optimize import minimize_scalar

from harmdist.analytic import ExpMap, HalfPlane, Identity, Koebe, LogMap, Monomial
from harmdist.errors import ParameterError
from harmdist.harmonic import shear_linear
from harmdist.norms import (
    beta_lambda,
    becker_harmonic_norm,
    harmonic_schwarzian_norm,
    omega_inf_norm,
    omega_star_norm,
    order_of,
    polar_grid,
    pre_schwarzian_norm,
    schwarzian_norm,
    sup_weighted,
)

GRID = (48, 128)  # slightly coarse for speed; refinement recovers accuracy


def _oracle_radial(func, r_max=0.999):
    """Maximize func(r e^{i theta}) over r for theta in {0, pi} (scipy)."""
    best = func(np.array([0.0 + 0j]))[0]
    for sign in (1.0, -1.0):
        res = minimize_scalar(
            lambda r: -func(np.array([sign * r + 0j]))[0],
            bounds=(0.0, r_max), method="bounded",
            options={"xatol": 1e-12},
        )
        best = max(best, -res.fun)
    return best


def test_polar_grid_contains_origin_and_caps_radius():
    z = polar_grid(0.9, 8, 16)
    assert z[0] == 0.0
    assert np.abs(z).max() == pytest.approx(0.9)
    assert len(z) == 8 * 16 + 1


def test_sup_engine_exact_on_known_functional():
    # func = |z|^2 has supremum r_max^2 on the rim
    est = sup_weighted(lambda z: np.abs(z) ** 2, "toy", 0.9, (16, 32))
    assert est.value == pytest.approx(0.81, rel=1e-6)
    assert abs(est.argmax_point) == pytest.approx(0.9, rel=1e-9)


def test_refinement_never_decreases():
    func = lambda z: np.cos(5.0 * np.angle(z + 1e-30)) * np.abs(z)
    coarse = sup_weighted(func, "toy", 0.9, (6, 7), refine=False)
    refined = sup_weighted(func, "toy", 0.9, (6, 7), refine=True)
    assert refined.value >= coarse.value


def test_deterministic_under_thread_count():
    func = lambda z: np.abs(z) * (1.0 + 0.1 * np.cos(3 * np.angle(z + 1e-30)))
    base = sup_weighted(func, "toy", 0.95, GRID)
    os.environ["HARMDIST_THREADS"] = "4"
    try:
        threaded = sup_weighted(func, "toy", 0.95, GRID)
    finally:
        os.environ.pop("HARMDIST_THREADS")
    assert threaded.value == base.value
    assert threaded.argmax_point == base.argmax_point


def test_schwarzian_norm_fixtures_vs_oracle():
    from harmdist.norms import schwarzian_functional

    est = schwarzian_norm(Koebe(), grid=GRID)
    oracle = _oracle_radial(schwarzian_functional(Koebe()))
    assert est.value == pytest.approx(6.0, abs=2e-4)
    assert est.value == pytest.approx(oracle, rel=1e-6)

    est = schwarzian_norm(LogMap(), grid=GRID)
    assert est.value == pytest.approx(2.0, abs=2e-4)


def test_pre_schwarzian_norm_variants():
    # (1 - |z|^2)|P exp| = 1 - |z|^2 -> sup exactly 1 at z = 0
    est = pre_schwarzian_norm(ExpMap(1.0), with_z=False, grid=GRID)
    assert est.value == pytest.approx(1.0, abs=1e-12)
    assert est.argmax_point == 0.0
    # classical variant multiplies by |z| and peaks at r = 1/sqrt(3)
    est = pre_schwarzian_norm(ExpMap(1.0), with_z=True, grid=GRID)
    assert est.value == pytest.approx(2.0 / (3.0 * np.sqrt(3.0)), abs=1e-6)


def test_harmonic_schwarzian_norm_of_harmonic_mobius():
    from harmdist.harmonic import harmonic_mobius

    est = harmonic_schwarzian_norm(harmonic_mobius(HalfPlane(), 0.3), grid=GRID)
    assert est.value <= 1e-9


def test_omega_inf_norm():
    f = shear_linear(Identity(), 0.3)
    est = omega_inf_norm(f, grid=GRID)
    # sup |0.3 z| on |z| <= 0.999
    assert est.value == pytest.approx(0.3 * 0.999, rel=1e-9)


def test_omega_star_norm_schwarz_pick_ceiling():
    for omega in (Monomial(0.3, 1), Monomial(1.0, 1), Monomial(1.0, 2)):
        est = omega_star_norm(omega, grid=GRID)
        assert est.value <= 1.0 + 1e-12


def test_becker_harmonic_norm_zero_dilatation_reduces():
    # for g = 0 the functional is the classical |z P| form
    from harmdist.harmonic import analytic_as_harmonic

    f = analytic_as_harmonic(ExpMap(1.0))
    est = becker_harmonic_norm(f, grid=GRID)
    ref = pre_schwarzian_norm(ExpMap(1.0), with_z=True, grid=GRID)
    assert est.value == pytest.approx(ref.value, rel=1e-9)


def test_order_fixtures_vs_radial_oracle():
    from harmdist.norms import order_integrand

    est = order_of(Koebe(), grid=GRID)
    assert est.alpha == pytest.approx(2.0, abs=1e-4)
    assert est.alpha == pytest.approx(_oracle_radial(order_integrand(Koebe())), rel=1e-5)
    est = order_of(HalfPlane(), grid=GRID)
    assert est.alpha == pytest.approx(1.0, abs=1e-4)


def test_order_renormalizes_when_needed():
    from harmdist.analytic import Affine

    shifted = Affine(Koebe(), 2.0, 0.5, name="scaled-koebe")
    est = order_of(shifted, grid=GRID)
    assert not est.normalized
    assert est.alpha == pytest.approx(2.0, abs=1e-4)


def test_beta_lambda_policy():
    assert beta_lambda(1.0, Monomial(0.5, 1), grid=GRID) == pytest.approx(1.5, abs=1e-6)
    assert beta_lambda(2.0, Monomial(1.0, 1), grid=GRID) == 2.0  # capped
    with pytest.raises(ParameterError):
        beta_lambda(0.5, Monomial(0.3, 1))
