import math

import numpy as np
import pytest

import bifrac


def test_special_functions():
    assert bifrac.gamma_fn(5.0) == pytest.approx(24.0, rel=1e-12)
    x = 1.3
    exact = math.sqrt(math.pi / (2 * x)) * math.exp(-x)
    assert bifrac.bessel_k(0.5, x) == pytest.approx(exact, rel=1e-12)
    with pytest.raises(ValueError):
        bifrac.gamma_fn(-1.0)


def test_matern_and_expansion():
    assert bifrac.matern_correlation(0.7, 0.5, 2.0) == pytest.approx(
        math.exp(-1.4), rel=1e-12
    )
    params = bifrac.MaternParams()
    exp = bifrac.local_expansion(params)
    assert exp.alpha11 == pytest.approx(0.4)
    assert exp.alpha22 == pytest.approx(1.4)
    assert exp.equality_case()
    ok, reason = bifrac.check_validity(exp)
    assert ok, reason
    assert bifrac.trajectory_dimension(0.4, 1.4) == pytest.approx(2.1)


def test_simulation_is_deterministic():
    model = bifrac.MaternModel(bifrac.MaternParams())
    a = bifrac.simulate_path(model, 64, base_seed=5, replicate=1)
    b = bifrac.simulate_path(model, 64, base_seed=5, replicate=1)
    assert np.array_equal(np.asarray(a.x1), np.asarray(b.x1))
    c = bifrac.simulate_path(model, 64, base_seed=5, replicate=2)
    assert not np.array_equal(np.asarray(a.x1), np.asarray(c.x1))
    assert np.asarray(a.x1).shape == (64,)


def test_estimation_round_trip():
    params = bifrac.MaternParams()
    params.nu11 = params.nu22 = params.nu12 = 0.5
    model = bifrac.MaternModel(params)
    w = bifrac.ols_weights(10)
    assert sum(w.L) == pytest.approx(0.0, abs=1e-12)

    ests = []
    for r in range(20):
        path = bifrac.simulate_path(model, 500, base_seed=9, replicate=r)
        ests.append(bifrac.estimate_joint(path, w, w).nu11_hat)
    assert abs(np.mean(ests) - 0.5) < 0.1


def test_asymptotics_surface():
    exp = bifrac.local_expansion(bifrac.MaternParams())
    w = bifrac.ols_weights(5)
    law = bifrac.asymptotic_law(exp, w, w)
    cov = np.asarray(law.covariance)
    assert cov.shape == (2, 2)
    assert cov[0, 0] > 0
    assert bifrac.sigma0_marginal(0, 1, 1, 1.0, 1.0) == pytest.approx(4.0)
    phi = np.asarray(bifrac.phi0_matrix(exp, 3))
    assert phi.shape == (6, 6)
    assert np.allclose(phi, phi.T)
