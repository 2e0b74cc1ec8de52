import numpy as np
import pytest

import snwit


def _random_spectrum(g, k):
    mu = np.sort(g.uniform(0.0, 1.0, size=k * k))[::-1]
    return mu / np.sqrt((mu**2).sum())


def test_eval_f_special_points():
    g = np.random.default_rng(70)
    for k in (2, 3, 4):
        mu = _random_spectrum(g, k)
        e1 = np.zeros(k)
        e1[0] = 1.0
        assert abs(snwit.eval_F(mu, e1) - mu[0]) < 1e-14
        uniform = np.full(k, 1 / np.sqrt(k))
        assert abs(snwit.eval_F(mu, uniform) - mu.sum() / k) < 1e-12
        # concentrated spectrum picks out the largest product, s_1^2
        point = np.zeros(k * k)
        point[0] = 1.0
        s = np.sort(g.uniform(0, 1, size=k))[::-1]
        s /= np.linalg.norm(s)
        assert abs(snwit.eval_F(point, s) - s[0] ** 2) < 1e-14
        assert abs(snwit.eval_F(3.7 * mu, s) - 3.7 * snwit.eval_F(mu, s)) < 1e-12


def test_maximize_deterministic():
    mu = snwit.osc(snwit.rho_family(3))
    a = snwit.maximize_F(mu, 3, restarts=6, rng=4)
    b = snwit.maximize_F(mu, 3, restarts=6, rng=4)
    assert a.best_value == b.best_value
    assert (a.best_s == b.best_s).all()
    c = snwit.maximize_F(mu, 3, restarts=6, rng=np.random.default_rng(4))
    assert c.best_value == a.best_value


def test_maximize_result_shape():
    mu = snwit.osc(snwit.rho_family(4))
    res = snwit.maximize_F(mu, 4, restarts=5, rng=0)
    assert res.restarts == 5
    assert res.iterations >= 1
    s = res.best_s
    assert s.shape == (4,)
    assert (s >= 0).all()
    assert (np.diff(s) <= 1e-12).all()
    assert abs(np.linalg.norm(s) - 1) < 1e-12
    assert abs(snwit.eval_F(mu, s) - res.best_value) < 1e-12
    assert res.best_value >= snwit.eval_F(mu, np.array([1.0, 0, 0, 0])) - 1e-12
    assert res.best_value >= snwit.eval_F(mu, np.full(4, 0.5)) - 1e-12


def test_maximize_matches_k2_closed_form():
    for i in range(100):
        mu = _random_spectrum(np.random.default_rng([71, i]), 2)
        lam = snwit.lambda_exact(mu, 2)
        val = snwit.maximize_F(mu, 2, restarts=6, rng=i).best_value
        assert abs(val - lam) < 1e-6
        assert val <= lam + 1e-9


def test_maximize_never_exceeds_lambda():
    for i in range(60):
        g = np.random.default_rng([72, i])
        k = int(g.integers(2, 5))
        mu = _random_spectrum(g, k)
        lam = snwit.lambda_exact(mu, k)
        assert snwit.maximize_F(mu, k, restarts=4, rng=i).best_value <= lam + 1e-9


def test_maximize_family_five():
    mu = snwit.osc(snwit.rho_family(5))
    res = snwit.maximize_F(mu, 5, restarts=32, rng=7)
    assert abs(res.best_value - 0.6748721771370233) < 1e-12


def test_grid_oracle():
    g = np.random.default_rng(73)
    mu = _random_spectrum(g, 2)
    ref = snwit.maximize_F(mu, 2, restarts=6, rng=0).best_value
    assert abs(snwit.grid_oracle(mu, 2, resolution=200) - ref) < 1e-3

    mu3 = _random_spectrum(g, 3)
    coarse = snwit.grid_oracle(mu3, 3, resolution=40)
    fine = snwit.grid_oracle(mu3, 3, resolution=120)
    assert coarse <= fine + 1e-12
    assert fine <= snwit.maximize_F(mu3, 3, restarts=6, rng=0).best_value + 1e-9

    point = np.zeros(9)
    point[0] = 1.0
    assert abs(snwit.grid_oracle(point, 3, resolution=15) - 1.0) < 1e-14

    with pytest.raises(snwit.ValidationError):
        snwit.grid_oracle(mu3, 4, resolution=50)
    with pytest.raises(snwit.ValidationError):
        snwit.grid_oracle(mu3, 3, resolution=201)
