import numpy as np
import pytest

import snwit


def _random_spectrum(g, k):
    mu = np.sort(g.uniform(0.0, 1.0, size=k * k))[::-1]
    return mu / np.sqrt((mu**2).sum())


def test_canonical_indices():
    mu9 = np.arange(9, 0, -1, dtype=float)
    assert (snwit.canonical_matrix(mu9, 3).indices == [[1, 2, 4], [3, 6, 7], [5, 8, 9]]).all()
    idx4 = snwit.canonical_matrix(np.arange(16, 0, -1, dtype=float), 4).indices
    assert (idx4 == [[1, 2, 4, 6], [3, 8, 9, 11], [5, 10, 13, 14], [7, 12, 15, 16]]).all()
    idx5 = snwit.canonical_matrix(np.ones(25), 5).indices
    assert (idx5[0] == [1, 2, 4, 6, 8]).all()
    assert (idx5[:, 0] == [1, 3, 5, 7, 9]).all()
    assert idx5[4, 4] == 25


def test_canonical_matrix_values_and_padding():
    mu = np.arange(16, 0, -1, dtype=float)
    m = snwit.canonical_matrix(mu, 4)
    assert np.abs(m.values - mu[m.indices - 1]).max() == 0.0
    # short spectrum is zero padded
    padded = snwit.canonical_matrix(np.array([1.0]), 3)
    assert padded.values[0, 0] == 1.0
    assert np.abs(padded.values).sum() == 1.0


def test_arrangement_set():
    assert len(snwit.arrangement_set(2)) == 1
    assert len(snwit.arrangement_set(3)) == 2
    assert len(snwit.arrangement_set(4)) == 12
    for k in (2, 3, 4):
        pats = snwit.arrangement_set(k)
        canonical = snwit.canonical_matrix(np.ones(k * k), k).indices
        assert (pats[0] == canonical).all()
        for pat in pats:
            assert sorted(pat.ravel()) == list(range(1, k * k + 1))
            assert pat[0, 0] == 1
            assert pat[0, 1] == 2
            assert pat[-1, -1] == k * k
    with pytest.raises(snwit.ValidationError):
        snwit.arrangement_set(5)


def test_lambda_k2_closed_form():
    assert abs(snwit.lambda_exact([1.0, 0.0, 0.0, 0.0], 2) - 1.0) < 1e-14
    for i in range(100):
        mu = _random_spectrum(np.random.default_rng([61, i]), 2)
        m = np.array([[mu[0], mu[1]], [mu[2], mu[3]]])
        direct = np.linalg.eigvalsh((m + m.T) / 2).max()
        assert abs(snwit.lambda_exact(mu, 2) - direct) < 1e-12


def test_lambda_reference_values():
    assert abs(snwit.lambda_exact(snwit.osc(snwit.rho0()), 4) - 0.6858556589534968) < 1e-12
    mu3 = snwit.osc(snwit.rho_family(3))
    assert abs(snwit.lambda_exact(mu3, 3) - 0.6813320290934708) < 1e-12
    mu4 = snwit.osc(snwit.rho_family(4))
    assert abs(snwit.lambda_exact(mu4, 4) - 0.6715351654086266) < 1e-12
    for k in (3, 4):
        e1 = np.zeros(k * k)
        e1[0] = 1.0
        assert abs(snwit.lambda_exact(e1, k) - 1.0) < 1e-14
    with pytest.raises(snwit.ValidationError):
        snwit.lambda_exact(np.ones(25) / 5, 5)


def test_row_sums_match_canonical_matrix():
    for k in (2, 3, 4, 5):
        mu = _random_spectrum(np.random.default_rng([62, k]), k)
        m = snwit.canonical_matrix(mu, k)
        rows = m.values.sum(axis=1)
        assert abs(snwit.first_row_sum(mu, k) - rows[0]) < 1e-14
        assert abs(snwit.last_row_sum(mu, k) - rows[-1]) < 1e-14
        assert rows[0] + 1e-12 >= rows.max()
        assert rows[-1] <= rows.min() + 1e-12


def test_bound_values_family_three():
    mu = snwit.osc(snwit.rho_family(3))
    assert abs(snwit.theta(mu, 3) - 0.9409585518440985) < 1e-12
    assert abs(snwit.zeta(mu, 3) - 0.9601860806555912) < 1e-12
    assert abs(snwit.eta(mu, 3) - 0.9647791890991355) < 1e-12
    assert abs(snwit.first_row_sum(mu.mu, 3) - 1.0) < 1e-12


def test_bound_values_family_four_closed_forms():
    mu = snwit.osc(snwit.rho_family(4))
    assert abs(snwit.theta(mu, 4) - (2 + np.sqrt(3)) / 4) < 1e-12
    assert abs(snwit.zeta(mu, 4) - (1 - (1 - np.sqrt(3 / 7)) / 8)) < 1e-12
    assert abs(snwit.eta(mu, 4) - (1 - (1 - np.sqrt(0.5)) / 8)) < 1e-12
    assert abs(snwit.first_row_sum(mu.mu, 4) - 1.0) < 1e-12


def test_bound_values_family_five():
    mu = snwit.osc(snwit.rho_family(5))
    assert abs(snwit.theta(mu, 5) - 0.9947073557013985) < 1e-12
    assert abs(snwit.zeta(mu, 5) - 1.014888568452305) < 1e-12
    assert abs(snwit.eta(mu, 5) - 1.0190065559342354) < 1e-12
    assert abs(snwit.first_row_sum(mu.mu, 5) - 1.05) < 1e-12
    assert abs(snwit.last_row_sum(mu.mu, 5) - 0.5) < 1e-12


def test_bounds_collapse_to_first_row_sum():
    # trailing zeros: m = 0 so every bound equals P
    mu0 = snwit.osc(snwit.rho0())
    P = snwit.first_row_sum(mu0.mu, 4)
    assert abs(P - (np.sqrt(10) / 6 + 5 / 12)) < 1e-12
    for fn in (snwit.theta, snwit.zeta, snwit.eta):
        assert fn(mu0, 4) == P
    # flat spectrum: equal row sums, exact equality again
    flat = np.full(16, 0.3)
    for fn in (snwit.theta, snwit.zeta, snwit.eta):
        assert fn(flat, 4) == snwit.first_row_sum(flat, 4)


def test_scale_covariance():
    g = np.random.default_rng(63)
    for k in (2, 3, 4):
        mu = _random_spectrum(g, k)
        for c in (0.1, 3.7):
            for fn in (snwit.lambda_exact, snwit.theta, snwit.zeta, snwit.eta, snwit.first_row_sum):
                assert abs(fn(c * mu, k) - c * fn(mu, k)) < 1e-10


def test_chain_on_random_spectra():
    for i in range(200):
        g = np.random.default_rng([64, i])
        k = int(g.integers(2, 5))
        mu = _random_spectrum(g, k)
        if i % 4 == 0:
            mu = mu.copy()
            mu[-int(g.integers(1, k)) :] = 0.0
        vals = [
            snwit.lambda_exact(mu, k),
            snwit.theta(mu, k),
            snwit.zeta(mu, k),
            snwit.eta(mu, k),
            snwit.first_row_sum(mu, k),
        ]
        for a, b in zip(vals, vals[1:]):
            assert a <= b + 1e-9


def test_coefficients_bundle():
    bundle = snwit.coefficients(snwit.rho_family(3), 3)
    assert bundle.target_sn == 4
    assert bundle.lambda_numeric is None
    assert abs(bundle.lambda_exact - 0.6813320290934708) < 1e-12
    assert abs(bundle.big_p - 1.0) < 1e-12

    with_num = snwit.coefficients(snwit.rho_family(3), 3, with_numeric=True, rng=5, restarts=8)
    assert with_num.lambda_numeric is not None
    assert with_num.lambda_numeric <= with_num.lambda_exact + 1e-9

    five = snwit.coefficients(snwit.rho_family(5), 5, rng=7)
    assert five.lambda_exact is None
    assert five.lambda_numeric is not None
    assert five.lambda_numeric <= five.theta + 1e-9

    mm = snwit.BipartiteState(3, 3, np.eye(9, dtype=complex) / 9)
    flat = snwit.coefficients(mm, 3)
    for v in (flat.lambda_exact, flat.theta, flat.zeta, flat.eta, flat.big_p):
        assert abs(v - 1 / 3) < 1e-9


def test_coefficients_chain_enforced():
    with pytest.raises(snwit.ValidationError):
        snwit.WitnessCoefficients(
            target_sn=4, lambda_exact=0.9, lambda_numeric=None, theta=0.7, zeta=0.8, eta=0.85, big_p=1.0
        )


def test_build_and_evaluate_witness():
    state = snwit.rho0()
    w = snwit.build_witness(state, 4, "lambda")
    assert abs(w.coefficient - 0.6858556589534968) < 1e-12
    value = snwit.evaluate_witness(w, state)
    assert abs(value - 0.1847) < 2e-3
    assert value > 0  # rho0 itself is not flagged by its own lambda witness

    phi4 = snwit.max_entangled(4).projector()
    wf = snwit.build_witness(phi4, 3, "fixed", fixed_value=0.75)
    assert abs(snwit.evaluate_witness(wf, phi4) + 0.25) < 1e-12

    bell = snwit.max_entangled(2).projector()
    w1 = snwit.build_witness(bell, 1, "mu1")
    assert abs(w1.coefficient - 0.5) < 1e-12
    assert abs(snwit.evaluate_witness(w1, bell) + 0.5) < 1e-12

    wn = snwit.build_witness(state, 4, "numeric", rng=1, restarts=8)
    assert abs(wn.coefficient - w.coefficient) < 1e-6


def test_witness_validation():
    state = snwit.rho0()
    with pytest.raises(snwit.ValidationError):
        snwit.build_witness(state, 4, "fixed")
    with pytest.raises(snwit.ValidationError):
        snwit.build_witness(state, 5, "lambda")
    with pytest.raises(snwit.ValidationError):
        snwit.build_witness(state, 4, "nope")
    with pytest.raises(snwit.ValidationError):
        snwit.build_witness(state, 4, "fixed", fixed_value=-0.2)
    w = snwit.build_witness(state, 4, "theta")
    with pytest.raises(snwit.ValidationError):
        snwit.evaluate_witness(w, snwit.max_entangled(3).projector())


def test_fidelity_bound():
    assert snwit.fidelity_bound(1, 4) == 0.25
    assert snwit.fidelity_bound(4, 4) == 1.0
    with pytest.raises(snwit.ValidationError):
        snwit.fidelity_bound(0, 4)
    with pytest.raises(snwit.ValidationError):
        snwit.fidelity_bound(5, 4)
    phi = snwit.max_entangled(4)
    cap = snwit.fidelity_bound(3, 4)
    for i in range(100):
        sigma = snwit.random_sn_bounded(4, 3, 50, np.random.default_rng([55, i]))
        overlap = float((phi.amplitudes.conj() @ sigma.matrix @ phi.amplitudes).real)
        assert overlap <= cap + 1e-9
