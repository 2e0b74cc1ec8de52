import numpy as np
import pytest

import snwit

A = [[1.0, 2.0], [3.0, 4.0]]


def test_row_sum_stats():
    st = snwit.row_sum_stats(A)
    assert np.abs(st.row_sums - [3, 7]).max() < 1e-14
    assert st.p == 3.0
    assert st.P == 7.0
    assert st.m == 1.0


def test_input_validation():
    with pytest.raises(snwit.ValidationError):
        snwit.row_sum_stats([[1, -2], [3, 4]])
    with pytest.raises(snwit.ValidationError):
        snwit.row_sum_stats([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(snwit.ValidationError):
        snwit.spectral_radius([1, 2, 3])


def test_spectral_radius():
    assert abs(snwit.spectral_radius([[0, 1], [1, 0]]) - 1) < 1e-12
    assert abs(snwit.spectral_radius([[2, 0], [0, 3]]) - 3) < 1e-12
    assert abs(snwit.spectral_radius(A) - (5 + np.sqrt(33)) / 2) < 1e-12


def test_pairs_on_reference_matrix():
    fr = snwit.frobenius_bounds(A)
    le = snwit.ledermann_bounds(A)
    os_ = snwit.ostrowski_bounds(A)
    br = snwit.brauer_bounds(A)
    assert (fr.lower, fr.upper) == (3.0, 7.0)
    assert abs(le.lower - 3.5275252316519468) < 1e-12
    assert abs(le.upper - 6.654653670707977) < 1e-12
    assert abs(os_.lower - 3.7320508075688776) < 1e-12
    assert abs(os_.upper - 6.577350269189626) < 1e-12
    assert abs(br.lower - 3.5311288741492746) < 1e-12
    assert abs(br.upper - 6.372281323269014) < 1e-12
    assert br.method == "brauer"
    # refinement order of the upper bounds on this matrix
    assert br.upper < os_.upper < le.upper < fr.upper


def test_equal_row_sums_collapse():
    for mat in (np.ones((3, 3)), [[1.0, 2.0], [2.0, 1.0]], [[5.0]]):
        rho = snwit.spectral_radius(mat)
        for fn in (
            snwit.frobenius_bounds,
            snwit.ledermann_bounds,
            snwit.ostrowski_bounds,
            snwit.brauer_bounds,
        ):
            b = fn(mat)
            assert abs(b.lower - rho) < 1e-12
            assert abs(b.upper - rho) < 1e-12


def test_zero_entry_reduces_to_frobenius():
    mat = [[0.0, 2.0], [3.0, 4.0]]
    for fn in (snwit.ledermann_bounds, snwit.brauer_bounds):
        b = fn(mat)
        assert (b.lower, b.upper) == (2.0, 7.0)


def test_ledermann_three_distinct_row_sums():
    mat = [[0.5, 0.5, 1.0], [1.0, 1.0, 1.0], [2.0, 2.0, 3.0]]
    st = snwit.row_sum_stats(mat)
    # closest pair of row sums (2, 3) sets delta
    delta = 2.0 / 3.0
    b = snwit.ledermann_bounds(mat)
    assert abs(b.lower - (st.p + st.m * (1 / np.sqrt(delta) - 1))) < 1e-14
    assert abs(b.upper - (st.P - st.m * (1 - np.sqrt(delta)))) < 1e-14
    rho = snwit.spectral_radius(mat)
    assert b.lower <= rho + 1e-12 <= b.upper + 2e-12


def test_sandwich_on_random_matrices():
    methods = (
        snwit.frobenius_bounds,
        snwit.ledermann_bounds,
        snwit.ostrowski_bounds,
        snwit.brauer_bounds,
    )
    for i in range(300):
        g = np.random.default_rng([7, i])
        n = int(g.integers(2, 7))
        mat = g.uniform(0.0, 1.0, size=(n, n))
        if i % 5 == 0:
            mat[tuple(g.integers(0, n, size=2))] = 0.0
        rho = snwit.spectral_radius(mat)
        for fn in methods:
            b = fn(mat)
            assert b.lower <= rho + 1e-9
            assert rho <= b.upper + 1e-9
