import numpy as np
import pytest
from numpy.testing import assert_allclose

from angspec_pkg.blockmat import (schur_complement, sigma_form, counting_function, index_shift_n0, mu_minmax,
                                  random_instance, INFINITY, NEG_INFINITY)
from angspec_pkg.blockmat.qnr import p_of_x
from angspec_pkg.blockmat.schur import geometric_grid, search_window
from angspec_pkg.blockmat.theorems import right_eigenvalues
from angspec_pkg.errors import LambdaInSpectrumOfT22, ZeroVector

from conftest import make_matrix


@pytest.mark.parametrize("lam, expected", [(1.0, 3.0), (2.0, 0.0)])
def test_scalar_schur(scalar_offdiag, lam, expected):
    assert_allclose(schur_complement(scalar_offdiag, lam).matrix, [[expected]], atol=1e-12)


def test_schur_matches_dense_inverse(rng):
    M = random_instance(rng, 3)
    lam = M.c2 + 0.7
    inv = np.linalg.inv(M.T22 - lam * np.eye(3))
    expected = M.T11 - lam * np.eye(3) - M.T12 @ inv @ M.T12.conj().T
    S = schur_complement(M, lam).matrix
    assert np.abs(S - expected).max() < 1e-12
    assert np.abs(S - S.conj().T).max() < 1e-12


def test_lambda_at_c2_rejected(scalar_offdiag):
    with pytest.raises(LambdaInSpectrumOfT22):
        schur_complement(scalar_offdiag, 0.0)


@pytest.mark.parametrize("lam, expected", [(1.0, 3.0), (4.0, -3.0)])
def test_scalar_sigma(scalar_offdiag, lam, expected):
    assert sigma_form(scalar_offdiag, [1.0], lam) == pytest.approx(expected)


def test_sigma_zero_vector(scalar_offdiag):
    with pytest.raises(ZeroVector):
        sigma_form(scalar_offdiag, [0.0], 1.0)


def test_sigma_matches_schur(random_matrix, rng):
    x = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    lam = random_matrix.c2 + 1.3
    S = schur_complement(random_matrix, lam).matrix
    expected = np.vdot(x, S @ x).real
    assert sigma_form(random_matrix, x, lam) == pytest.approx(expected, rel=1e-12, abs=1e-12)


@pytest.mark.parametrize("lam, expected", [(1.0, 0), (3.0, 1)])
def test_scalar_counting(scalar_offdiag, lam, expected):
    assert counting_function(scalar_offdiag, lam) == expected


def test_counting_jump_characterization(rng):
    M = random_instance(rng, 5)
    n0 = index_shift_n0(M)
    right = right_eigenvalues(M)
    for lam in np.linspace(M.c2 + 0.05, right[-1] + 1.0, 23):
        if min(abs(lam - r) for r in right) < 1e-6:
            continue
        assert counting_function(M, lam) == n0 + sum(r < lam for r in right)


def test_geometric_grid_capped(scalar_offdiag):
    grid = geometric_grid(scalar_offdiag, cap=2.0)
    assert grid and grid[-1] < 2.0
    assert np.all(np.diff(grid) > 0)


def test_offdiag_n0_zero(diag_offdiag):
    assert index_shift_n0(diag_offdiag) == 0


def test_offdiag_mu(diag_offdiag):
    assert mu_minmax(diag_offdiag, 1) == pytest.approx(2.0, abs=1e-8)
    assert mu_minmax(diag_offdiag, 2) == pytest.approx(5.0, abs=1e-8)
    assert mu_minmax(diag_offdiag, 3) == INFINITY


def test_mu_index_positive(diag_offdiag):
    with pytest.raises(ValueError):
        mu_minmax(diag_offdiag, 0)


def test_mu_matches_oracle(rng):
    M = random_instance(rng, 4)
    n0 = index_shift_n0(M)
    for j, lam in enumerate(right_eigenvalues(M), start=1):
        assert mu_minmax(M, j + n0) == pytest.approx(lam, abs=1e-8)
    assert all(mu_minmax(M, n) == NEG_INFINITY for n in range(1, n0 + 1))


def test_decoupled_eigenvalue_below_c2_shifts_index():
    # T11 = diag(-3, 4) uncoupled from T22 = [0]: -3 stays negative in S1 for all lam > 0
    M = make_matrix(np.diag([-3.0, 4.0]), np.zeros((2, 1)), 0.0)
    assert index_shift_n0(M) == 1
    assert mu_minmax(M, 1) == NEG_INFINITY
    assert mu_minmax(M, 2) == pytest.approx(4.0, abs=1e-8)


def test_window_start_admissible(rng):
    M = random_instance(rng, 6)
    lo, _ = search_window(M)
    assert geometric_grid(M)[0] == lo
    assert schur_complement(M, lo).neg_count == 0
    x = rng.standard_normal(6) + 1j * rng.standard_normal(6)
    assert p_of_x(M, x) > M.c2
    assert index_shift_n0(M) == 0


def test_window_start_far_from_origin():
    c2 = 1234.567
    M = make_matrix(0.0, 1.0, c2)
    lo, _ = search_window(M)
    assert geometric_grid(M)[0] == lo
    # sigma(lam) = -lam + 1 / (lam - c2)
    assert p_of_x(M, [1.0]) == pytest.approx(0.5 * (c2 + np.sqrt(c2 * c2 + 4.0)), abs=1e-9)
    assert index_shift_n0(M) == 0
