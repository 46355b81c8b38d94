import math

import numpy as np
import pytest

from angspec_pkg.blockmat import qnr_lambda_pm, p_of_x, sup_lambda_plus, maximizing_y, random_instance, NEG_INFINITY
from angspec_pkg.blockmat.qnr import compression
from angspec_pkg.blockmat.theorems import oracle_eigenpairs
from angspec_pkg.errors import ZeroVector, NoZero

from conftest import make_matrix


def test_scalar_lambda_pm(scalar_offdiag):
    assert qnr_lambda_pm(scalar_offdiag, [1.0], [1.0]) == pytest.approx((-2.0, 2.0))


def test_diagonal_lambda_pm():
    M = make_matrix(1.0, 2.0, -1.0)
    lo, hi = qnr_lambda_pm(M, [1.0], [1.0])
    assert lo == pytest.approx(-math.sqrt(5.0), abs=1e-12)
    assert hi == pytest.approx(math.sqrt(5.0), abs=1e-12)


def test_lambda_pm_matches_compression_eigenvalues(rng):
    M = random_instance(rng, 4, 3, bijective=False)
    x = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    y = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    expected = np.linalg.eigvalsh(compression(M, x, y))
    assert np.allclose(qnr_lambda_pm(M, x, y), expected, atol=1e-12)


def test_lambda_pm_zero_vector(scalar_offdiag):
    with pytest.raises(ZeroVector):
        qnr_lambda_pm(scalar_offdiag, [1.0], [0.0])


@pytest.mark.parametrize("scale", [1.0, 7j, -0.01 + 3j])
def test_scalar_p(scalar_offdiag, scale):
    assert p_of_x(scalar_offdiag, [scale]) == pytest.approx(2.0, abs=1e-10)


def test_p_negative_infinity():
    # sigma(c2 + sep) = -3 - lam < 0 without coupling
    M = make_matrix(-3.0, 0.0, 0.0)
    assert p_of_x(M, [1.0]) == NEG_INFINITY
    with pytest.raises(NoZero):
        sup_lambda_plus(M, [1.0])


def test_scalar_sup(scalar_offdiag):
    y = maximizing_y(scalar_offdiag, [1.0])
    assert abs(y[0]) > 0
    assert sup_lambda_plus(scalar_offdiag, [1.0]) == pytest.approx(2.0, abs=1e-8)


def test_eigenvectors_give_eigenvalues(rng):
    M = random_instance(rng, 4)
    eigs, vecs = oracle_eigenpairs(M)
    for lam, vec in zip(eigs, vecs.T):
        if lam <= M.c2 + 1e-6:
            continue
        x = vec[:M.n1]
        assert p_of_x(M, x) == pytest.approx(lam, abs=1e-8)
        assert sup_lambda_plus(M, x) == pytest.approx(lam, abs=1e-8)


def test_sup_dominates_random_y(random_matrix, rng):
    x = rng.standard_normal(4) + 1j * rng.standard_normal(4)
    p = p_of_x(random_matrix, x)
    assert sup_lambda_plus(random_matrix, x) == pytest.approx(p, abs=1e-8)
    for _ in range(10_000):
        y = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        assert qnr_lambda_pm(random_matrix, x, y)[1] <= p + 1e-9
