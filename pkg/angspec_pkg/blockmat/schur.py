import logging

import numpy as np
from scipy import linalg

from ..errors import LambdaInSpectrumOfT22, ZeroVector, DegenerateInstance
from ..num_utils.misc_utils import TOLS
from .block_matrix import SchurSample, NEG_INFINITY, INFINITY


logger = logging.getLogger(__name__)

WINDOW_FACTOR = 1e6


def _check_lambda(M, lam):
    sep = TOLS.sep_tol(M.c2)
    if not lam >= M.c2 + sep:
        raise LambdaInSpectrumOfT22(f"lambda={lam!r} below c2 + sep_tol = {M.c2 + sep!r}")


def _shifted_t22(M, lam):
    return M.T22 - lam * np.eye(M.n2)


def schur_complement(M, lam):
    """S1(lam) = T11 - lam - T12 (T22 - lam)^-1 T12^H for lam > c2."""
    _check_lambda(M, lam)
    coupling = linalg.solve(_shifted_t22(M, lam), M.T12.conj().T, assume_a="her")
    s = M.T11 - lam * np.eye(M.n1) - M.T12 @ coupling
    s = 0.5 * (s + s.conj().T)
    eigs = linalg.eigvalsh(s)
    return SchurSample(lam=float(lam), matrix=s, neg_count=int(np.sum(eigs < -TOLS.count)))


def sigma_form(M, x, lam):
    x = np.asarray(x, dtype=complex).ravel()
    if not np.linalg.norm(x) > 0.0:
        raise ZeroVector("sigma_form needs x != 0")
    _check_lambda(M, lam)
    w = M.T12.conj().T @ x
    diag = np.vdot(x, M.T11 @ x).real - lam * np.vdot(x, x).real
    if not w.any():
        return float(diag)
    z = linalg.solve(_shifted_t22(M, lam), w, assume_a="her")
    return float(diag - np.vdot(w, z).real)


def counting_function(M, lam):
    return schur_complement(M, lam).neg_count


def search_window(M):
    sep = TOLS.sep_tol(M.c2)
    return M.c2 + sep, M.c2 + WINDOW_FACTOR * (1.0 + abs(M.c2))


def geometric_grid(M, cap=None):
    lo, hi = search_window(M)
    sep = TOLS.sep_tol(M.c2)
    grid = []
    k = 0
    while True:
        # k = 0 lands on lo exactly
        lam = lo + sep * (2.0 ** k - 1.0)
        if lam > hi or (cap is not None and lam >= cap):
            break
        grid.append(lam)
        k += 1
    return grid


def _first_right_eigenvalue(M):
    eigs = linalg.eigvalsh(M.assembled())
    right = eigs[eigs > M.c2 + TOLS.sep_tol(M.c2)]
    return float(right[0]) if right.size else None


def index_shift_n0(M):
    """Minimal negative index of S1 over the grid right of c2."""
    n0, _ = _n0_with_anchor(M)
    return n0


def _n0_with_anchor(M):
    grid = geometric_grid(M, cap=_first_right_eigenvalue(M))
    if not grid:
        raise DegenerateInstance("no evaluation point between c2 and the first eigenvalue right of c2")
    counts = [counting_function(M, lam) for lam in grid]
    best = int(np.argmin(counts))
    return int(counts[best]), grid[best]


def mu_minmax(M, n):
    """mu_n as the point where the counting function first reaches n.

    Returns -inf for n <= n0 and +inf if the count never reaches n inside
    the search window.
    """
    if n < 1:
        raise ValueError(f"mu_minmax index must be positive, got {n}")
    n0, lo = _n0_with_anchor(M)
    if n <= n0:
        return NEG_INFINITY
    _, hi = search_window(M)
    if counting_function(M, hi) < n:
        return INFINITY
    while hi - lo > TOLS.root * (1.0 + abs(hi)) * 1e-2:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if counting_function(M, mid) >= n:
            hi = mid
        else:
            lo = mid
    return float(hi)
