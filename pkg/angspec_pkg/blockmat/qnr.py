import math

import numpy as np
from scipy import linalg
from scipy.optimize import brentq

from ..errors import ZeroVector, NoZero
from ..num_utils.misc_utils import TOLS
from .block_matrix import NEG_INFINITY
from .schur import sigma_form, search_window


def _unit(v, name):
    v = np.asarray(v, dtype=complex).ravel()
    norm = np.linalg.norm(v)
    if not norm > 0.0:
        raise ZeroVector(f"{name} must be nonzero")
    return v / norm


def compression(M, x, y):
    """The 2x2 matrix T_{x,y} for unit x, y."""
    x, y = _unit(x, "x"), _unit(y, "y")
    a = np.vdot(x, M.T11 @ x).real
    d = np.vdot(y, M.T22 @ y).real
    b = np.vdot(x, M.T12 @ y)
    return np.array([[a, b], [np.conj(b), d]])


def qnr_lambda_pm(M, x, y):
    t = compression(M, x, y)
    a, d, b = t[0, 0].real, t[1, 1].real, t[0, 1]
    mean = 0.5 * (a + d)
    root = math.sqrt((0.5 * (a - d)) ** 2 + abs(b) ** 2)
    return mean - root, mean + root


def p_of_x(M, x):
    """Zero of the decreasing map lam -> sigma_form(M, x, lam) right of c2."""
    x = _unit(x, "x")
    lo, hi = search_window(M)
    f0 = sigma_form(M, x, lo)
    if f0 < 0.0:
        return NEG_INFINITY
    if f0 == 0.0:
        return float(lo)
    sep = TOLS.sep_tol(M.c2)
    prev, k = lo, 1
    while True:
        lam = lo + sep * (2.0 ** k - 1.0)
        if sigma_form(M, x, lam) <= 0.0:
            break
        if lam > hi:
            # sigma decays like -lam, unreachable for sane instances
            raise NoZero(f"no sign change of sigma below {lam!r}")
        prev, k = lam, k + 1
    return float(brentq(lambda t: sigma_form(M, x, t), prev, lam, xtol=TOLS.root * 1e-2, rtol=4 * np.finfo(float).eps))


def maximizing_y(M, x, p=None):
    x = _unit(x, "x")
    if p is None:
        p = p_of_x(M, x)
    if p == NEG_INFINITY:
        raise NoZero("p(x) = -inf, the supremum over y is not attained")
    w = M.T12.conj().T @ x
    if np.linalg.norm(w) <= TOLS.count * M.scale:
        _, vecs = linalg.eigh(M.T22)
        return vecs[:, -1]
    return linalg.solve(M.T22 - p * np.eye(M.n2), w, assume_a="her")


def sup_lambda_plus(M, x):
    x = _unit(x, "x")
    p = p_of_x(M, x)
    y = maximizing_y(M, x, p)
    return qnr_lambda_pm(M, x, y)[1]
