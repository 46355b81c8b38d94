import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np


@dataclass(frozen=True)
class FrobeniusExponents:
    at0: Tuple[float, float]
    atPi: Tuple[float, float]


def frobenius_exponents(k):
    """Leading powers of (f, g) for the square integrable solution at 0 and pi."""
    kappa = k + 0.5
    r = abs(kappa)
    if kappa > 0:
        return FrobeniusExponents(at0=(r, r + 1.0), atPi=(r + 1.0, r))
    return FrobeniusExponents(at0=(r + 1.0, r), atPi=(r, r + 1.0))


@lru_cache(maxsize=None)
def _taylor_terms(order):
    """Taylor coefficients up to `order` of theta/sin(theta), theta*sin(theta), theta*cos(theta)."""
    n = order + 1
    sinc = np.zeros(n)
    for i in range(0, n, 2):
        sinc[i] = (-1) ** (i // 2) / math.factorial(i + 1)
    inv = np.zeros(n)
    inv[0] = 1.0 / sinc[0]
    for j in range(1, n):
        inv[j] = -np.dot(sinc[1:j + 1], inv[j - 1::-1][:j]) / sinc[0]
    tsin = np.zeros(n)
    for i in range(2, n, 2):
        tsin[i] = (-1) ** (i // 2 - 1) / math.factorial(i - 1)
    tcos = np.zeros(n)
    for i in range(1, n, 2):
        tcos[i] = (-1) ** (i // 2) / math.factorial(i - 1)
    return inv, tsin, tcos


def series_coefficients(kappa, aomega, am, lam, order):
    """Coefficients c_j of the regular solution t^|kappa| sum_j c_j t^j of u' = M(t) u at t = 0."""
    inv, tsin, tcos = _taylor_terms(order)
    r = abs(kappa)
    mats = np.zeros((order + 1, 2, 2))
    mats[:, 0, 0] = kappa * inv + aomega * tsin
    mats[:, 1, 1] = -mats[:, 0, 0]
    mats[:, 0, 1] = am * tcos
    mats[:, 1, 0] = am * tcos
    if order >= 1:
        mats[1, 0, 1] -= lam
        mats[1, 1, 0] += lam
    coeffs = np.zeros((order + 1, 2))
    coeffs[0] = (1.0, 0.0) if kappa > 0 else (0.0, 1.0)
    for j in range(1, order + 1):
        rhs = sum(mats[i] @ coeffs[j - i] for i in range(1, j + 1))
        coeffs[j] = rhs / np.array([r + j - kappa, r + j + kappa])
    return coeffs


def series_value(coeffs, t):
    # the common factor t^|kappa| is dropped, callers normalize
    powers = t ** np.arange(coeffs.shape[0])
    return powers @ coeffs


def left_start(params, lam, offset, order):
    """Regular solution at theta = offset, unit norm."""
    c = series_coefficients(params.kappa, params.aomega, params.am, lam, order)
    u = series_value(c, offset)
    return u / np.linalg.norm(u)


def right_start(params, lam, offset, order):
    """Regular solution at theta = pi - offset, unit norm.

    With t = pi - theta the system keeps its form under
    (kappa, a*omega, am, lam) -> (-kappa, -a*omega, am, -lam).
    """
    c = series_coefficients(-params.kappa, -params.aomega, params.am, -lam, order)
    u = series_value(c, offset)
    return u / np.linalg.norm(u)
