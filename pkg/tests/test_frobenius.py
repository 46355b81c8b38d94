import math

import numpy as np
import pytest

from angspec_pkg.solvers.frobenius import (frobenius_exponents, series_coefficients, series_value, left_start,
                                           right_start)
from angspec_pkg.angular import AngularParams


@pytest.mark.parametrize("k, at0, atpi", [
    (0, (0.5, 1.5), (1.5, 0.5)),
    (-1, (1.5, 0.5), (0.5, 1.5)),
    (2, (2.5, 3.5), (3.5, 2.5)),
])
def test_exponents(k, at0, atpi):
    exps = frobenius_exponents(k)
    assert exps.at0 == pytest.approx(at0)
    assert exps.atPi == pytest.approx(atpi)


@pytest.mark.parametrize("k", range(-4, 4))
def test_exponents_reflect(k):
    exps, mirrored = frobenius_exponents(k), frobenius_exponents(-k - 1)
    assert exps.at0 == mirrored.atPi
    assert exps.atPi == mirrored.at0


@pytest.mark.parametrize("kappa, aomega, am, lam", [
    (0.5, 0.75, 0.25, 1.4),
    (-1.5, 0.015, 0.005, -2.0),
    (2.5, -0.3, 0.6, 0.2),
])
def test_series_solves_system(kappa, aomega, am, lam):
    c = series_coefficients(kappa, aomega, am, lam, 14)
    r = abs(kappa)

    def u(t):
        return t ** r * series_value(c, t)

    t, h = 0.05, 1e-5
    du = (u(t + h) - u(t - h)) / (2.0 * h)
    qs = kappa / math.sin(t) + aomega * math.sin(t)
    d = am * math.cos(t)
    M = np.array([[qs, d - lam], [lam + d, -qs]])
    assert np.allclose(du, M @ u(t), rtol=1e-6, atol=1e-9 * np.abs(u(t)).max())


def test_leading_component():
    assert series_coefficients(0.5, 0.0, 0.0, 1.0, 6)[0] == pytest.approx((1.0, 0.0))
    assert series_coefficients(-0.5, 0.0, 0.0, 1.0, 6)[0] == pytest.approx((0.0, 1.0))


def test_start_vectors_unit():
    p = AngularParams.from_products(0.25, 0.75, -1)
    assert np.linalg.norm(left_start(p, 0.6, 1e-4, 8)) == pytest.approx(1.0)
    assert np.linalg.norm(right_start(p, 0.6, 1e-4, 8)) == pytest.approx(1.0)
