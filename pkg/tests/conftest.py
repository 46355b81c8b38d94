import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from angspec_pkg.blockmat import HermitianBlockMatrix, offdiag_instance, random_instance  # noqa: E402
from angspec_pkg.angular import AngularParams  # noqa: E402


@pytest.fixture
def rng():
    return np.random.default_rng(2022)


@pytest.fixture
def scalar_offdiag():
    return offdiag_instance(np.array([[2.0]]))


@pytest.fixture
def diag_offdiag():
    return offdiag_instance(np.diag([2.0, 5.0]))


@pytest.fixture
def random_matrix(rng):
    return random_instance(rng, 4)


@pytest.fixture
def table1_params():
    return AngularParams.from_products(0.25, 0.75, 0)


def make_matrix(t11, t12, t22):
    return HermitianBlockMatrix(np.atleast_2d(t11), np.atleast_2d(t12), np.atleast_2d(t22))
