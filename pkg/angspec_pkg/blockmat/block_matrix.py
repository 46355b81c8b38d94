import json
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from scipy import linalg

from ..errors import NotHermitian
from ..num_utils.misc_utils import TOLS, random_unitary, hermitian_part


NEG_INFINITY = float("-inf")
INFINITY = float("inf")

RANK_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class HermitianBlockMatrix:
    """Finite dimensional block operator matrix [[T11, T12], [T12^H, T22]].

    The bound constants c1 <= c1_plus and c2_minus <= c2 are the extreme
    eigenvalues of the diagonal blocks, computed once per instance.
    """
    T11: np.ndarray
    T12: np.ndarray
    T22: np.ndarray
    validate: bool = field(default=True, repr=False)

    def __post_init__(self):
        t11 = np.atleast_2d(np.asarray(self.T11, dtype=complex))
        t12 = np.atleast_2d(np.asarray(self.T12, dtype=complex))
        t22 = np.atleast_2d(np.asarray(self.T22, dtype=complex))
        n1, n2 = t11.shape[0], t22.shape[0]
        if t11.shape != (n1, n1) or t22.shape != (n2, n2) or t12.shape != (n1, n2):
            raise ValueError(f"incompatible block shapes {t11.shape}, {t12.shape}, {t22.shape}")
        for arr in (t11, t12, t22):
            arr.flags.writeable = False
        object.__setattr__(self, "T11", t11)
        object.__setattr__(self, "T12", t12)
        object.__setattr__(self, "T22", t22)
        if self.validate:
            bad = self.hermitian_defects()
            if bad:
                raise NotHermitian(f"blocks not Hermitian: {', '.join(bad)}")

    @property
    def n1(self):
        return self.T11.shape[0]

    @property
    def n2(self):
        return self.T22.shape[0]

    @property
    def scale(self):
        return max(np.abs(self.T11).max(), np.abs(self.T12).max(), np.abs(self.T22).max(), 1.0)

    def hermitian_defects(self):
        tol = TOLS.herm_tol(self.scale)
        bad = []
        if np.abs(self.T11 - self.T11.conj().T).max() > tol:
            bad.append("T11")
        if np.abs(self.T22 - self.T22.conj().T).max() > tol:
            bad.append("T22")
        return bad

    @cached_property
    def _t11_eigs(self):
        return linalg.eigvalsh(self.T11)

    @cached_property
    def _t22_eigs(self):
        return linalg.eigvalsh(self.T22)

    @property
    def c1(self):
        return float(self._t11_eigs[0])

    @property
    def c1_plus(self):
        return float(self._t11_eigs[-1])

    @property
    def c2_minus(self):
        return float(self._t22_eigs[0])

    @property
    def c2(self):
        return float(self._t22_eigs[-1])

    @cached_property
    def t12_singular_values(self):
        return linalg.svdvals(self.T12)

    @property
    def t21_surjective(self):
        # rank n2 needs n2 <= n1
        if self.n2 > self.n1:
            return False
        return bool(self.t12_singular_values.min() > RANK_TOL * self.scale)

    @property
    def t12_bijective(self):
        return self.n1 == self.n2 and self.t21_surjective

    @cached_property
    def nu(self):
        """Ascending eigenvalues of T12 T12^H."""
        return np.sort(self.t12_singular_values ** 2) if self.n1 == self.n2 else \
            linalg.eigvalsh(self.T12 @ self.T12.conj().T)

    def assembled(self):
        top = np.hstack([self.T11, self.T12])
        bottom = np.hstack([self.T12.conj().T, self.T22])
        return np.vstack([top, bottom])

    def to_json(self):
        def encode(a):
            return [[[float(v.real), float(v.imag)] for v in row] for row in a]
        return json.dumps({
            "n1": self.n1, "n2": self.n2,
            "t11": encode(self.T11), "t12": encode(self.T12), "t22": encode(self.T22),
        })

    @classmethod
    def from_json(cls, text, validate=True):
        data = json.loads(text) if isinstance(text, str) else text

        def decode(rows, shape):
            arr = np.array([[complex(re, im) for re, im in row] for row in rows], dtype=complex)
            return arr.reshape(shape)

        n1, n2 = int(data["n1"]), int(data["n2"])
        return cls(decode(data["t11"], (n1, n1)), decode(data["t12"], (n1, n2)),
                   decode(data["t22"], (n2, n2)), validate=validate)


@dataclass(frozen=True, eq=False)
class SchurSample:
    lam: float
    matrix: np.ndarray
    neg_count: int


def offdiag_instance(t12):
    """Zero diagonal blocks around the given coupling block."""
    t12 = np.atleast_2d(np.asarray(t12, dtype=complex))
    n1, n2 = t12.shape
    return HermitianBlockMatrix(np.zeros((n1, n1)), t12, np.zeros((n2, n2)))


def random_instance(rng, n1, n2=None, diag_scale=0.3, bijective=True):
    """Random Hermitian instance with ||T11||, ||T22|| <= diag_scale.

    T12 = U diag(s) V^H with singular values drawn from [1, n]; bijective
    instances are square.
    """
    if bijective or n2 is None:
        n2 = n1

    def small_hermitian(n):
        h = hermitian_part(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
        norm = np.abs(linalg.eigvalsh(h)).max()
        return h * (diag_scale * rng.uniform(0.2, 1.0) / max(norm, 1e-300))

    r = min(n1, n2)
    s = np.sort(rng.uniform(1.0, max(float(r), 1.0) + 1.0, size=r))
    u = random_unitary(rng, n1)[:, :r]
    v = random_unitary(rng, n2)[:, :r]
    t12 = (u * s) @ v.conj().T
    return HermitianBlockMatrix(small_hermitian(n1), t12, small_hermitian(n2))
