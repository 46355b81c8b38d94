import math
import logging
from dataclasses import dataclass, field, replace
from typing import List, Optional, Tuple

import numpy as np

from ..angular.params import AngularParams


logger = logging.getLogger(__name__)

GRID_POINTS = 513
THETA_GRID = math.pi * np.arange(1, GRID_POINTS + 1) / (GRID_POINTS + 1)


@dataclass(frozen=True)
class AngularOperatorSpec:
    """The angular operator [[-d, B+], [B-, d]] with B+- = +-d/dtheta + q + s."""
    params: AngularParams

    @property
    def kappa(self):
        return self.params.kappa

    def d(self, theta):
        return self.params.am * np.cos(theta)

    def s(self, theta):
        return self.params.aomega * np.sin(theta)

    def q(self, theta):
        return self.kappa / np.sin(theta)

    def system_matrix(self, theta, lam):
        # (A - lam) u = 0 as u' = M u
        qs = self.q(theta) + self.s(theta)
        d = self.d(theta)
        return np.array([[qs, d - lam], [lam + d, -qs]])

    def apply(self, theta, u, du, lam):
        """(A - lam) u given samples of u and u' on theta; u has shape (len(theta), 2)."""
        f, g = u[:, 0], u[:, 1]
        qs = self.q(theta) + self.s(theta)
        d = self.d(theta)
        row1 = -d * f + du[:, 1] + qs * g - lam * f
        row2 = -du[:, 0] + qs * f + d * g - lam * g
        return np.stack([row1, row2], axis=1)


@dataclass
class SpectrumEntry:
    lam: float
    index: Optional[int] = None
    samples: Optional[np.ndarray] = field(default=None, repr=False)
    residual: float = float("nan")
    symmetry_defect: float = float("nan")

    def to_row(self, params):
        return {
            "k": params.k, "am": params.am, "aomega": params.aomega, "n": self.index,
            "lambda": self.lam, "residual": self.residual, "symmetry_defect": self.symmetry_defect,
        }


@dataclass
class Spectrum:
    params: AngularParams
    window: Tuple[float, float]
    entries: List[SpectrumEntry] = field(default_factory=list)
    method: str = ""
    m_minus: Optional[int] = None
    m_plus: Optional[int] = None
    interval_count: Optional[int] = None

    @property
    def lambdas(self):
        return [entry.lam for entry in self.entries]

    def by_index(self, n):
        for entry in self.entries:
            if entry.index == n:
                return entry
        raise KeyError(f"index {n} not in spectrum")

    def indices(self):
        return [entry.index for entry in self.entries]

    def covers(self, lo, hi):
        return self.window[0] <= lo and hi <= self.window[1]

    def with_entries(self, entries):
        return replace(self, entries=list(entries))

    def to_rows(self):
        return [entry.to_row(self.params) for entry in self.entries]


def normalize_samples(samples):
    """Unit l2 norm on the grid; first component above noise made positive."""
    samples = np.asarray(samples, dtype=float)
    norm = np.linalg.norm(samples)
    if norm == 0.0:
        return samples
    samples = samples / norm
    flat = samples.ravel()
    nonzero = np.flatnonzero(np.abs(flat) > 1e-12 * np.abs(flat).max())
    if flat[nonzero[0]] < 0.0:
        samples = -samples
    return samples


class BASE:
    """Common part of the spectrum solvers; subclasses implement `solve`."""

    name = "BASE"

    def __init__(self, cfg):
        self.cfg = cfg

    def solve(self, spec, window):
        raise NotImplementedError(f"{type(self).__name__} does not implement solve")

    def _finalize(self, spec, window, lams, samples=None):
        order = np.argsort(lams)
        entries = []
        for i in order:
            entries.append(SpectrumEntry(lam=float(lams[i]),
                                         samples=None if samples is None else samples[i]))
        logger.debug("%s: %d eigenvalues in %s", self.name, len(entries), window)
        return Spectrum(params=spec.params, window=tuple(window), entries=entries, method=self.name)

    @staticmethod
    def add_solver_specific_args(parent_parser):
        return parent_parser
