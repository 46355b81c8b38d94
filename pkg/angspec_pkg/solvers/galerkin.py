import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy import linalg
from scipy.special import roots_jacobi, eval_jacobi

from ..errors import QuadratureBreakdown
from .base import BASE, THETA_GRID, normalize_samples
from .frobenius import frobenius_exponents


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GalerkinConfig:
    N: int = 32
    # fraction of N up to which |lambda| is trusted
    valid_fraction: float = 0.25


class _Basis:
    """Weighted Jacobi basis w(x) P_i(x), x = cos(theta), orthonormal in L2(0, pi).

    The weight (1-x)^a (1+x)^b carries the Frobenius power theta^(2a) at 0
    and (pi-theta)^(2b) at pi.
    """

    def __init__(self, a, b, N, nodes, weights, extra):
        self.a, self.b = a, b
        self.alpha, self.beta = 2.0 * a - 0.5, 2.0 * b - 0.5
        j = np.arange(N)[:, None]
        self.vals = eval_jacobi(j, self.alpha, self.beta, nodes[None, :])
        dvals = np.zeros_like(self.vals)
        if N > 1:
            jj = np.arange(1, N)[:, None]
            dvals[1:] = 0.5 * (jj + self.alpha + self.beta + 1.0) * \
                eval_jacobi(jj - 1, self.alpha + 1.0, self.beta + 1.0, nodes[None, :])
        gram = (self.vals * (weights * extra)) @ self.vals.T
        diag = np.diag(gram)
        if not np.all(np.isfinite(diag)) or np.any(diag <= 0.0):
            raise QuadratureBreakdown(f"degenerate Gram diagonal for weights ({a}, {b})")
        self.norms = 1.0 / np.sqrt(diag)
        self.vals = self.vals * self.norms[:, None]
        self.dvals = dvals * self.norms[:, None]
        self.gram = (self.vals * (weights * extra)) @ self.vals.T

    def sample(self, coeffs, x):
        j = np.arange(len(coeffs))[:, None]
        polys = eval_jacobi(j, self.alpha, self.beta, x[None, :]) * self.norms[:, None]
        weight = (1.0 - x) ** self.a * (1.0 + x) ** self.b
        return weight * (coeffs @ polys)


def galerkin_matrices(spec, N):
    """Hermitian pencil (H, G) of the angular operator in the weighted Jacobi basis."""
    if N < 8:
        raise ValueError(f"Galerkin basis size must be >= 8, got {N}")
    p = spec.params
    kappa = p.kappa
    K = abs(kappa)
    exps = frobenius_exponents(p.k)
    a_f, b_f = 0.5 * exps.at0[0], 0.5 * exps.atPi[0]
    a_g, b_g = 0.5 * exps.at0[1], 0.5 * exps.atPi[1]
    if K - 0.5 < 0.0:
        raise QuadratureBreakdown(f"infeasible Jacobi weight exponent {K - 0.5}")
    # exact up to polynomial degree 2N + 3
    x, w = roots_jacobi(N + 2, K - 0.5, K - 0.5)
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(w))):
        raise QuadratureBreakdown(f"Gauss-Jacobi rule failed for exponent {K - 0.5}")

    # mass weights relative to (1-x^2)^(K-1/2); exponents are 0 or 1
    extra_f = (1.0 - x) ** round(2 * a_f - K) * (1.0 + x) ** round(2 * b_f - K)
    extra_g = (1.0 - x) ** round(2 * a_g - K) * (1.0 + x) ** round(2 * b_g - K)
    bf = _Basis(a_f, b_f, N, x, w, extra_f)
    bg = _Basis(a_g, b_g, N, x, w, extra_g)

    one_m = 1.0 - x * x
    h11 = -p.am * (bf.vals * (w * extra_f * x)) @ bf.vals.T
    h22 = p.am * (bg.vals * (w * extra_g * x)) @ bg.vals.T
    lin = a_g * (1.0 + x) - b_g * (1.0 - x) + kappa
    h12 = (bf.vals * w) @ (-(one_m * bg.dvals) + (lin + p.aomega * one_m) * bg.vals).T
    H = np.block([[h11, h12], [h12.T, h22]])
    G = linalg.block_diag(bf.gram, bg.gram)
    return 0.5 * (H + H.T), 0.5 * (G + G.T), (bf, bg)


class GALERKIN(BASE):

    name = "galerkin"

    def __init__(self, cfg=None):
        super().__init__(cfg or GalerkinConfig())

    @property
    def valid_radius(self):
        return self.cfg.valid_fraction * self.cfg.N

    def solve(self, spec, window=None, samples=True):
        H, G, (bf, bg) = galerkin_matrices(spec, self.cfg.N)
        try:
            vals, vecs = linalg.eigh(H, G)
        except linalg.LinAlgError as exc:
            raise QuadratureBreakdown(f"Gram matrix not positive definite: {exc}") from exc
        radius = self.valid_radius
        lo, hi = window if window is not None else (-radius, radius)
        keep = [i for i, lam in enumerate(vals) if lo <= lam <= hi and abs(lam) <= radius]
        funcs = None
        if samples:
            xg = np.cos(THETA_GRID)
            N = self.cfg.N
            funcs = [normalize_samples(np.stack([bf.sample(vecs[:N, i], xg), bg.sample(vecs[N:, i], xg)], axis=1))
                     for i in keep]
        return self._finalize(spec, (lo, hi), vals[keep], funcs)

    def eigenvalues(self, spec):
        H, G, _ = galerkin_matrices(spec, self.cfg.N)
        vals = linalg.eigh(H, G, eigvals_only=True)
        return vals[np.abs(vals) <= self.valid_radius]

    @staticmethod
    def add_solver_specific_args(parent_parser):
        parser = parent_parser.add_argument_group("galerkin")

        parser.add_argument("--basis_size", type=int, default=None)

        return parent_parser

    @classmethod
    def config_from_args(cls, args):
        return GalerkinConfig(N=args.basis_size or GalerkinConfig.N)


def galerkin_spectrum(spec, N, window=None):
    return GALERKIN(GalerkinConfig(N=N)).solve(spec, window)
