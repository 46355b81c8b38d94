import math
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np
from scipy import linalg

from ..errors import HypothesisViolated
from ..num_utils.misc_utils import TOLS
from .schur import schur_complement, index_shift_n0, mu_minmax


@dataclass(frozen=True)
class BoundCheck:
    index: int
    kind: str
    lower_bound: Optional[float]
    upper_bound: Optional[float]
    eigenvalue: float
    passed: bool


@dataclass(frozen=True)
class VariationalReport:
    n0: int
    eigenvalues_right: List[float]
    mu_values: List[float]
    bound_checks: List[BoundCheck] = field(default_factory=list)
    ax: float = 0.0
    abx: float = 0.0

    @property
    def passed(self):
        return all(check.passed for check in self.bound_checks) and self.minmax_matches()

    def minmax_matches(self, tol=TOLS.match):
        for j, lam in enumerate(self.eigenvalues_right, start=1):
            mu = self.mu_values[j + self.n0 - 1]
            if not abs(mu - lam) <= tol * (1.0 + abs(lam)):
                return False
        return True


def oracle_eigenvalues(M):
    return [float(v) for v in linalg.eigvalsh(M.assembled())]


def oracle_eigenpairs(M):
    return linalg.eigh(M.assembled())


def right_eigenvalues(M):
    cut = M.c2 + TOLS.sep_tol(M.c2)
    return [lam for lam in oracle_eigenvalues(M) if lam > cut]


def _relative_bound_holds(M, ax, abx):
    """Conservative test of the relative bound for (ax, abx).

    Checks ||T11|| <= ax + abx smin(T12), which implies
    ||T11 x|| <= ax ||x|| + abx ||T12^H x|| for every x. Some pairs that satisfy
    the relative bound fail this test and are rejected as HypothesisViolated.
    """
    t11_norm = float(np.abs(linalg.eigvalsh(M.T11)).max())
    smin = float(M.t12_singular_values.min())
    return t11_norm <= ax + abx * smin + TOLS.herm_tol(M.scale)


def estimate_upper(nu, ax, abx, c2):
    r = math.sqrt(nu)
    return 0.5 * abx * r + math.sqrt(nu + 0.25 * (abx * r + abs(ax - c2)) ** 2) + 0.5 * (ax + c2)


def estimate_lower(nu, c1, c2_minus):
    return math.sqrt(nu + 0.25 * (c1 - c2_minus) ** 2) + 0.5 * (c1 + c2_minus)


def bounded_upper(nu, c1_plus, c2):
    return math.sqrt(nu + 0.25 * (c1_plus - c2) ** 2) + 0.5 * (c1_plus + c2)


def verify_bound_theorems(M, ax=None, abx=0.0):
    """Checks both estimate theorems on every eigenvalue right of c2.

    Index l of the right eigenvalues pairs with nu_{l+n0}. The default
    constants (ax, abx) = (||T11||, 0) always satisfy the relative bound.
    """
    failed = []
    if not M.t12_bijective:
        failed.append("t12_bijective")
    elif not M.nu[0] > 0.0:
        failed.append("nu_1 > 0")
    if ax is None:
        ax = float(np.abs(linalg.eigvalsh(M.T11)).max())
    if not failed and not _relative_bound_holds(M, ax, abx):
        failed.append("relative bound (ax, abx)")
    if failed:
        raise HypothesisViolated(failed)

    n0 = index_shift_n0(M)
    right = right_eigenvalues(M)
    mus = [mu_minmax(M, n) for n in range(1, M.n1 + 1)]
    nu = M.nu
    c1, c1p, c2m, c2 = M.c1, M.c1_plus, M.c2_minus, M.c2

    checks = []
    for ell, lam in enumerate(right, start=1):
        j = ell + n0
        if j > M.n1:
            checks.append(BoundCheck(ell, "index", None, None, lam, False))
            continue
        tol = TOLS.match * (1.0 + abs(lam))
        lower = estimate_lower(nu[j - 1], c1, c2m)
        upper = estimate_upper(nu[j - 1], ax, abx, c2)
        upper_b = bounded_upper(nu[j - 1], c1p, c2)
        checks.append(BoundCheck(ell, "relative", lower, upper, lam, lower - tol <= lam <= upper + tol))
        checks.append(BoundCheck(ell, "bounded", lower, upper_b, lam, lower - tol <= lam <= upper_b + tol))
    return VariationalReport(n0=n0, eigenvalues_right=right, mu_values=mus, bound_checks=checks, ax=ax, abx=abx)


def offdiag_sqrt_check(M, tol=1e-10):
    if not M.t12_bijective:
        raise HypothesisViolated(["t12_bijective"])
    n = M.n1
    zero = np.zeros((n, n))
    eigs = linalg.eigvalsh(np.block([[zero, M.T12], [M.T12.conj().T, zero]]))
    roots = np.sqrt(np.clip(M.nu, 0.0, None))
    expected = np.sort(np.concatenate([-roots, roots]))
    return bool(np.abs(eigs - expected).max() <= tol * max(1.0, roots.max()))


@dataclass(frozen=True)
class SingularityRecord:
    t_singular: bool
    s_singular: bool
    kernel_dims_match: bool
    t_kernel_dim: int = 0
    s_kernel_dim: int = 0


def singularity_equivalence_check(M, lam, tol=1e-9):
    s = schur_complement(M, lam).matrix
    t = M.assembled() - lam * np.eye(M.n1 + M.n2)
    t_eigs = np.abs(linalg.eigvalsh(t))
    s_eigs = np.abs(linalg.eigvalsh(s))
    t_dim = int(np.sum(t_eigs <= tol * (1.0 + t_eigs.max())))
    s_dim = int(np.sum(s_eigs <= tol * (1.0 + s_eigs.max())))
    return SingularityRecord(t_singular=t_dim > 0, s_singular=s_dim > 0,
                             kernel_dims_match=(t_dim == s_dim), t_kernel_dim=t_dim, s_kernel_dim=s_dim)


def lower_bound_certificate(M, lam):
    """Bounded-case lower estimate for a single eigenvalue lam > c2 of M."""
    right = right_eigenvalues(M)
    tol = TOLS.match * (1.0 + abs(lam))
    hits = [ell for ell, v in enumerate(right, start=1) if abs(v - lam) <= tol]
    if not hits:
        raise ValueError(f"{lam!r} is not an eigenvalue right of c2={M.c2!r}")
    if not M.t12_bijective:
        raise HypothesisViolated(["t12_bijective"])
    ell = hits[-1]
    j = ell + index_shift_n0(M)
    if j > M.n1:
        return BoundCheck(ell, "index", None, None, lam, False)
    lower = estimate_lower(M.nu[j - 1], M.c1, M.c2_minus)
    return BoundCheck(ell, "lower", lower, None, lam, lower - tol <= lam)
