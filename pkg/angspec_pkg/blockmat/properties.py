import math
from dataclasses import dataclass

import numpy as np
from scipy import linalg

from ..num_utils.misc_utils import TOLS
from .block_matrix import NEG_INFINITY
from .schur import schur_complement, sigma_form, counting_function, index_shift_n0, mu_minmax
from .qnr import p_of_x, sup_lambda_plus, qnr_lambda_pm, maximizing_y
from .theorems import (oracle_eigenpairs, right_eigenvalues, verify_bound_theorems,
                       offdiag_sqrt_check, singularity_equivalence_check)


@dataclass(frozen=True)
class PropertyResult:
    name: str
    passed: bool
    detail: str = ""


def _random_vector(rng, n):
    return rng.standard_normal(n) + 1j * rng.standard_normal(n)


def _sample_lambdas(M, rng, count=3):
    width = 1.0 + abs(M.c2)
    return [M.c2 + width * u for u in np.sort(rng.uniform(0.05, 3.0, size=count))]


def check_schur_lower_bound(M, rng):
    worst = math.inf
    for lam in _sample_lambdas(M, rng):
        s = schur_complement(M, lam).matrix
        if np.abs(s - s.conj().T).max() > TOLS.herm_tol(np.abs(s).max()):
            return PropertyResult("schur_hermitian", False, f"lambda={lam}")
        for _ in range(8):
            x = _random_vector(rng, M.n1)
            gap = np.vdot(x, s @ x).real - (M.c1 - lam) * np.vdot(x, x).real
            worst = min(worst, gap)
    return PropertyResult("schur_lower_bound", worst >= -1e-9 * (1.0 + abs(M.c2)), f"min gap {worst:.3e}")


def check_sigma_monotone(M, rng):
    lams = _sample_lambdas(M, rng, count=4)
    for _ in range(8):
        x = _random_vector(rng, M.n1)
        x = x / np.linalg.norm(x)
        values = [sigma_form(M, x, lam) for lam in lams]
        for (l0, v0), (l1, v1) in zip(zip(lams, values), zip(lams[1:], values[1:])):
            if not v1 < v0 - (l1 - l0) * (1.0 - 1e-9):
                return PropertyResult("sigma_monotone", False, f"lambda {l0} -> {l1}: {v0} -> {v1}")
        s = schur_complement(M, lams[0]).matrix
        direct = np.vdot(x, s @ x).real
        if abs(direct - values[0]) > 1e-10 * max(1.0, abs(direct), np.abs(s).max()):
            return PropertyResult("sigma_monotone", False, f"sigma {values[0]} != <x,Sx> {direct}")
    return PropertyResult("sigma_monotone", True)


def check_p_scale_invariance(M, rng):
    x = _random_vector(rng, M.n1)
    p = p_of_x(M, x)
    for _ in range(16):
        xi = complex(*rng.standard_normal(2)) * 10.0 ** rng.uniform(-3, 3)
        q = p_of_x(M, xi * x)
        if p == NEG_INFINITY or q == NEG_INFINITY:
            if p != q:
                return PropertyResult("p_scale_invariance", False, f"{p} vs {q}")
        elif abs(p - q) > 1e-10 * (1.0 + abs(p)):
            return PropertyResult("p_scale_invariance", False, f"{p} vs {q} for xi={xi}")
    return PropertyResult("p_scale_invariance", True)


def check_eigenvalue_identification(M, rng):
    vals, vecs = oracle_eigenpairs(M)
    cut = M.c2 + 1e-6 * (1.0 + abs(M.c2))
    for lam, vec in zip(vals, vecs.T):
        if lam <= cut:
            continue
        x = vec[:M.n1]
        tol = TOLS.match * (1.0 + abs(lam))
        p = p_of_x(M, x)
        sup = sup_lambda_plus(M, x)
        y0 = maximizing_y(M, x, lam)
        lp = qnr_lambda_pm(M, x, y0)[1]
        if max(abs(p - lam), abs(sup - lam), abs(lp - lam)) > tol:
            return PropertyResult("eigenvalue_identification", False,
                                  f"lambda*={lam}: p={p}, sup={sup}, lambda_plus={lp}")
    return PropertyResult("eigenvalue_identification", True)


def check_minmax(M, rng):
    n0 = index_shift_n0(M)
    right = right_eigenvalues(M)
    for j, lam in enumerate(right, start=1):
        mu = mu_minmax(M, j + n0)
        if abs(mu - lam) > TOLS.match * (1.0 + abs(lam)):
            return PropertyResult("minmax_equality", False, f"mu_{j + n0}={mu} vs lambda_{j}={lam}")
    beyond = n0 + len(right) + 1
    if beyond <= M.n1 and mu_minmax(M, beyond) != math.inf:
        return PropertyResult("minmax_equality", False, "mu beyond the right spectrum is finite")
    return PropertyResult("minmax_equality", True, f"n0={n0}, right={len(right)}")


def check_det_identity(M, rng):
    for lam in _sample_lambdas(M, rng):
        x, y = _random_vector(rng, M.n1), _random_vector(rng, M.n2)
        shifted = M.T22 - lam * np.eye(M.n2)
        a = np.vdot(x, M.T11 @ x).real
        d_raw = np.vdot(y, M.T22 @ y).real
        b = np.vdot(x, M.T12 @ y)
        nx, ny = np.vdot(x, x).real, np.vdot(y, y).real
        lhs = (a - lam * nx) * (d_raw - lam * ny) - abs(b) ** 2
        dy = np.vdot(y, shifted @ y).real
        w = M.T12.conj().T @ x
        ww = np.vdot(w, linalg.solve(shifted, w, assume_a="her")).real
        sigma = sigma_form(M, x, lam)
        bracket = dy * ww - abs(np.vdot(y, w)) ** 2
        rhs = dy * sigma + bracket
        scale = max(1.0, abs(dy * sigma), abs(dy * ww), abs(b) ** 2)
        if abs(lhs - rhs) > 1e-10 * scale:
            return PropertyResult("det_identity", False, f"lhs={lhs}, rhs={rhs}")
        if bracket < -1e-10 * scale:
            return PropertyResult("cauchy_schwarz_gap", False, f"bracket={bracket}")
    return PropertyResult("det_identity", True)


def monotone_aux(s, t, gamma):
    return s + t + math.sqrt((s - t) ** 2 + gamma ** 2)


def check_aux_monotone(M, rng):
    grid = np.linspace(-3.0, 3.0, 25)
    for gamma in (0.0, 0.5, float(np.abs(M.T12).max())):
        for s0, s1 in zip(grid, grid[1:]):
            for t in grid:
                if monotone_aux(s1, t, gamma) < monotone_aux(s0, t, gamma) - 1e-12:
                    return PropertyResult("aux_monotone", False, f"s: {s0}->{s1}, t={t}, gamma={gamma}")
                if monotone_aux(t, s1, gamma) < monotone_aux(t, s0, gamma) - 1e-12:
                    return PropertyResult("aux_monotone", False, f"t: {s0}->{s1}, s={t}, gamma={gamma}")
    return PropertyResult("aux_monotone", True)


def check_counting(M, rng):
    n0 = index_shift_n0(M)
    right = right_eigenvalues(M)
    points = [M.c2] + right + [right[-1] + 1.0 + abs(right[-1]) if right else M.c2 + 2.0]
    previous = -1
    for j, (lo, hi) in enumerate(zip(points, points[1:])):
        lam = 0.5 * (lo + hi)
        count = counting_function(M, lam)
        if count != n0 + j:
            return PropertyResult("counting_jumps", False, f"count({lam})={count}, expected {n0 + j}")
        if count < previous:
            return PropertyResult("counting_monotone", False, f"count decreased at {lam}")
        previous = count
    return PropertyResult("counting_jumps", True)


def check_theorems(M, rng):
    if not M.t12_bijective:
        return PropertyResult("bound_theorems", True, "skipped: T12 not bijective")
    report = verify_bound_theorems(M)
    failing = [c for c in report.bound_checks if not c.passed]
    if failing or not report.minmax_matches():
        return PropertyResult("bound_theorems", False, f"failing checks: {failing}")
    if not offdiag_sqrt_check(M):
        return PropertyResult("offdiag_sqrt", False, f"nu={M.nu}")
    return PropertyResult("bound_theorems", True)


def check_singularity(M, rng):
    right = right_eigenvalues(M)
    points = []
    if right:
        points.append((right[0], True))
        upper = right[1] if len(right) > 1 else right[0] + 1.0
        points.append((0.5 * (right[0] + upper), False))
    for lam, expect in points:
        rec = singularity_equivalence_check(M, lam)
        if rec.t_singular != rec.s_singular or rec.t_singular != expect or not rec.kernel_dims_match:
            return PropertyResult("singularity_equivalence", False, f"lambda={lam}: {rec}")
    return PropertyResult("singularity_equivalence", True)


PROPERTIES = [
    check_schur_lower_bound,
    check_sigma_monotone,
    check_p_scale_invariance,
    check_eigenvalue_identification,
    check_minmax,
    check_det_identity,
    check_aux_monotone,
    check_counting,
    check_theorems,
    check_singularity,
]


def run_property_suite(M, rng):
    """Runs every block matrix property on one instance."""
    bad = M.hermitian_defects()
    if bad:
        return [PropertyResult("hermitian", False, f"non-Hermitian blocks: {', '.join(bad)}")]
    results = []
    for prop in PROPERTIES:
        try:
            results.append(prop(M, rng))
        except Exception as exc:  # a raised error is a failed property
            results.append(PropertyResult(prop.__name__.replace("check_", ""), False, repr(exc)))
    return results
