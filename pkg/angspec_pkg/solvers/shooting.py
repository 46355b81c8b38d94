import math
import logging
from dataclasses import dataclass, replace
from functools import partial
from typing import Optional

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import brentq

from ..errors import IntegratorFailure, SuspectedDoubleRoot
from ..num_utils.misc_utils import parallel_map
from .base import BASE, THETA_GRID, normalize_samples
from .frobenius import left_start, right_start


logger = logging.getLogger(__name__)

SUSPECT_TOL = 1e-6


@dataclass(frozen=True)
class ShootingConfig:
    match_point: float = 0.5 * math.pi
    series_order: int = 8
    start_offset: float = 1e-4
    integrator_tol: float = 1e-11
    scan_step: Optional[float] = None
    # polish well below the 1e-9 accuracy target, eigenfunction matching needs it
    eig_tol: float = 1e-12
    workers: int = 1

    def __post_init__(self):
        if not 0.0 < self.start_offset < self.match_point < math.pi - self.start_offset:
            raise ValueError(f"need 0 < start_offset < match_point < pi - start_offset, got "
                             f"{self.start_offset}, {self.match_point}")
        if self.series_order < 4:
            raise ValueError(f"series_order must be >= 4, got {self.series_order}")

    def step_for(self, params):
        if self.scan_step is not None:
            return self.scan_step
        return 0.25 / (1.0 + 2.0 * params.delta)


def _rhs(kappa, aomega, am, lam):
    def rhs(t, u):
        s, c = math.sin(t), math.cos(t)
        qs = kappa / s + aomega * s
        d = am * c
        return [qs * u[0] + (d - lam) * u[1], (lam + d) * u[0] - qs * u[1]]
    return rhs


def _integrate(spec, cfg, lam, start, stop, u0, dense=False):
    p = spec.params
    sol = solve_ivp(_rhs(p.kappa, p.aomega, p.am, lam), (start, stop), u0, method="DOP853",
                    rtol=cfg.integrator_tol, atol=cfg.integrator_tol * 1e-20, dense_output=dense)
    if sol.status < 0 or not sol.success:
        raise IntegratorFailure(f"lambda={lam}: {sol.message}")
    return sol


def _solve_halves(spec, cfg, lam, dense=False):
    p = spec.params
    left = _integrate(spec, cfg, lam, cfg.start_offset, cfg.match_point,
                      left_start(p, lam, cfg.start_offset, cfg.series_order), dense)
    right = _integrate(spec, cfg, lam, math.pi - cfg.start_offset, cfg.match_point,
                       right_start(p, lam, cfg.start_offset, cfg.series_order), dense)
    return left, right


def miss_distance(spec, cfg, lam):
    """Cross determinant of the unit regular solutions at the match point."""
    left, right = _solve_halves(spec, cfg, lam)
    ul, ur = left.y[:, -1], right.y[:, -1]
    ul = ul / np.linalg.norm(ul)
    ur = ur / np.linalg.norm(ur)
    return float(ul[0] * ur[1] - ur[0] * ul[1])


def eigenfunction_samples(spec, cfg, lam):
    left, right = _solve_halves(spec, cfg, lam, dense=True)
    ul, ur = left.y[:, -1], right.y[:, -1]
    scale = np.dot(ur, ul) / np.dot(ur, ur)
    mask = THETA_GRID <= cfg.match_point
    samples = np.empty((THETA_GRID.size, 2))
    samples[mask] = left.sol(THETA_GRID[mask]).T
    samples[~mask] = scale * right.sol(THETA_GRID[~mask]).T
    return normalize_samples(samples)


class SHOOTING(BASE):

    name = "shooting"

    def __init__(self, cfg=None):
        super().__init__(cfg or ShootingConfig())

    def scan(self, spec, window):
        lo, hi = window
        step = self.cfg.step_for(spec.params)
        count = max(2, int(math.ceil((hi - lo) / step)) + 1)
        grid = np.linspace(lo, hi, count)
        values = parallel_map(partial(miss_distance, spec, self.cfg), grid, workers=self.cfg.workers)
        return grid, np.asarray(values)

    def roots(self, spec, window):
        grid, values = self.scan(spec, window)
        f = partial(miss_distance, spec, self.cfg)
        roots = []
        for i in range(len(grid)):
            if values[i] == 0.0:
                roots.append(float(grid[i]))
                continue
            if i + 1 < len(grid) and values[i] * values[i + 1] < 0.0:
                roots.append(float(brentq(f, grid[i], grid[i + 1], xtol=self.cfg.eig_tol,
                                          rtol=4 * np.finfo(float).eps)))
            elif 0 < i < len(grid) - 1 and abs(values[i]) < SUSPECT_TOL \
                    and abs(values[i]) <= min(abs(values[i - 1]), abs(values[i + 1])) \
                    and values[i - 1] * values[i + 1] > 0.0 and values[i - 1] * values[i] > 0.0:
                raise SuspectedDoubleRoot(f"|miss| dips to {values[i]:.3e} at lambda={grid[i]} without a sign change")
        logger.debug("shooting: %d roots in %s with step %.4g", len(roots), window, grid[1] - grid[0])
        return roots

    def solve(self, spec, window, samples=True):
        lams = self.roots(spec, window)
        funcs = [eigenfunction_samples(spec, self.cfg, lam) for lam in lams] if samples else None
        return self._finalize(spec, window, lams, funcs)

    @staticmethod
    def add_solver_specific_args(parent_parser):
        parser = parent_parser.add_argument_group("shooting")

        parser.add_argument("--match_point", type=float, default=0.5 * math.pi)
        parser.add_argument("--series_order", type=int, default=8)
        parser.add_argument("--start_offset", type=float, default=1e-4)
        parser.add_argument("--integrator_tol", type=float, default=1e-11)
        parser.add_argument("--scan_step", type=float, default=None)

        return parent_parser

    @classmethod
    def config_from_args(cls, args):
        return ShootingConfig(match_point=args.match_point, series_order=args.series_order,
                              start_offset=args.start_offset, integrator_tol=args.integrator_tol,
                              scan_step=args.scan_step, workers=getattr(args, "workers", 1))


def shooting_spectrum(spec, cfg, window):
    return SHOOTING(cfg).solve(spec, window)


def with_match_point(cfg, theta):
    return replace(cfg, match_point=theta)
