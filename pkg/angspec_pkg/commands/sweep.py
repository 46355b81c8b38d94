import logging
import math
import warnings
from dataclasses import replace

import numpy as np

from ..angular.params import AngularParams
from ..angular.bounds import variational_bounds, lambda_q
from ..data_utils.io_utils import rows_to_frame
from ..errors import AngularError
from ..num_utils.misc_utils import parallel_map
from ..solvers.continuation import compute_spectrum
from .base import BASE, EXIT_OK, EXIT_USAGE


logger = logging.getLogger(__name__)

PARAMS = ("a", "k", "omega", "m")

# param, from, to, steps, fixed values
FIGURES = {
    "2": ("a", -3.0, 1.5, 91, {"k": 0, "m": 0.025, "omega": 0.75}),
    "3a": ("a", -3.0, 3.0, 121, {"k": 0, "m": 0.25, "omega": 0.75}),
    "3b": ("k", -4, 5, 10, {"a": 1.0, "m": 0.25, "omega": 0.75}),
}


def sweep_points(param, start, stop, steps):
    if param == "k":
        lo, hi = math.ceil(min(start, stop)), math.floor(max(start, stop))
        return [float(k) for k in range(lo, hi + 1)]
    if steps < 1:
        raise ValueError(f"steps must be positive, got {steps}")
    return [float(v) for v in np.linspace(start, stop, steps)]


def _point_job(job):
    param, value, base, with_solver = job
    p = replace(base, k=int(value)) if param == "k" else replace(base, **{param: value})
    lq = lambda_q(p)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        check, hat = variational_bounds(p, 1, 0)
    row = {param: value, "lamQ": lq.value if lq.defined else float("nan"),
           "lam_check_1": check, "lam_hat_1": hat}
    if with_solver:
        try:
            spectrum = compute_spectrum(p, [-1, 1])
            row["lam_min_modulus"] = min(spectrum.lambdas, key=abs)
        except AngularError as err:
            logger.warning("solver failed at %s=%g: %s", param, value, err)
            row["lam_min_modulus"] = float("nan")
    return row


def sweep_rows(param, points, base, with_solver=False, workers=1):
    jobs = [(param, value, base, with_solver) for value in points]
    return parallel_map(_point_job, jobs, workers=workers, desc="sweep" if with_solver else None,
                        key=lambda row: row[param])


class SWEEP(BASE):

    name = "sweep"

    def run(self):
        args = self.args
        if args.figure is not None:
            param, start, stop, steps, fixed = FIGURES[args.figure]
        else:
            if args.param is None or args.start is None or args.stop is None:
                self.report("sweep needs --param, --from and --to (or --figure)")
                return EXIT_USAGE
            param, start, stop, steps = args.param, args.start, args.stop, args.steps
            fixed = {"a": args.a, "m": args.m, "omega": args.omega, "k": args.k}
        fixed = {key: val for key, val in fixed.items() if key != param}
        base = AngularParams(a=fixed.get("a", 0.0), m=fixed.get("m", 0.0), omega=fixed.get("omega", 0.0),
                             k=int(fixed.get("k", 0)))
        points = sweep_points(param, start, stop, steps)
        rows = sweep_rows(param, points, base, args.with_solver, self.run_cfg.workers)
        columns = [param, "lamQ", "lam_check_1", "lam_hat_1"] + (["lam_min_modulus"] if args.with_solver else [])
        self.emit(rows_to_frame(rows, columns),
                  {"param": param, "from": start, "to": stop, "steps": len(points), "fixed": fixed})
        return EXIT_OK

    @staticmethod
    def add_command_specific_args(parent_parser):
        parser = parent_parser.add_argument_group("sweep")

        parser.add_argument("--param", choices=PARAMS, type=str, default=None)
        parser.add_argument("--from", dest="start", type=float, default=None)
        parser.add_argument("--to", dest="stop", type=float, default=None)
        parser.add_argument("--steps", type=int, default=50)
        parser.add_argument("--a", type=float, default=0.0)
        parser.add_argument("--m", type=float, default=0.0)
        parser.add_argument("--omega", type=float, default=0.0)
        parser.add_argument("--k", type=int, default=0)
        parser.add_argument("--with-solver", dest="with_solver", default=False, action="store_true")
        parser.add_argument("--figure", choices=sorted(FIGURES), type=str, default=None)

        return parent_parser
