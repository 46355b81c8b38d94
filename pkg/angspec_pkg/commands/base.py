import sys
import logging
from dataclasses import dataclass
from typing import Optional

from ..angular.params import AngularParams
from ..data_utils.io_utils import emit
from ..num_utils.misc_utils import DEFAULT_SEED, worker_count, parse_int_range


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SOLVER = 3
EXIT_TABLE = 4
EXIT_VERIFY = 5


@dataclass(frozen=True)
class RunConfig:
    fmt: str = "csv"
    seed: int = DEFAULT_SEED
    out: Optional[str] = None
    workers: int = 1
    unverified_refinements: bool = False

    @classmethod
    def from_args(cls, args):
        return cls(fmt=args.format, seed=args.seed, out=args.out, workers=worker_count(args.workers),
                   unverified_refinements=args.unverified_refinements)


def parse_n_values(text, skip_zero=True):
    values = parse_int_range(text)
    return [n for n in values if n != 0] if skip_zero else values


class BASE:
    """A sub-command: registers its flags, then `run` returns an exit code."""

    name = "BASE"

    def __init__(self, args):
        self.args = args
        self.run_cfg = RunConfig.from_args(args)

    def run(self):
        raise NotImplementedError(f"command {self.name} has no run method")

    def params_from_args(self, k):
        args = self.args
        if getattr(args, "am", None) is not None or getattr(args, "aomega", None) is not None:
            return AngularParams.from_products(args.am or 0.0, args.aomega or 0.0, k)
        return AngularParams(a=args.a, m=args.m, omega=args.omega, k=k)

    def emit(self, frame, params):
        return emit(frame, self.run_cfg.fmt, self.name, params, self.run_cfg.out)

    def report(self, message):
        print(message, file=sys.stderr)

    @staticmethod
    def add_physical_args(parser):
        parser.add_argument("--am", type=float, default=None)
        parser.add_argument("--aomega", type=float, default=None)
        parser.add_argument("--a", type=float, default=0.0)
        parser.add_argument("--m", type=float, default=0.0)
        parser.add_argument("--omega", type=float, default=0.0)
        return parser

    @staticmethod
    def add_command_specific_args(parent_parser):
        return parent_parser
