import logging

import numpy as np

from ..blockmat.block_matrix import HermitianBlockMatrix, random_instance
from ..blockmat.properties import run_property_suite
from ..data_utils.io_utils import rows_to_frame
from ..num_utils.misc_utils import parallel_map, parse_int_range
from .base import BASE, EXIT_OK, EXIT_VERIFY


logger = logging.getLogger(__name__)


def _instance_job(job):
    seed, i, n1, n2, text = job
    rng = np.random.default_rng([seed, i])
    if text is None:
        M = random_instance(rng, n1, n2, bijective=(n1 == n2))
    else:
        M = HermitianBlockMatrix.from_json(text, validate=False)
    results = run_property_suite(M, rng)
    rows = [{"instance": i, "n1": M.n1, "n2": M.n2, "property": r.name, "passed": r.passed, "detail": r.detail}
            for r in results]
    failed = not all(r.passed for r in results)
    return i, rows, (M.to_json() if failed else None)


def verify_instances(seed, count, n1, n2, workers=1, fixture_text=None):
    jobs = [(seed, i, n1, n2, fixture_text) for i in range(count)]
    return parallel_map(_instance_job, jobs, workers=workers, desc="verify" if count > 1 else None,
                        key=lambda res: res[0])


class VERIFY(BASE):

    name = "verify"

    def run(self):
        args = self.args
        dims = parse_int_range(args.dims)
        n1, n2 = (dims[0], dims[-1]) if dims else (8, 8)
        fixture_text = None
        count = args.instances
        if args.fixture:
            with open(args.fixture) as handle:
                fixture_text = handle.read()
            count = 1
        results = verify_instances(self.run_cfg.seed, count, n1, n2, self.run_cfg.workers, fixture_text)
        rows, failures = [], []
        for i, inst_rows, counterexample in results:
            rows.extend(inst_rows)
            if counterexample is not None:
                failures.append((i, counterexample))
        self.emit(rows_to_frame(rows, ["instance", "n1", "n2", "property", "passed", "detail"]),
                  {"instances": count, "dims": [n1, n2], "seed": self.run_cfg.seed})
        for i, counterexample in failures:
            self.report(f"counterexample at instance {i}:\n{counterexample}")
        if failures:
            logger.error("%d of %d instances violated a property", len(failures), count)
            return EXIT_VERIFY
        return EXIT_OK

    @staticmethod
    def add_command_specific_args(parent_parser):
        parser = parent_parser.add_argument_group("verify")

        parser.add_argument("--instances", type=int, default=100)
        parser.add_argument("--dims", type=str, default="8,8")
        parser.add_argument("--fixture", type=str, default=None)

        return parent_parser
