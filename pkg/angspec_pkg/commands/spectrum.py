import logging

import numpy as np

from ..data_utils.io_utils import rows_to_frame
from ..solvers import SOLVERS, SHOOTING
from ..solvers.base import THETA_GRID
from ..solvers.continuation import compute_spectrum
from .base import BASE, EXIT_OK, parse_n_values


logger = logging.getLogger(__name__)

METHODS = ("shooting", "galerkin", "both")


def efun_samples(entry, count):
    """`count` evenly spaced grid samples (theta, f, g) of a normalized eigenfunction."""
    if entry.samples is None:
        return None
    picks = np.unique(np.linspace(0, THETA_GRID.size - 1, num=min(count, THETA_GRID.size)).round().astype(int))
    return {
        "theta": [float(t) for t in THETA_GRID[picks]],
        "f": [float(v) for v in entry.samples[picks, 0]],
        "g": [float(v) for v in entry.samples[picks, 1]],
    }


def spectrum_rows(p, n_values, method="shooting", shooting_cfg=None, basis_size=None, samples=0):
    if method not in METHODS:
        raise NotImplementedError(f"method {method!r} not implemented")
    primary = "galerkin" if method == "galerkin" else "shooting"
    spectrum = compute_spectrum(p, n_values, primary, shooting_cfg=shooting_cfg, basis_size=basis_size)
    other = compute_spectrum(p, n_values, "galerkin", basis_size=basis_size) if method == "both" else None
    rows = []
    for n in n_values:
        entry = spectrum.by_index(n)
        row = entry.to_row(p)
        row["method"] = primary
        if other is not None:
            row["lambda_galerkin"] = other.by_index(n).lam
            row["agreement"] = abs(row["lambda"] - row["lambda_galerkin"])
        if samples:
            row["efun"] = efun_samples(entry, samples)
        rows.append(row)
    return rows, spectrum


class SPECTRUM(BASE):

    name = "spectrum"

    def run(self):
        args = self.args
        if args.samples and self.run_cfg.fmt != "json":
            raise ValueError("--samples needs --format json")
        p = self.params_from_args(int(args.k))
        n_values = parse_n_values(args.n)
        cfg = SHOOTING.config_from_args(args)
        rows, spectrum = spectrum_rows(p, n_values, args.method, shooting_cfg=cfg,
                                       basis_size=args.basis_size, samples=args.samples)
        if spectrum.m_plus is not None:
            logger.info("m- = %s, m+ = %s, eigenvalues in [-|am|, |am|]: %s",
                        spectrum.m_minus, spectrum.m_plus, spectrum.interval_count)
        self.emit(rows_to_frame(rows), {"a": p.a, "m": p.m, "omega": p.omega, "k": p.k, "method": args.method})
        return EXIT_OK

    @staticmethod
    def add_command_specific_args(parent_parser):
        parser = parent_parser.add_argument_group("spectrum")

        BASE.add_physical_args(parser)
        parser.add_argument("--k", type=int, default=0)
        parser.add_argument("--n", type=str, default="-3..3")
        parser.add_argument("--method", choices=METHODS, type=str, default="shooting")
        parser.add_argument("--samples", type=int, default=0)

        for solver in SOLVERS.values():
            parent_parser = solver.add_solver_specific_args(parent_parser)
        return parent_parser
