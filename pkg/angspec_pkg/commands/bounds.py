import logging

from ..angular.bounds import best_enclosure
from ..angular.criteria import Tristate, index_shift_criteria, refined_endpoint_bounds
from ..data_utils.io_utils import rows_to_frame
from ..num_utils.misc_utils import parse_int_range
from .base import BASE, EXIT_OK, parse_n_values


logger = logging.getLogger(__name__)

COLUMNS = ["k", "am", "aomega", "n", "n0", "nu_lo", "nu_hi", "lam_check", "lam_hat", "spt_lo", "spt_hi",
           "apert_lo", "apert_hi", "lamQ", "comb_lo", "comb_hi", "active_lo", "active_hi", "flag"]


def bound_rows(p, n_values, n0_policy="auto", refinements=False):
    crit = index_shift_criteria(p)
    if n0_policy == "auto":
        certified = crit.certified_n0
        choices = [(certified, "")] if certified is not None else [(0, "n0_uncertified"), (1, "n0_uncertified")]
    else:
        choices = [(int(n0_policy), "n0_explicit")]
    refined = refined_endpoint_bounds(p, refinements)
    # n0 = m+ lets the SPT pair follow the assumed shift, otherwise it is dropped
    tied = crit.n0_equals_mplus is Tristate.YES
    rows = []
    for n0, flag in choices:
        m_plus = n0 if tied else None
        for n in n_values:
            bs = best_enclosure(p, n, n0, refined=refined, m_plus=m_plus)
            row = bs.to_row()
            notes = (flag, "clamped" if bs.clamped else "", "" if tied else "spt_dropped")
            row["flag"] = ";".join(f for f in notes if f)
            if refinements:
                row["refined_index"] = refined.index if refined else None
                row["refined_lo"] = refined.lower if refined else None
                row["refined_hi"] = refined.upper if refined else None
                row["refined_tag"] = refined.tag if refined else ""
            rows.append(row)
    return rows


class BOUNDS(BASE):

    name = "bounds"

    def run(self):
        args = self.args
        n_text = str(args.n)
        n_values = parse_n_values(n_text) if ".." in n_text or "," in n_text else list(range(1, int(n_text) + 1))
        rows = []
        for k in parse_int_range(args.k):
            rows.extend(bound_rows(self.params_from_args(k), n_values, args.n0, self.run_cfg.unverified_refinements))
        columns = COLUMNS + (["refined_index", "refined_lo", "refined_hi", "refined_tag"]
                             if self.run_cfg.unverified_refinements else [])
        self.emit(rows_to_frame(rows, columns), {"am": args.am, "aomega": args.aomega, "k": args.k, "n": args.n})
        return EXIT_OK

    @staticmethod
    def add_command_specific_args(parent_parser):
        parser = parent_parser.add_argument_group("bounds")

        BASE.add_physical_args(parser)
        parser.add_argument("--k", type=str, default="0")
        parser.add_argument("--n", type=str, default="1")
        parser.add_argument("--n0", type=str, default="auto")

        return parent_parser
