from ..blockmat.block_matrix import (HermitianBlockMatrix, SchurSample, NEG_INFINITY, INFINITY,
                                      offdiag_instance, random_instance)
from ..blockmat.schur import (schur_complement, sigma_form, counting_function, index_shift_n0,
                              mu_minmax)
from ..blockmat.qnr import qnr_lambda_pm, p_of_x, sup_lambda_plus, maximizing_y
from ..blockmat.theorems import (VariationalReport, BoundCheck, oracle_eigenvalues,
                                 verify_bound_theorems, lower_bound_certificate, offdiag_sqrt_check,
                                 singularity_equivalence_check)
from ..blockmat.properties import PropertyResult, run_property_suite

__all__ = [
    "HermitianBlockMatrix",
    "SchurSample",
    "NEG_INFINITY",
    "INFINITY",
    "offdiag_instance",
    "random_instance",
    "schur_complement",
    "sigma_form",
    "counting_function",
    "index_shift_n0",
    "mu_minmax",
    "qnr_lambda_pm",
    "p_of_x",
    "sup_lambda_plus",
    "maximizing_y",
    "VariationalReport",
    "BoundCheck",
    "oracle_eigenvalues",
    "verify_bound_theorems",
    "lower_bound_certificate",
    "offdiag_sqrt_check",
    "singularity_equivalence_check",
    "PropertyResult",
    "run_property_suite",
]
