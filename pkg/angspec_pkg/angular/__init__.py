from ..angular.params import AngularParams
from ..angular.bounds import (omega_pm, nu_enclosure, variational_bounds, spt_bounds,
                              a_perturbation_bounds, exact_spectrum_a0, lambda_q, LambdaQ,
                              BoundSet, best_enclosure)
from ..angular.criteria import (Tristate, ShiftCriteria, RefinedEndpoint, index_shift_criteria,
                                refined_endpoint_bounds)

__all__ = [
    "AngularParams",
    "omega_pm",
    "nu_enclosure",
    "variational_bounds",
    "spt_bounds",
    "a_perturbation_bounds",
    "exact_spectrum_a0",
    "lambda_q",
    "LambdaQ",
    "BoundSet",
    "best_enclosure",
    "Tristate",
    "ShiftCriteria",
    "RefinedEndpoint",
    "index_shift_criteria",
    "refined_endpoint_bounds",
]
