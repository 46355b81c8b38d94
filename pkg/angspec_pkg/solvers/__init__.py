from ..solvers.base import (BASE, AngularOperatorSpec, Spectrum, SpectrumEntry, THETA_GRID,
                            normalize_samples)
from ..solvers.frobenius import FrobeniusExponents, frobenius_exponents
from ..solvers.shooting import SHOOTING, ShootingConfig, miss_distance, shooting_spectrum
from ..solvers.galerkin import GALERKIN, GalerkinConfig, galerkin_spectrum
from ..solvers.continuation import (Diagnostics, enumerate_indices, m_pm_count, nu_numeric,
                                    diagnostics, annotate, index_window, compute_spectrum)


SOLVERS = {
    "shooting": SHOOTING,
    "galerkin": GALERKIN,
}
__all__ = [
    "SOLVERS",
    "BASE",
    "AngularOperatorSpec",
    "Spectrum",
    "SpectrumEntry",
    "THETA_GRID",
    "normalize_samples",
    "FrobeniusExponents",
    "frobenius_exponents",
    "SHOOTING",
    "ShootingConfig",
    "miss_distance",
    "shooting_spectrum",
    "GALERKIN",
    "GalerkinConfig",
    "galerkin_spectrum",
    "Diagnostics",
    "enumerate_indices",
    "m_pm_count",
    "nu_numeric",
    "diagnostics",
    "annotate",
    "index_window",
    "compute_spectrum",
]
