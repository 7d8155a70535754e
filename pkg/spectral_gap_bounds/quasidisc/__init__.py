"""Log-domain constants and eigenvalue bounds for K-quasidiscs."""

from .jacobian import (
    alpha_below_excess,
    alpha_star,
    c_kappa,
    conformal_derivative_bound,
    conformal_derivative_bound_excess,
    exponential_term_log10,
    feasible_alpha_max,
    feasible_excess_max,
    inverse_holder_constant,
    kappa_ceiling,
    log10_nu_excess,
    nu_conformal,
    nu_jacobian,
)
from .logscaled import LogScaledReal, log10_add, log10_one_minus
from .malpha import gamma_alpha_excess, log_gamma_alpha_gap_objective, m_alpha, p_gap_ceiling
from .report import bounds_from_log_constant, quasidisc_bounds, quasidisc_params, quasidisc_report
from .types import MAlphaResult, QuasidiscParams, QuasidiscReport

__all__ = [
    "LogScaledReal",
    "MAlphaResult",
    "QuasidiscParams",
    "QuasidiscReport",
    "alpha_below_excess",
    "alpha_star",
    "bounds_from_log_constant",
    "c_kappa",
    "conformal_derivative_bound",
    "conformal_derivative_bound_excess",
    "exponential_term_log10",
    "feasible_alpha_max",
    "feasible_excess_max",
    "gamma_alpha_excess",
    "inverse_holder_constant",
    "kappa_ceiling",
    "log10_add",
    "log10_nu_excess",
    "log10_one_minus",
    "log_gamma_alpha_gap_objective",
    "m_alpha",
    "nu_conformal",
    "nu_jacobian",
    "p_gap_ceiling",
    "quasidisc_bounds",
    "quasidisc_params",
    "quasidisc_report",
]
