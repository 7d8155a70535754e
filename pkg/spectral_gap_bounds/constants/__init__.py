"""Analytic constants: Talenti, Poincaré–Sobolev, γ_α and the disc spectrum."""

from .disc import MAX_DISC_EIGENVALUES, disc_constants, disc_spectrum, disc_traces, j01_bessel_j1_squared
from .optimize import Infimum, minimize_log_objective, scan_nodes
from .poincare import (
    composite_poincare,
    exponent_r,
    gamma_alpha,
    gamma_alpha_interval,
    gamma_alpha_objective,
    log_gamma_alpha_objective,
    log_poincare_objective,
    poincare_constant_bound,
    poincare_objective,
    talenti_constant,
)
from .types import ConstantTrace, DiscConstants, ReportModel

__all__ = [
    "MAX_DISC_EIGENVALUES",
    "ConstantTrace",
    "DiscConstants",
    "Infimum",
    "ReportModel",
    "composite_poincare",
    "disc_constants",
    "disc_spectrum",
    "disc_traces",
    "exponent_r",
    "gamma_alpha",
    "gamma_alpha_interval",
    "gamma_alpha_objective",
    "j01_bessel_j1_squared",
    "log_gamma_alpha_objective",
    "log_poincare_objective",
    "minimize_log_objective",
    "poincare_constant_bound",
    "poincare_objective",
    "scan_nodes",
    "talenti_constant",
]
