"""Conformal eigenvalue bounds for images of the unit disc.

The command line lives in `spectral_gap_bounds.cli` and is not imported here.
"""

from ._version import __version__
from .bounds import BoundReport, build_bound_report, conformal_bounds, high_eigenvalue_report, validate_sandwich
from .confmap import PolynomialConformalMap, epicycloid_map, identity_map, load_map, section4_map
from .constants import disc_constants, disc_spectrum, gamma_alpha
from .eigensolver import EigenResult, solve_domain
from .errors import ContainmentError, DomainError, InfeasibleConstantError, SolverConvergenceError, SpectralBoundsError
from .quasidisc import QuasidiscReport, m_alpha, quasidisc_report

__all__ = [
    "BoundReport",
    "ContainmentError",
    "DomainError",
    "EigenResult",
    "InfeasibleConstantError",
    "PolynomialConformalMap",
    "QuasidiscReport",
    "SolverConvergenceError",
    "SpectralBoundsError",
    "__version__",
    "build_bound_report",
    "conformal_bounds",
    "disc_constants",
    "disc_spectrum",
    "epicycloid_map",
    "gamma_alpha",
    "high_eigenvalue_report",
    "identity_map",
    "load_map",
    "m_alpha",
    "quasidisc_report",
    "section4_map",
    "solve_domain",
    "validate_sandwich",
]
