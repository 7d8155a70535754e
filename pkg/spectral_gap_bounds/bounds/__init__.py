"""Dirichlet eigenvalue bounds for conformal images of the disc."""

from .engine import (
    PPW_CLASSICAL_RATIO,
    SlackBounds,
    bounds_from_slack,
    epicycloid_C,
    epicycloid_rho,
    epicycloid_variation_closed_form,
    faber_krahn_lower,
    high_eigenvalue_bounds,
    high_ratio_lower,
    inscribed_disc_upper,
    lambda1_upper,
    lambda2_lower,
    payne_weinberger_upper,
    ppw_ratio_lower,
    ppw_ratio_upper,
    sandwich_slack,
    spectral_gap_lower,
    stability_bound,
)
from .report import (
    build_bound_report,
    certify_containment,
    conformal_bounds,
    high_eigenvalue_report,
    isoperimetric_perimeter,
    validate_high_sandwich,
    validate_sandwich,
)
from .types import (
    BoundInputs,
    BoundReport,
    BoundValue,
    DiscContainment,
    HighEigenvalueBounds,
    HighEigenvalueReport,
    HighRatioBound,
    SandwichCheck,
    SandwichValidation,
)

__all__ = [
    "PPW_CLASSICAL_RATIO",
    "BoundInputs",
    "BoundReport",
    "BoundValue",
    "DiscContainment",
    "HighEigenvalueBounds",
    "HighEigenvalueReport",
    "HighRatioBound",
    "SandwichCheck",
    "SandwichValidation",
    "SlackBounds",
    "bounds_from_slack",
    "build_bound_report",
    "certify_containment",
    "conformal_bounds",
    "epicycloid_C",
    "epicycloid_rho",
    "epicycloid_variation_closed_form",
    "faber_krahn_lower",
    "high_eigenvalue_bounds",
    "high_eigenvalue_report",
    "high_ratio_lower",
    "inscribed_disc_upper",
    "isoperimetric_perimeter",
    "lambda1_upper",
    "lambda2_lower",
    "payne_weinberger_upper",
    "ppw_ratio_lower",
    "ppw_ratio_upper",
    "sandwich_slack",
    "spectral_gap_lower",
    "stability_bound",
    "validate_high_sandwich",
    "validate_sandwich",
]
