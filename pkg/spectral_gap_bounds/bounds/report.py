"""Bound reports for map images and their validation against the reference solver."""

from __future__ import annotations

from collections.abc import Sequence
import logging
import math

from ..config import NumericsConfig, default_numerics_config
from ..confmap import (
    InradiusMode,
    PolynomialConformalMap,
    area,
    boundary_polygon,
    check_disc_containment,
    inscribed_radius,
    polygon_area,
    polygon_perimeter,
    require_locally_conformal,
    variation_upper_bound,
)
from ..constants import ConstantTrace, DiscConstants, disc_constants, disc_traces, gamma_alpha
from ..eigensolver import EigenResult
from ..errors import DomainError
from ..utils import format_alpha
from .engine import (
    PPW_CLASSICAL_RATIO,
    bounds_from_slack,
    faber_krahn_lower,
    high_eigenvalue_bounds,
    high_ratio_lower,
    inscribed_disc_upper,
    payne_weinberger_upper,
    ppw_ratio_upper,
    sandwich_slack,
    stability_bound,
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

logger = logging.getLogger(__name__)

STABILITY_MODES = (1, 2, 3)


def _lower(value: float, provenance: str) -> BoundValue:
    return BoundValue(value=value, vacuous=not value > 0, provenance=provenance)


def _log10(value: float) -> float:
    return math.log10(value) if value > 0 else -math.inf


def build_bound_report(
    inputs: BoundInputs,
    gamma_trace: ConstantTrace | None = None,
    disc: DiscConstants | None = None,
) -> BoundReport:
    """Every conformal bound for one set of inputs, with the constants behind them."""
    disc = disc or disc_constants()
    slack = sandwich_slack(inputs, disc)
    sandwich = bounds_from_slack(slack, disc)
    stability = {
        k: stability_bound(k, (disc.eigenvalue(k) / inputs.rho**2) ** 2, inputs.gamma_alpha_value, inputs.variation)
        for k in STABILITY_MODES
    }
    pw_upper = None
    if inputs.perimeter is not None:
        pw_upper = BoundValue(value=payne_weinberger_upper(inputs.area, inputs.perimeter, disc), provenance="payne-weinberger-isoperimetric")
    traces = [
        *disc_traces(disc),
        gamma_trace or ConstantTrace.closed_form(f"gamma_alpha(alpha={format_alpha(inputs.alpha)})", inputs.gamma_alpha_value, "gamma-alpha-stability"),
        ConstantTrace.closed_form("lambda1_inscribed_disc", inscribed_disc_upper(inputs.rho, disc), "inscribed-disc-monotonicity"),
        ConstantTrace(name="variation_upper", value=inputs.variation, log10_value=_log10(inputs.variation), formula_id="conformal-variation-witness"),
    ]
    report = BoundReport(
        inputs=inputs,
        lambda1_upper=BoundValue(value=sandwich.lambda1_upper, provenance="lambda1-upper-conformal"),
        lambda2_lower=_lower(sandwich.lambda2_lower, "lambda2-lower-conformal"),
        ratio_lower=_lower(sandwich.ratio_lower, "ppw-ratio-lower-conformal"),
        gap_lower=_lower(sandwich.gap_lower, "spectral-gap-lower-conformal"),
        fk_lower=BoundValue(value=faber_krahn_lower(inputs.area, disc), provenance="rayleigh-faber-krahn"),
        pw_upper=pw_upper,
        stability_radius_k=stability,
        slack_log10=_log10(slack),
        constants_used=traces,
    )
    logger.debug(
        "[BOUNDS] rho=%s alpha=%s V=%s upper=%s lower2=%s ratio=%s",
        inputs.rho,
        inputs.alpha,
        inputs.variation,
        sandwich.lambda1_upper,
        sandwich.lambda2_lower,
        sandwich.ratio_lower,
    )
    return report


def isoperimetric_perimeter(phi: PolynomialConformalMap, area_value: float, samples: int) -> float:
    """Boundary length carried to the exact area through the sample polygon's own isoperimetric quotient.

    An inscribed polygon falls short of both |∂Ω| and |Ω|; its quotient L²/(4πA) is still >= 1.
    """
    polygon = boundary_polygon(phi, samples)
    return polygon_perimeter(polygon) * math.sqrt(area_value / abs(polygon_area(polygon)))


def conformal_bounds(phi: PolynomialConformalMap, alpha: float, *, rho_mode: InradiusMode = "formula", numerics: NumericsConfig | None = None) -> BoundReport:
    """Full pipeline for an area-π map image: γ_α, ρ, V, |Ω|, |∂Ω| and the bounds."""
    numerics = numerics or default_numerics_config()
    require_locally_conformal(phi)
    area_value = area(phi)
    gamma_trace = gamma_alpha(alpha, numerics.optimizer)
    inputs = BoundInputs(
        rho=inscribed_radius(phi, rho_mode, numerics.geometry),
        alpha=alpha,
        variation=variation_upper_bound(phi, alpha, numerics.quadrature),
        gamma_alpha_value=gamma_trace.value,
        area=area_value,
        perimeter=isoperimetric_perimeter(phi, area_value, numerics.geometry.polygon_samples),
    )
    return build_bound_report(inputs, gamma_trace)


def certify_containment(phi: PolynomialConformalMap, t: float, numerics: NumericsConfig | None = None) -> DiscContainment:
    numerics = numerics or default_numerics_config()
    return DiscContainment(map_label=phi.label, t=t, certified=check_disc_containment(phi, t, numerics.geometry))


def high_eigenvalue_report(
    phi: PolynomialConformalMap,
    t: float,
    alpha: float,
    *,
    modes: Sequence[int] = (1, 2, 3),
    ratio_pairs: Sequence[tuple[int, int]] = ((1, 2),),
    numerics: NumericsConfig | None = None,
) -> HighEigenvalueReport:
    """Scaled-disc sandwich λ_k(𝔻) − t⁴λ_k²(𝔻)γ_αV ≤ λ_k(Ω) ≤ t²λ_k(𝔻) for each requested k."""
    numerics = numerics or default_numerics_config()
    require_locally_conformal(phi)
    containment = certify_containment(phi, t, numerics)
    gamma_trace = gamma_alpha(alpha, numerics.optimizer)
    variation = variation_upper_bound(phi, alpha, numerics.quadrature)
    disc = disc_constants()
    bounds = []
    for k in modes:
        lower, upper = high_eigenvalue_bounds(k, containment, gamma_trace.value, variation, disc)
        bounds.append(
            HighEigenvalueBounds(k=k, t=t, lower=_lower(lower, "high-eigenvalue-lower-scaled"), upper=BoundValue(value=upper, provenance="high-eigenvalue-upper-scaled"))
        )
    ratios = [
        HighRatioBound(m=m, n=n, lower=_lower(high_ratio_lower(m, n, containment, gamma_trace.value, variation, disc), "high-ratio-lower-scaled"))
        for m, n in ratio_pairs
    ]
    return HighEigenvalueReport(
        map_label=phi.label,
        containment=containment,
        variation=variation,
        bounds=bounds,
        ratios=ratios,
        constants_used=[*disc_traces(disc), gamma_trace],
    )


def _check(name: str, bound: float, observed: float, margin: float, kind: str, *, skipped: bool = False) -> SandwichCheck:
    if kind == "upper":
        passed = observed <= bound + margin
    else:
        passed = observed >= bound - margin
    return SandwichCheck(name=name, bound=bound, observed=observed, margin=margin, kind=kind, skipped=skipped, passed=skipped or passed)


def _ratio_margin(eigen: EigenResult) -> float:
    l1, l2 = eigen.estimates[0], eigen.estimates[1]
    m1, m2 = eigen.margin(1), eigen.margin(2)
    if l1 <= m1:
        return math.inf
    return (l2 + m2) / (l1 - m1) - l2 / l1


def validate_sandwich(report: BoundReport, eigen: EigenResult, disc: DiscConstants | None = None) -> SandwichValidation:
    """Check every conformal bound against solver eigenvalues, using the solver band as margin."""
    if len(eigen.estimates) < 2:
        raise DomainError("sandwich validation needs at least two solver eigenvalues")
    disc = disc or disc_constants()
    l1, l2 = eigen.estimates[0], eigen.estimates[1]
    m1, m2 = eigen.margin(1), eigen.margin(2)
    ratio, ratio_margin = l2 / l1, _ratio_margin(eigen)
    checks = [
        _check("lambda1_upper", report.lambda1_upper.value, l1, m1, "upper"),
        _check("lambda2_lower", report.lambda2_lower.value, l2, m2, "lower", skipped=report.lambda2_lower.vacuous),
        _check("ratio_lower", report.ratio_lower.value, ratio, ratio_margin, "lower", skipped=report.ratio_lower.vacuous),
        _check("gap_lower", report.gap_lower.value, l2 - l1, m1 + m2, "lower", skipped=report.gap_lower.vacuous),
        _check("ppw_ratio_upper", ppw_ratio_upper(disc), ratio, ratio_margin, "upper"),
        _check("ppw_classical_ratio", PPW_CLASSICAL_RATIO, ratio, ratio_margin, "upper"),
        _check("faber_krahn_lower", report.fk_lower.value, l1, m1, "lower"),
    ]
    if report.inputs is not None:
        checks.append(_check("inscribed_disc_upper", inscribed_disc_upper(report.inputs.rho, disc), l1, m1, "upper"))
    if report.pw_upper is not None:
        checks.append(_check("payne_weinberger_upper", report.pw_upper.value, l1, m1, "upper"))
    validation = SandwichValidation(checks=checks)
    logger.info("[VALIDATE] label=%s passed=%s failed=%s", eigen.label, validation.passed, [c.name for c in checks if not c.passed])
    return validation


def validate_high_sandwich(report: HighEigenvalueReport, eigen: EigenResult) -> SandwichValidation:
    """Check the scaled-disc sandwich for every mode the solver resolved."""
    checks: list[SandwichCheck] = []
    for bound in report.bounds:
        if bound.k > len(eigen.estimates):
            continue
        observed, margin = eigen.estimates[bound.k - 1], eigen.margin(bound.k)
        checks.append(_check(f"lambda{bound.k}_upper_scaled", bound.upper.value, observed, margin, "upper"))
        checks.append(_check(f"lambda{bound.k}_lower_scaled", bound.lower.value, observed, margin, "lower", skipped=bound.lower.vacuous))
    return SandwichValidation(checks=checks)
