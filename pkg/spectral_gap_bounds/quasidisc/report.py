"""Quasidisc eigenvalue bounds through the shared slack pipeline."""

from __future__ import annotations

import logging
import math

from ..bounds import BoundReport, BoundValue, bounds_from_slack, faber_krahn_lower, inscribed_disc_upper
from ..bounds.types import AREA_TOLERANCE
from ..config import OptimizerConfig
from ..constants import ConstantTrace, DiscConstants, disc_constants, disc_traces
from ..errors import DomainError
from .jacobian import alpha_below_excess, alpha_star, feasible_excess_max, log10_nu_excess
from .logscaled import MAX_LOG10_DOUBLE, LogScaledReal
from .malpha import m_alpha
from .types import MAlphaResult, QuasidiscParams, QuasidiscReport

logger = logging.getLogger(__name__)

CERTIFICATE_FACTOR = 1e-9


def quasidisc_params(K: float, area: float = math.pi) -> QuasidiscParams:
    """α*, the feasible exponent range and its bracketing certificate."""
    excess = feasible_excess_max(K)
    return QuasidiscParams(
        K=K,
        alpha_star=alpha_star(K),
        feasible_alpha_max=alpha_below_excess(excess),
        feasible_excess_max=excess,
        log10_nu_at_max=float(log10_nu_excess(excess, K)),
        log10_nu_above_max=float(log10_nu_excess(excess * (1 + CERTIFICATE_FACTOR), K)),
        area=area,
        provenance="nu-jacobian-feasibility:brentq-ln-excess:bracket-1e-9",
    )


def _trace(name: str, value: LogScaledReal, formula_id: str, argument: float | None = None) -> ConstantTrace:
    linear = value.to_float()
    return ConstantTrace(name=name, value=linear if math.isfinite(linear) else None, log10_value=value.log10_value, optimizer_argument=argument, formula_id=formula_id)


def bounds_from_log_constant(
    log10_constant: float,
    rho: float,
    deviation_l2: float,
    area: float,
    *,
    constant_trace: ConstantTrace | None = None,
    disc: DiscConstants | None = None,
) -> BoundReport:
    """Sandwich bounds with slack λ₁²(𝔻_ρ)·C·‖φ′−1‖₂ for a log10 constant C.

    The slack is formed in log10 and handed to `bounds_from_slack` as a
    double, overflowing to inf when it exceeds the double range.
    """
    if abs(area - math.pi) > AREA_TOLERANCE:
        raise DomainError(f"quasidisc bounds need a domain of area π, got area={area!r}")
    if not deviation_l2 >= 0:
        raise DomainError(f"deviation_l2 must be >= 0, got {deviation_l2!r}")
    disc = disc or disc_constants()
    lambda_rho = LogScaledReal.from_float(inscribed_disc_upper(rho, disc))
    slack = lambda_rho**2 * LogScaledReal.from_log10(log10_constant) * LogScaledReal.from_float(deviation_l2)
    sandwich = bounds_from_slack(slack.to_float() if slack.log10_value <= MAX_LOG10_DOUBLE else math.inf, disc)
    traces = [*disc_traces(disc), _trace("lambda1_inscribed_disc", lambda_rho, "inscribed-disc-monotonicity")]
    if constant_trace is not None:
        traces.append(constant_trace)

    def lower(value: float, provenance: str) -> BoundValue:
        return BoundValue(value=value, vacuous=not value > 0, provenance=provenance)

    return BoundReport(
        lambda1_upper=BoundValue(value=sandwich.lambda1_upper, provenance="lambda1-upper-quasidisc"),
        lambda2_lower=lower(sandwich.lambda2_lower, "lambda2-lower-quasidisc"),
        ratio_lower=lower(sandwich.ratio_lower, "ppw-ratio-lower-quasidisc"),
        gap_lower=lower(sandwich.gap_lower, "spectral-gap-lower-quasidisc"),
        fk_lower=BoundValue(value=faber_krahn_lower(area, disc), provenance="rayleigh-faber-krahn"),
        slack_log10=slack.log10_value,
        constants_used=traces,
    )


def quasidisc_bounds(
    K: float,
    rho: float,
    deviation_l2: float,
    area: float = math.pi,
    config: OptimizerConfig | None = None,
    *,
    m_result: MAlphaResult | None = None,
) -> BoundReport:
    """λ₁ upper, λ₂ lower, ratio and gap lower of an area-π K-quasidisc with slack λ₁²(𝔻_ρ)·M_α(K)·‖φ′−1‖₂."""
    if abs(area - math.pi) > AREA_TOLERANCE:
        raise DomainError(f"quasidisc bounds need a domain of area π, got area={area!r}")
    m_result = m_result or m_alpha(K, area, config)
    trace = _trace(f"M_alpha(K={K:g})", m_result.value, "quasidisc-m-alpha", m_result.alpha_opt)
    report = bounds_from_log_constant(m_result.value.log10_value, rho, deviation_l2, area, constant_trace=trace)
    logger.info("[QUASIDISC] bounds K=%s slack_log10=%s vacuous=%s", K, report.slack_log10, [name for name, valid in report.validity_flags.items() if not valid])
    return report


def quasidisc_report(K: float, rho: float, deviation_l2: float, area: float = math.pi, config: OptimizerConfig | None = None) -> QuasidiscReport:
    """Parameters, M_α(K) and, for area π, the bounds in one report."""
    params = quasidisc_params(K, area)
    m_result = m_alpha(K, area, config)
    bounds = None
    if abs(area - math.pi) <= AREA_TOLERANCE:
        bounds = quasidisc_bounds(K, rho, deviation_l2, area, config, m_result=m_result)
    else:
        logger.warning("[QUASIDISC] area=%s is not π; reporting constants without eigenvalue bounds", area)
    return QuasidiscReport(params=params, m_alpha=m_result, rho=rho, deviation_l2=deviation_l2, bounds=bounds)
