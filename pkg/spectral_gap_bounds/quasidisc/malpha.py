"""M_α(K): the nested infimum over α and p behind the quasidisc eigenvalue bounds."""

from __future__ import annotations

import logging
import math

import numpy as np
from scipy.special import gammaln

from ..config import OptimizerConfig
from ..constants import Infimum, minimize_log_objective
from ..errors import DomainError
from .jacobian import conformal_derivative_bound_excess, feasible_excess_max
from .logscaled import LN10, LogScaledReal, log10_add
from .types import MAlphaResult

logger = logging.getLogger(__name__)

LOG_PI = math.log(math.pi)
OUTER_SPAN = 40.0
OUTER_SCAN_POINTS = 200


def p_gap_ceiling(delta: float) -> float:
    """2 − 4α/(3α−2) at α = 2 + δ, written without cancellation."""
    return 2 * delta / (4 + 3 * delta)


def log_gamma_alpha_gap_objective(gap: np.ndarray, delta: float) -> np.ndarray:
    """Natural log of the γ_α objective at p = 2 − gap, α = 2 + δ."""
    gap = np.asarray(gap, dtype=float)
    p = 2 - gap
    pi_exponent = (4 + delta) / (2 * (2 + delta))
    two_over_p = 1 + gap / p
    return (
        (2 * (1 - gap) / p) * np.log((1 - gap) / gap)
        - pi_exponent * LOG_PI
        - math.log(4) / p
        - gammaln(two_over_p)
        - gammaln(3 - two_over_p)
    )


def gamma_alpha_excess(delta: float, config: OptimizerConfig | None = None) -> Infimum:
    """Inner p-infimum of the γ_α objective at α = 2 + δ, over the gap 2 − p."""
    if not delta > 0:
        raise DomainError(f"alpha - 2 must be positive, got {delta!r}")
    return minimize_log_objective(lambda gap: log_gamma_alpha_gap_objective(gap, delta), 0.0, p_gap_ceiling(delta), config)


def _log10_m_at(delta: float, K: float, area: float, config: OptimizerConfig) -> tuple[float, Infimum, float]:
    inner = gamma_alpha_excess(delta, config)
    derivative = conformal_derivative_bound_excess(delta, K, area).log10_value
    identity_norm = math.log10(math.pi) / (2 + delta)
    return inner.log_value / LN10 + log10_add(derivative, identity_norm), inner, derivative


def m_alpha(K: float, area: float, config: OptimizerConfig | None = None) -> MAlphaResult:
    """inf over α ∈ (2, feasible α] and p of γ_α-objective·(‖φ′‖_α bound + π^{1/α}), in log10.

    The outer search runs over log(α − 2) on a window of OUTER_SPAN below
    the feasible excess.
    """
    if not area > 0:
        raise DomainError(f"area must be positive, got {area!r}")
    config = config or OptimizerConfig()
    ceiling = feasible_excess_max(K)
    outer_config = config.model_copy(update={"scan_points": min(config.scan_points, OUTER_SCAN_POINTS)})

    def outer(log_deltas: np.ndarray) -> np.ndarray:
        values = []
        for log_delta in np.atleast_1d(log_deltas):
            delta = min(math.exp(float(log_delta)), ceiling)
            values.append(_log10_m_at(delta, K, area, config)[0])
        return np.asarray(values)

    upper = math.log(ceiling)
    infimum = minimize_log_objective(outer, upper - OUTER_SPAN, upper, outer_config)
    delta = min(math.exp(infimum.argument), ceiling)
    log10_value, inner, derivative = _log10_m_at(delta, K, area, config)
    result = MAlphaResult(
        K=K,
        area=area,
        value=LogScaledReal(log10_value=log10_value),
        alpha_opt=2 + delta,
        alpha_excess_opt=delta,
        p_opt=2 - inner.argument,
        p_gap_opt=inner.argument,
        log10_gamma_alpha=inner.log_value / LN10,
        log10_derivative_bound=derivative,
        provenance=f"m-alpha:excess-infimum-{infimum.certificate}:p-gap-infimum-{inner.certificate}",
    )
    logger.info("[QUASIDISC] M_alpha K=%s log10=%s alpha-2=%s certificate=%s", K, log10_value, delta, infimum.certificate)
    return result
