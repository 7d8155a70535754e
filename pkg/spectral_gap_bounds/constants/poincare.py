"""Talenti, Poincaré–Sobolev and γ_α constants of the unit disc."""

from __future__ import annotations

import logging
import math

import numpy as np
from scipy.special import gammaln

from ..config import OptimizerConfig
from ..errors import DomainError, require_open_interval
from .optimize import minimize_log_objective
from .types import ConstantTrace

logger = logging.getLogger(__name__)

LOG_PI = math.log(math.pi)
LOG10_E = math.log10(math.e)


def exponent_r(alpha: float) -> float:
    """Lebesgue exponent r = 4α/(α−2) paired with regularity α (r = 4 at α = ∞)."""
    if not alpha > 2:
        raise DomainError(f"alpha must exceed 2, got {alpha!r}")
    return 4.0 if math.isinf(alpha) else 4 * alpha / (alpha - 2)


def gamma_alpha_interval(alpha: float) -> tuple[float, float]:
    """Admissible p-interval (4α/(3α−2), 2), exactly (4/3, 2) at α = ∞."""
    if not alpha > 2:
        raise DomainError(f"alpha must exceed 2, got {alpha!r}")
    lower = 4.0 / 3.0 if math.isinf(alpha) else 4 * alpha / (3 * alpha - 2)
    return lower, 2.0


def _log_gamma_pair(p: np.ndarray) -> np.ndarray:
    return gammaln(2 / p) + gammaln(3 - 2 / p)


def log_talenti(p: np.ndarray, n: int = 2) -> np.ndarray:
    """Natural log of A_{p,q}(ℝⁿ), q = np/(n−p)."""
    p = np.asarray(p, dtype=float)
    gamma_ratio = gammaln(1 + n / 2) + gammaln(n) - gammaln(n / p) - gammaln(1 + n - n / p)
    return -0.5 * LOG_PI - math.log(n) / p + ((p - 1) / p) * np.log((p - 1) / (n - p)) + gamma_ratio / n


def log_poincare_objective(p: np.ndarray, r: float) -> np.ndarray:
    """Natural log of the A_{r,2}(𝔻) objective at p."""
    p = np.asarray(p, dtype=float)
    return ((p - 1) / p) * np.log((p - 1) / (2 - p)) + ((2 - r) / (2 * r)) * LOG_PI - math.log(2) / p - 0.5 * _log_gamma_pair(p)


def log_gamma_alpha_objective(p: np.ndarray, alpha: float) -> np.ndarray:
    """Natural log of the γ_α objective at p."""
    p = np.asarray(p, dtype=float)
    pi_exponent = 0.5 if math.isinf(alpha) else (alpha + 2) / (2 * alpha)
    return (2 * (p - 1) / p) * np.log((p - 1) / (2 - p)) - pi_exponent * LOG_PI - math.log(4) / p - _log_gamma_pair(p)


def composite_poincare(p: float, r: float) -> float:
    """π^{(q−r)/(qr)} · π^{(2−p)/(2p)} · A_{p,q}(ℝ²): the Hölder–Talenti chain at p."""
    q = 2 * p / (2 - p)
    return math.pi ** ((q - r) / (q * r)) * math.pi ** ((2 - p) / (2 * p)) * talenti_constant(p)


def talenti_constant(p: float, n: int = 2) -> float:
    """Sharp Sobolev constant A_{p,q}(ℝⁿ) for 1 < p < n."""
    if n < 2:
        raise DomainError(f"dimension n must be >= 2, got {n!r}")
    require_open_interval("p", p, 1.0, float(n))
    return float(np.exp(log_talenti(np.asarray([p]), n))[0])


def poincare_objective(p: float, r: float) -> float:
    """The A_{r,2}(𝔻) objective at a single p."""
    return float(np.exp(log_poincare_objective(np.asarray([p]), r))[0])


def gamma_alpha_objective(p: float, alpha: float) -> float:
    """The γ_α objective at a single p."""
    return float(np.exp(log_gamma_alpha_objective(np.asarray([p]), alpha))[0])


def poincare_constant_bound(r: float, config: OptimizerConfig | None = None) -> ConstantTrace:
    """Upper bound on A_{r,2}(𝔻) as the infimum over p ∈ (2r/(r+2), 2)."""
    if not r >= 2:
        raise DomainError(f"r must be >= 2, got {r!r}")
    lower = 2 * r / (r + 2)
    infimum = minimize_log_objective(lambda p: log_poincare_objective(p, r), lower, 2.0, config)
    logger.debug("[CONSTANTS] A_{r,2} r=%s p*=%s certificate=%s", r, infimum.argument, infimum.certificate)
    return ConstantTrace(
        name=f"A_r2(r={r:g})",
        value=math.exp(infimum.log_value),
        log10_value=infimum.log_value * LOG10_E,
        optimizer_argument=infimum.argument,
        interval=infimum.interval,
        certificate=infimum.certificate,
        formula_id="poincare-sobolev-disc",
    )


def gamma_alpha(alpha: float, config: OptimizerConfig | None = None) -> ConstantTrace:
    """γ_α, the bound on A²_{r,2}(𝔻) at r = 4α/(α−2); alpha may be math.inf."""
    lower, upper = gamma_alpha_interval(alpha)
    infimum = minimize_log_objective(lambda p: log_gamma_alpha_objective(p, alpha), lower, upper, config)
    logger.debug("[CONSTANTS] gamma_alpha alpha=%s p*=%s value=%s", alpha, infimum.argument, math.exp(infimum.log_value))
    return ConstantTrace(
        name=f"gamma_alpha(alpha={'inf' if math.isinf(alpha) else f'{alpha:g}'})",
        value=math.exp(infimum.log_value),
        log10_value=infimum.log_value * LOG10_E,
        optimizer_argument=infimum.argument,
        interval=infimum.interval,
        certificate=infimum.certificate,
        formula_id="gamma-alpha-stability",
    )
