"""Inverse Hölder and conformal-derivative constants of K-quasidiscs, in log10.

Exponents close to 2 are handled through their excess δ = γ − 2, which stays
accurate where γ itself cannot resolve the feasible range (δ ≈ 1e−13 at
K = 1.01).
"""

from __future__ import annotations

import logging
import math

import numpy as np
from scipy.optimize import brentq

from ..errors import DomainError, InfeasibleConstantError
from .logscaled import LN10, LogScaledReal, log10_one_minus

logger = logging.getLogger(__name__)

LOG10_PI = math.log10(math.pi)
LOG10_24PI2 = math.log10(24 * math.pi**2)
# π²(2 + π²)²
EXPONENTIAL_CORE = math.pi**2 * (2 + math.pi**2) ** 2
INNER_CONSTANT_LOG10 = 6.0
SMALLEST_EXCESS = 1e-300
MAX_FEASIBLE_STEPS = 64


def _require_K(K: float, *, strict: bool = False) -> None:
    if strict and not K > 1:
        raise DomainError(f"K must exceed 1, got K={K!r}")
    if not K >= 1 or math.isinf(K):
        raise DomainError(f"K must be a finite value >= 1, got K={K!r}")


def kappa_ceiling(K: float) -> float:
    """K/(K−1), inf at K = 1."""
    _require_K(K)
    return math.inf if K == 1 else K / (K - 1)


def alpha_star(K: float) -> float:
    """Integrability ceiling 2K²/(K²−1) of φ′ on the disc."""
    _require_K(K, strict=True)
    return 2 * K * K / (K * K - 1)


def excess_ceiling(K: float) -> float:
    """α* − 2 = 2/(K²−1), inf at K = 1."""
    _require_K(K)
    return math.inf if K == 1 else 2 / (K * K - 1)


def exponential_term_log10(K: float, power: int) -> float:
    """log10 of exp{K^power·π²(2+π²)²/(2^power·ln 3)}."""
    return K**power * EXPONENTIAL_CORE / (2**power * math.log(3) * LN10)


def _log10_nu_jacobian(kappa: float, K: float) -> float:
    return 8 * kappa + math.log10((2 * kappa - 2) / (2 * kappa - 1)) + 2 * kappa * (LOG10_24PI2 + math.log10(K))


def nu_jacobian(kappa: float, K: float) -> LogScaledReal:
    """ν = 10^{8κ}·((2κ−2)/(2κ−1))·(24π²K)^{2κ} for 1 < κ < K/(K−1)."""
    ceiling = kappa_ceiling(K)
    if not 1 < kappa < ceiling:
        raise DomainError(f"kappa={kappa!r} must lie in the open interval (1, {ceiling!r}) for K={K!r}")
    return LogScaledReal(log10_value=_log10_nu_jacobian(kappa, K))


def _require_feasible(nu: LogScaledReal, **where: float) -> None:
    if nu.log10_value >= 0:
        raise InfeasibleConstantError(f"constant undefined: ν ≥ 1 (log10 ν = {nu.log10_value!r}) at {where}")


def c_kappa(kappa: float, K: float) -> LogScaledReal:
    """C_κ = 10⁶/[(2κ−1)(1−ν)]^{1/(2κ)}."""
    nu = nu_jacobian(kappa, K)
    _require_feasible(nu, kappa=kappa, K=K)
    radicand = math.log10(2 * kappa - 1) + log10_one_minus(nu.log10_value)
    return LogScaledReal(log10_value=INNER_CONSTANT_LOG10 - radicand / (2 * kappa))


def inverse_holder_constant(kappa: float, K: float) -> LogScaledReal:
    """(C_κ²·K·π^{1/κ−1}/4)·exp{Kπ²(2+π²)²/(2 ln 3)}, the Jacobian inverse Hölder prefactor."""
    log10_c = c_kappa(kappa, K).log10_value
    log10_value = 2 * log10_c + math.log10(K) + (1 / kappa - 1) * LOG10_PI - math.log10(4) + exponential_term_log10(K, 1)
    return LogScaledReal(log10_value=log10_value)


def log10_nu_excess(delta: np.ndarray | float, K: float) -> np.ndarray:
    """log10 ν(2 + δ) with ν(γ) = 10^{4γ}((γ−2)/(γ−1))(24π²K²)^γ."""
    delta = np.asarray(delta, dtype=float)
    gamma = 2 + delta
    return 4 * gamma + np.log10(delta) - np.log1p(delta) / LN10 + gamma * (LOG10_24PI2 + 2 * math.log10(K))


def nu_conformal(gamma: float, K: float) -> LogScaledReal:
    """ν(γ) of the conformal-derivative bound for γ > 2."""
    _require_K(K)
    if not gamma > 2:
        raise DomainError(f"gamma must exceed 2, got {gamma!r}")
    return LogScaledReal(log10_value=float(log10_nu_excess(gamma - 2, K)))


def conformal_derivative_bound_excess(delta: float, K: float, area: float) -> LogScaledReal:
    """Bound on ‖φ′‖_{L^γ(𝔻)} at γ = 2 + δ; see conformal_derivative_bound."""
    ceiling = excess_ceiling(K)
    if not 0 < delta < ceiling:
        raise DomainError(f"gamma - 2 = {delta!r} must lie in (0, {ceiling!r}) for K={K!r}")
    if not area > 0:
        raise DomainError(f"area must be positive, got {area!r}")
    gamma = 2 + delta
    log10_nu = float(log10_nu_excess(delta, K))
    if log10_nu >= 0:
        raise InfeasibleConstantError(f"constant undefined: ν ≥ 1 (log10 ν = {log10_nu!r}) at gamma - 2 = {delta!r}, K={K!r}")
    log10_c = INNER_CONSTANT_LOG10 - (math.log1p(delta) / LN10 + log10_one_minus(log10_nu)) / gamma
    log10_value = (
        log10_c
        + math.log10(K)
        - delta / (2 * gamma) * LOG10_PI
        - math.log10(2)
        + exponential_term_log10(K, 2)
        + 0.5 * math.log10(area)
    )
    return LogScaledReal(log10_value=log10_value)


def conformal_derivative_bound(gamma: float, K: float, area: float) -> LogScaledReal:
    """(C_γ·K·π^{(2−γ)/(2γ)}/2)·exp{K²π²(2+π²)²/(4 ln 3)}·|Ω|^{1/2}.

    C_γ = 10⁶/[(γ−1)(1−ν)]^{1/γ}; requires 2 < γ < 2K²/(K²−1) and ν(γ) < 1.
    """
    if not gamma > 2:
        raise DomainError(f"gamma must exceed 2, got {gamma!r}")
    return conformal_derivative_bound_excess(gamma - 2, K, area)


def _nu_root_objective(log_delta: float, K: float) -> float:
    return float(log10_nu_excess(math.exp(log_delta), K))


def feasible_excess_max(K: float) -> float:
    """Largest δ < α* − 2 with ν(2 + δ) < 1.

    log10 ν is strictly increasing in δ, so the root is bracketed in log δ and
    solved with Brent's method, then nudged down until ν < 1 holds.
    """
    _require_K(K, strict=True)
    ceiling = excess_ceiling(K)
    upper = math.log(ceiling)
    if _nu_root_objective(upper, K) < 0:
        logger.warning("[QUASIDISC] nu < 1 on the whole range K=%s; returning the integrability ceiling", K)
        return ceiling * (1 - 1e-12)
    root = math.exp(brentq(_nu_root_objective, math.log(SMALLEST_EXCESS), upper, args=(K,), xtol=1e-15, maxiter=500))
    for _ in range(MAX_FEASIBLE_STEPS):
        if float(log10_nu_excess(root, K)) < 0:
            break
        root *= 1 - 1e-13
    logger.debug("[QUASIDISC] feasible excess K=%s delta=%s log10_nu=%s", K, root, float(log10_nu_excess(root, K)))
    return root


def alpha_below_excess(delta: float) -> float | None:
    """Largest double α with α − 2 ≤ δ, or None when it rounds to 2."""
    alpha = 2 + delta
    if alpha - 2 > delta:
        alpha = math.nextafter(alpha, 2.0)
    return alpha if alpha > 2 else None


def feasible_alpha_max(K: float) -> float:
    """Largest double α ∈ (2, α*) with ν(α) < 1."""
    delta = feasible_excess_max(K)
    alpha = alpha_below_excess(delta)
    if alpha is None:
        raise DomainError(f"feasible gamma - 2 = {delta!r} at K={K!r} is below double resolution of alpha; use feasible_excess_max")
    return alpha
