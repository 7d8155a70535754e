"""Derivative norms of conformal maps, closed forms and quadrature."""

from __future__ import annotations

from dataclasses import dataclass
import logging
import math

import numpy as np
from numpy.polynomial import polynomial as P
from pydantic import Field
from scipy.optimize import minimize_scalar

from ..config import QuadratureConfig
from ..constants.types import ReportModel
from ..errors import DomainError
from ..utils import inverse_power
from .maps import PolynomialConformalMap, identity_map, scale_map
from .quadrature import DiscIntegral, integrate_disc

logger = logging.getLogger(__name__)

SERIES_ROOT_TOLERANCE = 1e-9


@dataclass(frozen=True, slots=True)
class ModulusIntegral:
    value: float
    converged: bool
    method: str


class DerivativeNorms(ReportModel):
    """‖φ′‖_α, ‖φ′ − 1‖₂, ‖|φ′| − 1‖₂ and |Ω| of one map."""

    alpha: float = Field(description="Regularity exponent; inf for the sup norm")
    l_alpha_norm: float = Field(ge=0)
    deviation_l2: float = Field(ge=0)
    modulus_deviation_l2: float = Field(ge=0)
    area: float = Field(gt=0)
    converged: bool = Field(description="False when a quadrature or series behind the norms missed its tolerance")
    provenance: str


def _monomial_l2_squared(coefficients: np.ndarray) -> float:
    """∬_𝔻 |Σ a_m z^m|² dA = π Σ |a_m|²/(m+1)."""
    orders = np.arange(len(coefficients))
    return float(math.pi * np.sum(np.abs(coefficients) ** 2 / (orders + 1)))


def area(phi: PolynomialConformalMap) -> float:
    """|Ω| = π Σ j|c_j|²."""
    c = phi.complex_coefficients
    return float(math.pi * np.sum(np.arange(len(c)) * np.abs(c) ** 2))


def _derivative_difference(phi: PolynomialConformalMap, other: PolynomialConformalMap) -> np.ndarray:
    return P.polysub(phi.derivative_coefficients, other.derivative_coefficients)


def deviation_between(phi: PolynomialConformalMap, other: PolynomialConformalMap) -> float:
    """‖φ′ − φ̃′‖_{L²(𝔻)} from coefficients."""
    return math.sqrt(_monomial_l2_squared(_derivative_difference(phi, other)))


def deviation_norm_l2(phi: PolynomialConformalMap) -> float:
    """‖φ′ − 1‖_{L²(𝔻)}."""
    return deviation_between(phi, identity_map())


def even_power_norm(phi: PolynomialConformalMap, alpha: int) -> float:
    """Closed-form ‖φ′‖_{L^α(𝔻)} for even integer α, via the coefficients of (φ′)^{α/2}."""
    if alpha < 2 or alpha % 2:
        raise DomainError(f"closed form needs an even integer alpha >= 2, got {alpha!r}")
    power = P.polypow(phi.derivative_coefficients, alpha // 2)
    return _monomial_l2_squared(power) ** (1.0 / alpha)


def quadrature_lp_integral(phi: PolynomialConformalMap, p: float, config: QuadratureConfig | None = None) -> DiscIntegral:
    """∬_𝔻 |φ′|^p dA by disc quadrature, any finite p >= 1."""
    if not p >= 1 or math.isinf(p):
        raise DomainError(f"p must be a finite exponent >= 1, got {p!r}")
    return integrate_disc(lambda z: np.abs(phi.derivative(z)) ** p, config)


def quadrature_lp_norm(phi: PolynomialConformalMap, p: float, config: QuadratureConfig | None = None) -> float:
    """(∬_𝔻 |φ′|^p dA)^{1/p}."""
    return quadrature_lp_integral(phi, p, config).value ** (1.0 / p)


def sup_norm(phi: PolynomialConformalMap, config: QuadratureConfig | None = None) -> float:
    """max |φ′| over |z| = 1, a dense sample refined around the best node."""
    config = config or QuadratureConfig()
    count = config.boundary_samples
    step = 2 * math.pi / count
    theta = step * np.arange(count)
    values = np.abs(phi.derivative(np.exp(1j * theta)))
    best = int(np.argmax(values))
    refined = minimize_scalar(
        lambda t: -float(np.abs(phi.derivative(np.exp(1j * t)))),
        bounds=(theta[best] - step, theta[best] + step),
        method="bounded",
        options={"xatol": 1e-14},
    )
    return max(float(values[best]), -float(refined.fun))


def derivative_norm(phi: PolynomialConformalMap, alpha: float, config: QuadratureConfig | None = None) -> float:
    """‖φ′‖_{L^α(𝔻)} for α > 2; alpha = math.inf gives the boundary sup."""
    if not alpha > 2:
        raise DomainError(f"alpha must exceed 2, got {alpha!r}")
    if math.isinf(alpha):
        return sup_norm(phi, config)
    return quadrature_lp_norm(phi, alpha, config)


def sqrt_series(coefficients: np.ndarray, terms: int) -> np.ndarray:
    """First `terms` Taylor coefficients of √p for a polynomial p with p(0) ≠ 0.

    g = √p solves 2p·g′ = p′·g, so b_M = Σ_{j=1}^{min(d,M)} a_j·b_{M−j}·(3j − 2M) / (2a₀M).
    """
    a = np.trim_zeros(np.asarray(coefficients, dtype=complex), "b")
    if not a.size or a[0] == 0:
        raise DomainError("square-root series needs a polynomial with p(0) != 0")
    b = np.zeros(terms, dtype=complex)
    b[0] = np.sqrt(a[0])
    degree = a.size - 1
    if not degree:
        return b
    tail = a[1:]
    tail_3j = 3 * np.arange(1, degree + 1) * tail
    for m in range(1, terms):
        k = min(degree, m)
        window = b[m - 1 :: -1][:k]
        b[m] = (tail_3j[:k] @ window - 2 * m * (tail[:k] @ window)) / (2 * a[0] * m)
    return b


def modulus_cross_integral(phi: PolynomialConformalMap, other: PolynomialConformalMap, config: QuadratureConfig | None = None) -> ModulusIntegral:
    """∬_𝔻 |φ′|·|φ̃′| dA.

    When φ′φ̃′ has no zero in the open disc, g = √(φ′φ̃′) is analytic there and
    the integral is π Σ |b_k|²/(k+1) over the Taylor coefficients of g. Boundary
    zeros only slow the decay to |b_k|² ~ k⁻³. Otherwise falls back to quadrature.
    """
    config = config or QuadratureConfig()
    product = P.polymul(phi.derivative_coefficients, other.derivative_coefficients)
    trimmed = np.trim_zeros(product, "b")
    roots = P.polyroots(trimmed) if len(trimmed) > 1 else np.empty(0)
    if np.any(np.abs(roots) < 1 - SERIES_ROOT_TOLERANCE):
        integral = integrate_disc(lambda z: np.abs(phi.derivative(z) * other.derivative(z)), config)
        return ModulusIntegral(value=integral.value, converged=integral.converged, method="disc-quadrature")
    terms = config.series_terms
    weights = np.abs(sqrt_series(trimmed, terms)) ** 2 / np.arange(1, terms + 1)
    value = math.pi * float(np.sum(weights[::-1]))
    tail = math.pi * terms * float(np.max(weights[-(terms // 4) :])) / 3
    converged = tail <= config.tolerance * max(1.0, value)
    if not converged:
        logger.warning("[NORMS] sqrt series not converged map=%s terms=%s tail=%s", phi.label, terms, tail)
    return ModulusIntegral(value=value, converged=converged, method="sqrt-series")


def modulus_deviation(phi: PolynomialConformalMap, other: PolynomialConformalMap | None = None, config: QuadratureConfig | None = None) -> ModulusIntegral:
    """‖|φ′| − |φ̃′|‖_{L²(𝔻)} = (|Ω| + |Ω̃| − 2∬|φ′||φ̃′|)^{1/2}; φ̃ defaults to the identity."""
    other = other or identity_map()
    cross = modulus_cross_integral(phi, other, config)
    value = math.sqrt(max(area(phi) + area(other) - 2 * cross.value, 0.0))
    return ModulusIntegral(value=value, converged=cross.converged, method=cross.method)


def modulus_deviation_l2(phi: PolynomialConformalMap, other: PolynomialConformalMap | None = None, config: QuadratureConfig | None = None) -> float:
    """‖|φ′| − |φ̃′|‖_{L²(𝔻)}; φ̃ defaults to the identity."""
    return modulus_deviation(phi, other, config).value


def variation_between(phi: PolynomialConformalMap, other: PolynomialConformalMap, alpha: float, config: QuadratureConfig | None = None) -> float:
    """Witness upper bound (‖φ′‖_α + ‖φ̃′‖_α)·‖φ′ − φ̃′‖₂ on V_α⁰(Ω, Ω̃)."""
    deviation = deviation_between(phi, other)
    if deviation == 0:
        return 0.0
    return (derivative_norm(phi, alpha, config) + derivative_norm(other, alpha, config)) * deviation


def variation_upper_bound(phi: PolynomialConformalMap, alpha: float, config: QuadratureConfig | None = None) -> float:
    """Witness upper bound on V_α⁰(𝔻, Ω), the disc entering with ‖1‖_α = π^{1/α}."""
    deviation = deviation_norm_l2(phi)
    if deviation == 0:
        return 0.0
    value = (derivative_norm(phi, alpha, config) + inverse_power(math.pi, alpha)) * deviation
    logger.debug("[NORMS] variation map=%s alpha=%s deviation=%s value=%s", phi.label, alpha, deviation, value)
    return value


def derivative_norms(phi: PolynomialConformalMap, alpha: float, config: QuadratureConfig | None = None) -> DerivativeNorms:
    """All norms of one map at one exponent."""
    if not alpha > 2:
        raise DomainError(f"alpha must exceed 2, got {alpha!r}")
    if math.isinf(alpha):
        l_alpha_norm, l_alpha_converged, l_alpha_method = sup_norm(phi, config), True, "boundary-sup"
    else:
        integral = quadrature_lp_integral(phi, alpha, config)
        l_alpha_norm, l_alpha_converged, l_alpha_method = integral.value ** (1.0 / alpha), integral.converged, "disc-quadrature"
    modulus = modulus_deviation(phi, config=config)
    return DerivativeNorms(
        alpha=alpha,
        l_alpha_norm=l_alpha_norm,
        deviation_l2=deviation_norm_l2(phi),
        modulus_deviation_l2=modulus.value,
        area=area(phi),
        converged=l_alpha_converged and modulus.converged,
        provenance=f"l_alpha:{l_alpha_method};deviation:closed-form;modulus:{modulus.method};area:closed-form",
    )


def normalize_area(phi: PolynomialConformalMap) -> PolynomialConformalMap:
    """Rescale φ so that |Ω| = π."""
    return scale_map(phi, math.sqrt(math.pi / area(phi)))
