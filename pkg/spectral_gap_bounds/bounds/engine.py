"""Eigenvalue inequalities as pure formulas over precomputed constants."""

from __future__ import annotations

from dataclasses import dataclass
import logging
import math

from ..constants import DiscConstants, disc_constants, gamma_alpha, j01_bessel_j1_squared
from ..errors import ContainmentError, DomainError
from .types import AREA_TOLERANCE, BoundInputs, DiscContainment

logger = logging.getLogger(__name__)

PPW_CLASSICAL_RATIO = 3.0


@dataclass(frozen=True, slots=True)
class SlackBounds:
    """λ₁ upper, λ₂ lower, ratio lower and gap lower generated by one slack term S."""

    slack: float
    lambda1_upper: float
    lambda2_lower: float
    ratio_lower: float
    gap_lower: float


def _require_nonnegative(**values: float) -> None:
    for name, value in values.items():
        if not value >= 0:
            raise DomainError(f"{name} must be >= 0, got {value!r}")


def _require_unit_area(area: float) -> None:
    if abs(area - math.pi) > AREA_TOLERANCE:
        raise DomainError(f"bounds need a domain of area π, got area={area!r}")


def stability_bound(k: int, lambda_k_max_sq: float, gamma_alpha_value: float, variation: float) -> float:
    """max{λ_k²(Ω), λ_k²(Ω̃)}·γ_α·V_α⁰(Ω, Ω̃)."""
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k!r}")
    _require_nonnegative(lambda_k_max_sq=lambda_k_max_sq, gamma_alpha_value=gamma_alpha_value, variation=variation)
    return lambda_k_max_sq * gamma_alpha_value * variation


def inscribed_disc_upper(rho: float, disc: DiscConstants | None = None) -> float:
    """λ₁(𝔻_ρ) = j₀,₁²/ρ², an upper bound on λ₁(Ω) by domain monotonicity."""
    if not rho > 0:
        raise DomainError(f"rho must be positive, got {rho!r}")
    disc = disc or disc_constants()
    return disc.lambda1_disc / rho**2


def ppw_ratio_upper(disc: DiscConstants | None = None) -> float:
    """λ*, the sharp ceiling of λ₂/λ₁ over planar domains."""
    return (disc or disc_constants()).lambda_star


def bounds_from_slack(slack: float, disc: DiscConstants | None = None) -> SlackBounds:
    """The four sandwich bounds for a given slack S = λ₁²(𝔻_ρ)·A²·V.

    Shared by the conformal and quasidisc pipelines, which differ only in S.
    """
    _require_nonnegative(slack=slack)
    disc = disc or disc_constants()
    star_sq = disc.lambda_star**2
    upper = disc.lambda1_disc + slack
    lower = disc.lambda2_disc - star_sq * slack
    if math.isinf(slack):
        ratio = -star_sq
    else:
        ratio = lower / upper
    return SlackBounds(
        slack=slack,
        lambda1_upper=upper,
        lambda2_lower=lower,
        ratio_lower=ratio,
        gap_lower=disc.lambda2_disc - disc.lambda1_disc - (star_sq + 1) * slack,
    )


def sandwich_slack(inputs: BoundInputs, disc: DiscConstants | None = None) -> float:
    """λ₁²(𝔻_ρ)·γ_α·V for area-π inputs."""
    _require_unit_area(inputs.area)
    lambda_rho = inscribed_disc_upper(inputs.rho, disc)
    return stability_bound(1, lambda_rho**2, inputs.gamma_alpha_value, inputs.variation)


def lambda1_upper(inputs: BoundInputs, disc: DiscConstants | None = None) -> float:
    return bounds_from_slack(sandwich_slack(inputs, disc), disc).lambda1_upper


def lambda2_lower(inputs: BoundInputs, disc: DiscConstants | None = None) -> float:
    return bounds_from_slack(sandwich_slack(inputs, disc), disc).lambda2_lower


def ppw_ratio_lower(inputs: BoundInputs, disc: DiscConstants | None = None) -> float:
    return bounds_from_slack(sandwich_slack(inputs, disc), disc).ratio_lower


def spectral_gap_lower(inputs: BoundInputs, disc: DiscConstants | None = None) -> float:
    return bounds_from_slack(sandwich_slack(inputs, disc), disc).gap_lower


def payne_weinberger_upper(area: float, perimeter: float, disc: DiscConstants | None = None) -> float:
    """(πj₀,₁²/|Ω|)·[1 + (1/J₁²(j₀,₁) − 1)(|∂Ω|²/(4π|Ω|) − 1)]."""
    if not area > 0:
        raise DomainError(f"area must be positive, got {area!r}")
    if math.isinf(perimeter):
        return math.inf
    isoperimetric = perimeter**2 / (4 * math.pi * area)
    if isoperimetric < 1 - 1e-12:
        raise DomainError(f"perimeter={perimeter!r} violates the isoperimetric inequality for area={area!r}")
    disc = disc or disc_constants()
    weight = 1 / j01_bessel_j1_squared() - 1
    return math.pi * disc.lambda1_disc / area * (1 + weight * max(isoperimetric - 1, 0.0))


def faber_krahn_lower(area: float, disc: DiscConstants | None = None) -> float:
    """π·j₀,₁²/|Ω|, λ₁ of the disc with the same area."""
    if not area > 0:
        raise DomainError(f"area must be positive, got {area!r}")
    return math.pi * (disc or disc_constants()).lambda1_disc / area


def _require_containment(containment: DiscContainment) -> None:
    if not containment.certified:
        raise ContainmentError(f"𝔻 ⊆ {containment.t!r}·Ω is not certified for {containment.map_label}")
    if containment.t < 1:
        raise DomainError(f"t must be >= 1, got {containment.t!r}")


def high_eigenvalue_bounds(
    k: int,
    containment: DiscContainment,
    gamma_alpha_value: float,
    variation: float,
    disc: DiscConstants | None = None,
) -> tuple[float, float]:
    """(λ_k(𝔻) − t⁴λ_k(𝔻)²γ_αV, t²λ_k(𝔻)) given a certified 𝔻 ⊆ tΩ."""
    _require_containment(containment)
    _require_nonnegative(gamma_alpha_value=gamma_alpha_value, variation=variation)
    disc = disc or disc_constants()
    try:
        lambda_k = disc.eigenvalue(k)
    except IndexError as exc:
        raise DomainError(str(exc)) from exc
    t = containment.t
    return lambda_k - t**4 * lambda_k**2 * gamma_alpha_value * variation, t**2 * lambda_k


def high_ratio_lower(
    m: int,
    n: int,
    containment: DiscContainment,
    gamma_alpha_value: float,
    variation: float,
    disc: DiscConstants | None = None,
) -> float:
    """(λ_n(𝔻) − t⁴λ_n(𝔻)²γ_αV) / (t²λ_m(𝔻))."""
    if not 1 <= m < n:
        raise DomainError(f"need 1 <= m < n, got m={m!r}, n={n!r}")
    lower_n, _ = high_eigenvalue_bounds(n, containment, gamma_alpha_value, variation, disc)
    _, upper_m = high_eigenvalue_bounds(m, containment, gamma_alpha_value, variation, disc)
    return lower_n / upper_m


def epicycloid_variation_closed_form(n: int) -> float:
    """(√(4n/(n+1)) + 1)·√(2π(1 − √(n/(n+1))))."""
    if n < 2:
        raise DomainError(f"epicycloid parameter n must be >= 2, got {n!r}")
    return (math.sqrt(4 * n / (n + 1)) + 1) * math.sqrt(2 * math.pi * (1 - math.sqrt(n / (n + 1))))


def epicycloid_rho(n: int) -> float:
    if n < 2:
        raise DomainError(f"epicycloid parameter n must be >= 2, got {n!r}")
    return ((n - 1) / (n + 1)) ** 0.75


def epicycloid_C(n: int, gamma_infinity: float | None = None, disc: DiscConstants | None = None) -> float:
    """C(n) = λ₁²(𝔻_ρ)·γ_∞·V(n) with ρ = ((n−1)/(n+1))^{3/4}."""
    if gamma_infinity is None:
        gamma_infinity = gamma_alpha(math.inf).value
    value = inscribed_disc_upper(epicycloid_rho(n), disc) ** 2 * gamma_infinity * epicycloid_variation_closed_form(n)
    logger.debug("[BOUNDS] C(n) n=%s value=%s", n, value)
    return value
