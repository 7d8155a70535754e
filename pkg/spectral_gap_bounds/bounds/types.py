"""Typed inputs and reports of the bound engine."""

from __future__ import annotations

import math
from typing import Self

from pydantic import Field, computed_field, model_validator

from ..constants.types import ConstantTrace, ReportModel

AREA_TOLERANCE = 1e-6
RATIO_CONSISTENCY = 1e-12


class BoundInputs(ReportModel):
    """Everything the conformal eigenvalue formulas consume."""

    rho: float = Field(gt=0, description="Inscribed radius of Ω")
    alpha: float = Field(gt=2, description="Regularity exponent; inf allowed")
    variation: float = Field(ge=0, description="Upper bound on V_α⁰(𝔻, Ω)")
    gamma_alpha_value: float = Field(gt=0)
    area: float = Field(gt=0)
    perimeter: float | None = Field(default=None, gt=0)

    @model_validator(mode="after")
    def _rho_within_unit_disc(self) -> Self:
        if abs(self.area - math.pi) <= AREA_TOLERANCE and self.rho > 1 + AREA_TOLERANCE:
            raise ValueError(f"rho={self.rho!r} exceeds 1 for a domain of area π")
        return self


class BoundValue(ReportModel):
    """One bound with its formula anchor; lower bounds at or below zero are vacuous."""

    value: float
    vacuous: bool = False
    provenance: str


class BoundReport(ReportModel):
    """The eigenvalue sandwich of one domain."""

    inputs: BoundInputs | None = None
    lambda1_upper: BoundValue
    lambda2_lower: BoundValue
    ratio_lower: BoundValue
    gap_lower: BoundValue
    fk_lower: BoundValue
    pw_upper: BoundValue | None = None
    stability_radius_k: dict[int, float] = Field(default_factory=dict)
    slack_log10: float | None = Field(default=None, description="log10 of the slack term shared by all four bounds")
    constants_used: list[ConstantTrace] = Field(default_factory=list)

    @computed_field
    @property
    def validity_flags(self) -> dict[str, bool]:
        return {
            "lambda1_upper": not self.lambda1_upper.vacuous,
            "lambda2_lower": not self.lambda2_lower.vacuous,
            "ratio_lower": not self.ratio_lower.vacuous,
            "gap_lower": not self.gap_lower.vacuous,
        }

    @model_validator(mode="after")
    def _consistent(self) -> Self:
        upper = self.lambda1_upper.value
        if not self.lambda1_upper.vacuous and self.fk_lower.value > upper * (1 + RATIO_CONSISTENCY):
            raise ValueError(f"Faber–Krahn bound {self.fk_lower.value!r} exceeds lambda1 upper {upper!r}: inputs inconsistent")
        if math.isfinite(upper) and math.isfinite(self.lambda2_lower.value):
            expected = self.lambda2_lower.value / upper
            if abs(self.ratio_lower.value - expected) > RATIO_CONSISTENCY * max(1.0, abs(expected)):
                raise ValueError(f"ratio lower {self.ratio_lower.value!r} differs from lambda2_lower/lambda1_upper {expected!r}")
        return self


class DiscContainment(ReportModel):
    """Numerical certificate of 𝔻 ⊆ tΩ."""

    map_label: str
    t: float = Field(gt=0)
    certified: bool


class HighEigenvalueBounds(ReportModel):
    """λ_k(𝔻) − t⁴λ_k(𝔻)²γ_αV ≤ λ_k(Ω) ≤ t²λ_k(𝔻)."""

    k: int = Field(ge=1)
    t: float
    lower: BoundValue
    upper: BoundValue


class SandwichCheck(ReportModel):
    """One inequality checked against the reference solver."""

    name: str
    bound: float
    observed: float
    margin: float = Field(ge=0)
    kind: str = Field(description="'upper' when observed <= bound + margin is required, 'lower' for the reverse")
    skipped: bool = False
    passed: bool


class SandwichValidation(ReportModel):
    checks: list[SandwichCheck]

    @computed_field
    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


class HighRatioBound(ReportModel):
    m: int = Field(ge=1)
    n: int = Field(ge=2)
    lower: BoundValue


class HighEigenvalueReport(ReportModel):
    """Scaled-disc sandwich of the first disc modes for a domain with 𝔻 ⊆ tΩ."""

    map_label: str
    containment: DiscContainment
    variation: float = Field(ge=0)
    bounds: list[HighEigenvalueBounds]
    ratios: list[HighRatioBound] = Field(default_factory=list)
    constants_used: list[ConstantTrace] = Field(default_factory=list)
