"""Typed results for the analytic constants."""

from __future__ import annotations

import math
from typing import Literal, Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

type CertificateKind = Literal["interior", "left_endpoint", "right_endpoint", "closed_form"]


class ReportModel(BaseModel):
    """Immutable report model whose JSON encodes infinities as strings."""

    model_config = ConfigDict(frozen=True, ser_json_inf_nan="strings")


class ConstantTrace(ReportModel):
    """Provenance of one constant that enters a bound."""

    name: str
    value: float | None = Field(default=None, description="Linear value; None when it overflows a double")
    log10_value: float
    optimizer_argument: float | None = Field(default=None, description="Minimizing p or alpha for infima")
    interval: tuple[float, float] | None = Field(default=None, description="Open interval the infimum runs over")
    certificate: CertificateKind = "closed_form"
    formula_id: str

    @model_validator(mode="after")
    def _argument_inside_interval(self) -> Self:
        if self.optimizer_argument is not None and self.interval is not None:
            lower, upper = self.interval
            if not lower < self.optimizer_argument < upper:
                raise ValueError(f"{self.name}: optimizer argument {self.optimizer_argument!r} outside ({lower!r}, {upper!r})")
        return self

    @classmethod
    def closed_form(cls, name: str, value: float, formula_id: str) -> ConstantTrace:
        """Trace for a constant evaluated from a closed formula."""
        return cls(name=name, value=value, log10_value=math.log10(value) if value > 0 else -math.inf, formula_id=formula_id)


class DiscConstants(ReportModel):
    """Dirichlet spectrum of the unit disc."""

    lambda1_disc: float
    lambda2_disc: float
    lambda_star: float
    spectrum: tuple[float, ...]
    modes: tuple[tuple[int, int], ...] = Field(description="(m, l) with eigenvalue j_{m,l}^2 for each spectrum entry")

    @model_validator(mode="after")
    def _consistent(self) -> Self:
        if not self.lambda1_disc < self.lambda2_disc:
            raise ValueError("lambda1_disc must be below lambda2_disc")
        if any(right < left for left, right in zip(self.spectrum, self.spectrum[1:], strict=False)):
            raise ValueError("disc spectrum must be non-decreasing")
        if self.spectrum and self.spectrum[0] != self.lambda1_disc:
            raise ValueError("spectrum[0] must equal lambda1_disc")
        return self

    def eigenvalue(self, k: int) -> float:
        """Return λ_k(𝔻), k starting at 1."""
        if not 1 <= k <= len(self.spectrum):
            raise IndexError(f"k={k} outside the computed disc spectrum (1..{len(self.spectrum)})")
        return self.spectrum[k - 1]
