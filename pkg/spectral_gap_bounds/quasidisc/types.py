"""Typed results of the quasidisc constants."""

from __future__ import annotations

from typing import Self

from pydantic import Field, model_validator

from ..bounds import BoundReport
from ..constants.types import ReportModel
from .logscaled import LogScaledReal


class QuasidiscParams(ReportModel):
    """K, its integrability ceiling α*, and the ν-feasible range of exponents."""

    K: float = Field(gt=1, description="Quasiconformality constant")
    alpha_star: float = Field(gt=2, description="2K²/(K²−1)")
    feasible_alpha_max: float | None = Field(default=None, description="Largest double α with ν(α) < 1; None below double resolution")
    feasible_excess_max: float = Field(gt=0, description="Largest α − 2 with ν(α) < 1")
    log10_nu_at_max: float = Field(lt=0)
    log10_nu_above_max: float = Field(ge=0, description="log10 ν at (1 + 1e−9) times the feasible excess")
    area: float = Field(gt=0)
    provenance: str

    @model_validator(mode="after")
    def _feasible_below_ceiling(self) -> Self:
        if not self.feasible_excess_max < self.alpha_star - 2:
            raise ValueError(f"feasible excess {self.feasible_excess_max!r} must lie below alpha_star - 2 = {self.alpha_star - 2!r}")
        if self.feasible_alpha_max is not None and not 2 < self.feasible_alpha_max < self.alpha_star:
            raise ValueError(f"feasible_alpha_max={self.feasible_alpha_max!r} outside (2, {self.alpha_star!r})")
        return self


class MAlphaResult(ReportModel):
    """M_α(K) with the exponents that attain it."""

    K: float = Field(gt=1)
    area: float = Field(gt=0)
    value: LogScaledReal
    alpha_opt: float = Field(ge=2, description="2 + alpha_excess_opt as a double; rounds to 2 when the excess is below its spacing")
    alpha_excess_opt: float = Field(gt=0, description="alpha_opt − 2, resolved below double spacing of alpha")
    p_opt: float
    p_gap_opt: float = Field(gt=0, description="2 − p_opt")
    log10_gamma_alpha: float = Field(description="log10 of the inner p-infimum at alpha_opt")
    log10_derivative_bound: float = Field(description="log10 of the conformal-derivative bound at alpha_opt")
    provenance: str


class QuasidiscReport(ReportModel):
    """Constants and eigenvalue bounds of one K-quasidisc."""

    params: QuasidiscParams
    m_alpha: MAlphaResult
    rho: float = Field(gt=0)
    deviation_l2: float = Field(ge=0)
    bounds: BoundReport | None = Field(default=None, description="Eigenvalue bounds; only for domains of area π")
