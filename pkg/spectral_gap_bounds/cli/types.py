"""Run configuration and command reports of the sgb command line."""

from __future__ import annotations

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from ..bounds import BoundReport, HighEigenvalueReport, SandwichValidation
from ..confmap import PolynomialConformalMap
from ..constants import ConstantTrace, DiscConstants, ReportModel
from ..eigensolver import EigenResult
from ..quasidisc import QuasidiscReport

type Command = Literal["constants", "bounds", "quasidisc", "sweep"]
type Family = Literal["epicycloid", "section4"]
type OutputFormat = Literal["json", "csv"]


class RunConfig(BaseModel):
    """Everything that determines a report; identical configs give identical payloads."""

    model_config = ConfigDict(frozen=True, ser_json_inf_nan="strings")

    command: Command
    family: Family | None = None
    parameter: int | None = Field(default=None, description="n for epicycloids, k for section-4 maps")
    parameters: tuple[int, ...] = Field(default=(), description="Sweep parameter values")
    K: float | None = None
    alphas: tuple[float, ...] = ()
    area: float | None = None
    witness_n: int = Field(default=5, ge=2, description="Epicycloid supplying ρ and ‖φ′−1‖₂ for quasidisc bounds")
    rho: float | None = Field(default=None, gt=0)
    deviation_l2: float | None = Field(default=None, ge=0)
    h: float | None = Field(default=None, gt=0)
    with_solver: bool = False
    map_file: Path | None = None
    output: Path | None = None
    format: OutputFormat = "json"
    strict: bool = False
    workers: int = Field(default=1, ge=1)


class ConstantsRow(ReportModel):
    alpha: float
    gamma_alpha: ConstantTrace
    poincare_bound: ConstantTrace


class ConstantsReport(ReportModel):
    """γ_α and A_{r,2}(𝔻) per requested α, plus the disc spectrum."""

    disc: DiscConstants
    disc_traces: list[ConstantTrace]
    rows: list[ConstantsRow] = Field(default_factory=list)


class BoundsCommandReport(ReportModel):
    """Bounds of one map image, optionally with solver eigenvalues and sandwich flags."""

    family: Family | Literal["custom"]
    map: PolynomialConformalMap
    alpha: float
    deviation_l2: float
    modulus_deviation_l2: float | None = None
    bounds: BoundReport | None = None
    high: HighEigenvalueReport | None = None
    eigen: EigenResult | None = None
    validation: SandwichValidation | None = None

    @property
    def vacuous(self) -> list[str]:
        """Names of requested bounds that carry no information."""
        names: list[str] = []
        if self.bounds is not None:
            names.extend(name for name, valid in self.bounds.validity_flags.items() if not valid)
        if self.high is not None:
            names.extend(f"lambda{bound.k}_lower_scaled" for bound in self.high.bounds if bound.lower.vacuous)
            names.extend(f"ratio{ratio.m}{ratio.n}_lower_scaled" for ratio in self.high.ratios if ratio.lower.vacuous)
        return names


class SweepRow(ReportModel):
    """One parameter point of a sweep; solver columns are None without --with-solver."""

    parameter: int
    variation: float
    slack: float = Field(description="λ₁²(𝔻_ρ)·γ_α·V, C(n) at α = ∞ for epicycloids")
    lambda1_upper: float
    lambda2_lower: float
    ratio_lower: float
    gap_lower: float
    t: float | None = None
    containment_certified: bool | None = None
    lambda1: float | None = None
    lambda2: float | None = None
    band1: float | None = None
    band2: float | None = None
    sandwich_passed: bool | None = None
    provenance: str


class SweepReport(ReportModel):
    family: Family
    alpha: float
    rows: list[SweepRow]


type CommandReport = ConstantsReport | BoundsCommandReport | QuasidiscReport | SweepReport
