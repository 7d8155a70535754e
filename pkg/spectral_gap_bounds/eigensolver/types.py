"""Grid masks and solver results of the finite-difference reference solver."""

from __future__ import annotations

from dataclasses import dataclass
import math
from typing import Literal, Self

import numpy as np
from pydantic import Field, computed_field, model_validator

from ..constants.types import ReportModel

type BoundaryTreatment = Literal["staircase", "ghost"]
type ExtrapolationKind = Literal["none", "richardson", "two_grid"]

# east, west, north, south
DIRECTIONS: tuple[tuple[int, int], ...] = ((1, 0), (-1, 0), (0, 1), (0, -1))


@dataclass(frozen=True, slots=True)
class GridMask:
    """Interior nodes of a polygon on the grid origin + h·(i, j)."""

    h: float
    origin: tuple[float, float]
    nx: int
    ny: int
    inside: np.ndarray
    node_index: np.ndarray
    boundary_fractions: np.ndarray

    @classmethod
    def from_inside(cls, h: float, origin: tuple[float, float], inside: np.ndarray, boundary_fractions: np.ndarray | None = None) -> GridMask:
        """Number the inside nodes row-major; fractions default to 1 (no boundary correction)."""
        inside = np.asarray(inside, dtype=bool)
        ny, nx = inside.shape
        node_index = np.full(inside.shape, -1, dtype=np.int64)
        node_index[inside] = np.arange(int(inside.sum()))
        if boundary_fractions is None:
            boundary_fractions = np.ones((int(inside.sum()), len(DIRECTIONS)))
        return cls(h=h, origin=origin, nx=nx, ny=ny, inside=inside, node_index=node_index, boundary_fractions=boundary_fractions)

    @property
    def count(self) -> int:
        return int(self.inside.sum())

    @property
    def area(self) -> float:
        """Measured area count·h²."""
        return self.count * self.h * self.h

    def coordinates(self) -> np.ndarray:
        """(count, 2) coordinates of the inside nodes in numbering order."""
        rows, cols = np.nonzero(self.inside)
        return np.column_stack([self.origin[0] + cols * self.h, self.origin[1] + rows * self.h])


class EigenResult(ReportModel):
    """Smallest Dirichlet eigenvalues of one domain, with a two-grid error band."""

    label: str
    h: float = Field(gt=0, description="Coarse grid spacing")
    boundary: BoundaryTreatment
    nodes: int = Field(ge=1)
    eigenvalues: tuple[float, ...]
    residual_norms: tuple[float, ...]
    refined_eigenvalues: tuple[float, ...] | None = Field(default=None, description="Eigenvalues at spacing h/2")
    extrapolated: tuple[float, ...] | None = None
    band: tuple[float, ...] = Field(description="|λ(h) − λ(h/2)| per mode; zeros without refinement")
    extrapolation: ExtrapolationKind = "none"
    cusped: bool = False
    mask_area: float = Field(gt=0)

    @model_validator(mode="after")
    def _shapes(self) -> Self:
        count = len(self.eigenvalues)
        if any(right < left for left, right in zip(self.eigenvalues, self.eigenvalues[1:], strict=False)):
            raise ValueError("eigenvalues must be non-decreasing")
        for name in ("residual_norms", "band"):
            if len(getattr(self, name)) != count:
                raise ValueError(f"{name} must have {count} entries")
        return self

    @computed_field
    @property
    def provenance(self) -> str:
        return f"finite-difference-5pt:{self.boundary}:{self.extrapolation}"

    @property
    def estimates(self) -> tuple[float, ...]:
        """Best available value per mode: extrapolated, else the finest grid."""
        return self.extrapolated or self.refined_eigenvalues or self.eigenvalues

    def margin(self, k: int) -> float:
        """Error band of mode k (1-based), floored at a relative 1e-9."""
        value = self.estimates[k - 1]
        return max(self.band[k - 1], 1e-9 * abs(value)) if math.isfinite(value) else math.inf
