"""Numeric tunables and their environment overrides."""

from __future__ import annotations

from functools import lru_cache
import os
from typing import Literal

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

QUAD_TOL_ENV = "SGB_QUAD_TOL"
DEFAULT_QUAD_TOL = 1e-10


class QuadratureConfig(BaseModel):
    """Tensor Gauss–Legendre × trapezoid quadrature on the unit disc."""

    model_config = ConfigDict(frozen=True)

    radial_nodes: int = Field(default=128, ge=8)
    angular_nodes: int = Field(default=512, ge=16)
    tolerance: float = Field(default=DEFAULT_QUAD_TOL, gt=0)
    max_doublings: int = Field(default=4, ge=0)
    boundary_samples: int = Field(default=8192, ge=64, description="Samples of |z|=1 used for sup norms")
    series_terms: int = Field(default=1 << 15, ge=64, description="Taylor terms of √(φ′φ̃′) in the modulus deviation")


class OptimizerConfig(BaseModel):
    """One-dimensional infimum search over an open interval."""

    model_config = ConfigDict(frozen=True)

    scan_points: int = Field(default=1000, ge=16)
    endpoint_clamp: float = Field(default=1e-9, gt=0)
    xatol: float = Field(default=1e-13, gt=0)


class GeometryConfig(BaseModel):
    """Boundary sampling and grid scans on map images."""

    model_config = ConfigDict(frozen=True)

    polygon_samples: int = Field(default=4096, ge=64)
    inradius_grid: int = Field(default=512, ge=16)
    containment_grid: int = Field(default=256, ge=16, description="Cartesian sample per axis of the closed disc")
    containment_circle: int = Field(default=2048, ge=64, description="Samples of the disc boundary circle")
    containment_margin: float = Field(default=1e-6, ge=0, lt=1, description="Sampled disc radius is 1 - margin")


class SolverConfig(BaseModel):
    """Finite-difference reference solver."""

    model_config = ConfigDict(frozen=True)

    boundary: Literal["staircase", "ghost"] = "ghost"
    min_boundary_fraction: float = Field(default=1e-2, gt=0, lt=1, description="Lower clamp on the ghost-point boundary distance, in units of h")
    tolerance: float = Field(default=1e-10, gt=0)
    residual_tolerance: float = Field(default=1e-8, gt=0)
    max_eigenpairs: int = Field(default=12, ge=1)
    polygon_samples: int = Field(default=4096, ge=64)


class NumericsConfig(BaseModel):
    """All numeric tunables of one run."""

    model_config = ConfigDict(frozen=True)

    quadrature: QuadratureConfig = Field(default_factory=QuadratureConfig)
    optimizer: OptimizerConfig = Field(default_factory=OptimizerConfig)
    geometry: GeometryConfig = Field(default_factory=GeometryConfig)
    solver: SolverConfig = Field(default_factory=SolverConfig)


def _env_float(name: str, default: float) -> float:
    """Read a positive float override from the environment."""
    raw_value = os.getenv(name)
    if raw_value is None or not raw_value.strip():
        return default
    try:
        value = float(raw_value)
    except ValueError as exc:
        raise ValueError(f"{name} must be a positive float, got {raw_value!r}") from exc
    if not value > 0:
        raise ValueError(f"{name} must be a positive float, got {raw_value!r}")
    return value


def load_numerics_config() -> NumericsConfig:
    """Build the run configuration from defaults, `.env` and the process environment."""
    load_dotenv()
    quad_tol = _env_float(QUAD_TOL_ENV, DEFAULT_QUAD_TOL)
    return NumericsConfig(quadrature=QuadratureConfig(tolerance=quad_tol))


@lru_cache(maxsize=1)
def default_numerics_config() -> NumericsConfig:
    """Return the process-wide configuration, read once."""
    return load_numerics_config()
