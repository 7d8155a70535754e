"""Polynomial conformal maps of the unit disc and the two epicycloid families."""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Literal

import numpy as np
from numpy.polynomial import polynomial as P
from pydantic import BaseModel, ConfigDict, Field, field_validator

from ..errors import DomainError
from ..utils import write_json_file

type MapFamily = Literal["identity", "epicycloid", "section4", "custom"]


class PolynomialConformalMap(BaseModel):
    """φ(z) = Σ c_j z^j on the closed unit disc, coefficients stored as (re, im) pairs."""

    model_config = ConfigDict(frozen=True)

    label: str
    coefficients: tuple[tuple[float, float], ...] = Field(min_length=2)
    family: MapFamily = "custom"
    parameter: int | None = Field(default=None, description="n for epicycloids, k for section-4 maps")

    @field_validator("coefficients")
    @classmethod
    def _non_degenerate(cls, coefficients: tuple[tuple[float, float], ...]) -> tuple[tuple[float, float], ...]:
        if all(re == 0 and im == 0 for re, im in coefficients[1:]):
            raise ValueError("map must have a non-constant part")
        return coefficients

    @property
    def complex_coefficients(self) -> np.ndarray:
        return np.array([complex(re, im) for re, im in self.coefficients])

    @property
    def derivative_coefficients(self) -> np.ndarray:
        """Coefficients d_m of φ′(z) = Σ d_m z^m."""
        return P.polyder(self.complex_coefficients)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, z: np.ndarray | complex) -> np.ndarray:
        return P.polyval(np.asarray(z), self.complex_coefficients)

    def derivative(self, z: np.ndarray | complex) -> np.ndarray:
        return P.polyval(np.asarray(z), self.derivative_coefficients)

    def to_json(self) -> dict[str, object]:
        """Serializable form {"label", "coefficients": [[re, im], …]}."""
        return {"label": self.label, "coefficients": [list(pair) for pair in self.coefficients]}


def from_complex(label: str, coefficients: np.ndarray | list[complex], *, family: MapFamily = "custom", parameter: int | None = None) -> PolynomialConformalMap:
    """Build a map from complex coefficients c_0..c_m."""
    pairs = tuple((float(np.real(c)), float(np.imag(c))) for c in coefficients)
    return PolynomialConformalMap(label=label, coefficients=pairs, family=family, parameter=parameter)


def identity_map() -> PolynomialConformalMap:
    """φ(z) = z, the unit disc itself."""
    return PolynomialConformalMap(label="disc", coefficients=((0.0, 0.0), (1.0, 0.0)), family="identity")


def epicycloid_map(n: int) -> PolynomialConformalMap:
    """φ(z) = √(n/(n+1))·(z + z^n/n): area π, boundary an epicycloid of n−1 cusps."""
    if n < 2:
        raise DomainError(f"epicycloid parameter n must be >= 2, got {n!r}")
    scale = math.sqrt(n / (n + 1))
    coefficients = np.zeros(n + 1, dtype=complex)
    coefficients[1] = scale
    coefficients[n] = scale / n
    return from_complex(f"epicycloid(n={n})", coefficients, family="epicycloid", parameter=n)


def section4_map(k: int) -> tuple[PolynomialConformalMap, float]:
    """ψ(z) = z + z^k/k and the scale t = k²/(k−1)² with 𝔻 ⊆ tΩ_k."""
    if k < 2:
        raise DomainError(f"section-4 parameter k must be >= 2, got {k!r}")
    coefficients = np.zeros(k + 1, dtype=complex)
    coefficients[1] = 1.0
    coefficients[k] = 1.0 / k
    t = k * k / (k - 1) ** 2
    return from_complex(f"section4(k={k})", coefficients, family="section4", parameter=k), t


def scale_map(phi: PolynomialConformalMap, t: float) -> PolynomialConformalMap:
    """t·φ, the map onto tΩ."""
    if not t > 0:
        raise DomainError(f"scale t must be positive, got {t!r}")
    return from_complex(f"{t:g}*{phi.label}", phi.complex_coefficients * t)


def load_map(path: Path) -> PolynomialConformalMap:
    """Read a map file {"label": str, "coefficients": [[re, im], …]}."""
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(payload, dict) or "coefficients" not in payload:
        raise DomainError(f"map file {path} must be an object with 'coefficients'")
    pairs = tuple((float(re), float(im)) for re, im in payload["coefficients"])
    return PolynomialConformalMap(label=str(payload.get("label", Path(path).stem)), coefficients=pairs)


def dump_map(phi: PolynomialConformalMap, path: Path) -> None:
    """Write a map file."""
    write_json_file(Path(path), phi.to_json())
