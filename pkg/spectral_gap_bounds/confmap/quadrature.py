"""Tensor quadrature on the unit disc: Gauss–Legendre in s = r² times trapezoid in angle."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from functools import lru_cache
import logging
import math

import numpy as np

from ..config import QuadratureConfig

logger = logging.getLogger(__name__)

type DiscIntegrand = Callable[[np.ndarray], np.ndarray]

# Integrands are evaluated on at most this many nodes at once.
BLOCK_NODES = 1 << 18


@dataclass(frozen=True, slots=True)
class DiscRule:
    """Factored tensor rule: node (i, j) is radii[i]·unit[j] with weight radial_weights[i]."""

    radii: np.ndarray
    radial_weights: np.ndarray
    unit: np.ndarray

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.radii), len(self.unit)

    @property
    def nodes(self) -> np.ndarray:
        return self.radii[:, None] * self.unit[None, :]

    @property
    def weights(self) -> np.ndarray:
        return np.broadcast_to(self.radial_weights[:, None], self.shape)


@dataclass(frozen=True, slots=True)
class DiscIntegral:
    value: float
    radial_nodes: int
    angular_nodes: int
    change: float
    converged: bool


@lru_cache(maxsize=16)
def disc_rule(radial_nodes: int, angular_nodes: int) -> DiscRule:
    """Nodes z and weights w with Σ w·f(z) ≈ ∬_𝔻 f dA.

    With s = r², r dr = ds/2, so Gauss–Legendre in s is exact for
    integrands that are polynomials in r² after angular averaging.
    """
    x, w = np.polynomial.legendre.leggauss(radial_nodes)
    radii = np.sqrt((x + 1) / 2)
    radial_weights = w * math.pi / (2 * angular_nodes)
    unit = np.exp(2j * math.pi * np.arange(angular_nodes) / angular_nodes)
    for array in (radii, radial_weights, unit):
        array.setflags(write=False)
    return DiscRule(radii=radii, radial_weights=radial_weights, unit=unit)


def integrate_on_rule(integrand: DiscIntegrand, radial_nodes: int, angular_nodes: int) -> float:
    """Σ w·f(z) over one rule, a block of radial rings at a time."""
    rule = disc_rule(radial_nodes, angular_nodes)
    rows = max(1, BLOCK_NODES // angular_nodes)
    total = 0.0
    for start in range(0, radial_nodes, rows):
        block = rule.radii[start : start + rows, None] * rule.unit[None, :]
        ring_sums = np.sum(integrand(block), axis=1)
        total += float(np.real(rule.radial_weights[start : start + rows] @ ring_sums))
    return total


def integrate_disc(integrand: DiscIntegrand, config: QuadratureConfig | None = None) -> DiscIntegral:
    """∬_𝔻 integrand dA, doubling both node counts until two successive values agree."""
    config = config or QuadratureConfig()
    radial, angular = config.radial_nodes, config.angular_nodes
    previous = integrate_on_rule(integrand, radial, angular)
    change = math.inf
    for _ in range(config.max_doublings):
        radial, angular = 2 * radial, 2 * angular
        current = integrate_on_rule(integrand, radial, angular)
        change = abs(current - previous)
        previous = current
        if change <= config.tolerance * max(1.0, abs(current)):
            return DiscIntegral(value=current, radial_nodes=radial, angular_nodes=angular, change=change, converged=True)
    logger.warning("[QUADRATURE] Not converged radial=%s angular=%s change=%s tol=%s", radial, angular, change, config.tolerance)
    return DiscIntegral(value=previous, radial_nodes=radial, angular_nodes=angular, change=change, converged=False)
