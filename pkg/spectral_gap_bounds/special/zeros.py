"""Positive zeros of integer-order Bessel functions.

Zeros of J_0 are bracketed around McMahon's asymptotic position (k - 1/4)π,
whose error stays far below half the zero spacing. Zeros of J_{m+1} are then
bracketed by consecutive zeros of J_m (interlacing), and every bracket is
refined by Brent's method on J itself.
"""

from __future__ import annotations

from functools import lru_cache
import logging
import math

from pydantic import BaseModel, ConfigDict, Field, field_validator
from scipy.optimize import brentq

from ..errors import DomainError
from .functions import bessel_j

logger = logging.getLogger(__name__)

ZERO_XTOL = 1e-14
MCMAHON_HALF_WIDTH = 0.5


class BesselZeroTable(BaseModel):
    """Ordered positive zeros j_{ν,1} < j_{ν,2} < … of J_ν."""

    model_config = ConfigDict(frozen=True)

    order: int = Field(ge=0)
    zeros: tuple[float, ...]

    @field_validator("zeros")
    @classmethod
    def _strictly_increasing(cls, zeros: tuple[float, ...]) -> tuple[float, ...]:
        if any(right <= left for left, right in zip(zeros, zeros[1:], strict=False)):
            raise ValueError("Bessel zeros must be strictly increasing")
        if zeros and zeros[0] <= 0:
            raise ValueError("Bessel zeros must be positive")
        return zeros


def _refine(order: int, left: float, right: float) -> float:
    """Refine a sign-changing bracket of J_order."""
    return float(brentq(lambda x: bessel_j(order, x), left, right, xtol=ZERO_XTOL))


def _order_zero_zeros(count: int) -> tuple[float, ...]:
    zeros = []
    for k in range(1, count + 1):
        center = (k - 0.25) * math.pi
        zeros.append(_refine(0, center - MCMAHON_HALF_WIDTH, center + MCMAHON_HALF_WIDTH))
    return tuple(zeros)


@lru_cache(maxsize=64)
def _zeros_cached(order: int, count: int) -> tuple[float, ...]:
    if order == 0:
        return _order_zero_zeros(count)
    # j_{m-1,k} < j_{m,k} < j_{m-1,k+1}
    previous = _zeros_cached(order - 1, count + 1)
    return tuple(_refine(order, previous[k], previous[k + 1]) for k in range(count))


def bessel_zeros(order: int, count: int) -> BesselZeroTable:
    """Return the first `count` positive zeros of J_order."""
    if order < 0 or count < 1:
        raise DomainError(f"bessel_zeros needs order >= 0 and count >= 1, got order={order}, count={count}")
    zeros = _zeros_cached(int(order), int(count))
    logger.debug("[BESSEL] order=%s count=%s last=%s", order, count, zeros[-1])
    return BesselZeroTable(order=order, zeros=zeros)


def bessel_zero(order: int, k: int) -> float:
    """Return the k-th positive zero j_{order,k}."""
    if k < 1:
        raise DomainError(f"zero index k must be >= 1, got {k!r}")
    return bessel_zeros(order, k).zeros[k - 1]
