"""Gamma and Bessel J evaluations used by every disc and Sobolev constant."""

from __future__ import annotations

import math

import numpy as np
from scipy import special as sp

from ..errors import DomainError


def gamma(x: float) -> float:
    """Return Γ(x) for x > 0."""
    if not x > 0:
        raise DomainError(f"gamma is only defined here for x > 0, got {x!r}")
    return float(sp.gamma(x))


def log_gamma(x: float) -> float:
    """Return log Γ(x) for x > 0 without overflow."""
    if not x > 0:
        raise DomainError(f"log_gamma is only defined here for x > 0, got {x!r}")
    return float(sp.gammaln(x))


def bessel_j(order: int, x: float | np.ndarray) -> float | np.ndarray:
    """Bessel function of the first kind J_order(x) for integer order >= 0 and x >= 0."""
    if order < 0 or int(order) != order:
        raise DomainError(f"Bessel order must be a non-negative integer, got {order!r}")
    values = np.asarray(x, dtype=float)
    if np.any(values < 0):
        raise DomainError("bessel_j requires x >= 0")
    result = sp.jv(int(order), values)
    return float(result) if np.ndim(result) == 0 else result


def double_factorial(n: int) -> int:
    """Return n!! for n >= -1."""
    return math.prod(range(n, 0, -2)) if n > 0 else 1


def gamma_half_integer(m: int) -> float:
    """Closed form Γ(m + 1/2) = (2m-1)!! √π / 2^m."""
    return double_factorial(2 * m - 1) * math.sqrt(math.pi) / 2**m
