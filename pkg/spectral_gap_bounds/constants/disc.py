"""Dirichlet spectrum of the unit disc from Bessel zeros."""

from __future__ import annotations

from functools import lru_cache
import logging

from ..errors import DomainError
from ..special import bessel_j, bessel_zero, bessel_zeros
from .types import ConstantTrace, DiscConstants

logger = logging.getLogger(__name__)

MAX_DISC_EIGENVALUES = 50
COMPLETENESS_GUARD = 1.2
INITIAL_ORDERS = 4
INITIAL_ZEROS = 4


def _enumerate(max_order: int, zeros_per_order: int) -> list[tuple[float, int, int]]:
    """All j_{m,l}^2 for m <= max_order, l <= zeros_per_order, with multiplicity 2 for m >= 1."""
    entries: list[tuple[float, int, int]] = []
    for m in range(max_order + 1):
        for l_index, zero in enumerate(bessel_zeros(m, zeros_per_order).zeros, start=1):
            entries.extend([(zero * zero, m, l_index)] * (1 if m == 0 else 2))
    entries.sort()
    return entries


def _is_complete(max_order: int, zeros_per_order: int, ceiling: float) -> bool:
    """True when no j_{m,l}^2 <= ceiling lies outside the enumerated block."""
    if bessel_zero(max_order + 1, 1) ** 2 <= ceiling:
        return False
    return all(bessel_zeros(m, zeros_per_order).zeros[-1] ** 2 > ceiling for m in range(max_order + 1))


@lru_cache(maxsize=16)
def disc_spectrum(count: int = 12) -> DiscConstants:
    """First `count` Dirichlet eigenvalues of the unit disc, with multiplicity."""
    if not 1 <= count <= MAX_DISC_EIGENVALUES:
        raise DomainError(f"count must lie in [1, {MAX_DISC_EIGENVALUES}], got {count!r}")
    max_order, zeros_per_order = INITIAL_ORDERS, INITIAL_ZEROS
    while True:
        entries = _enumerate(max_order, zeros_per_order)
        if len(entries) >= count:
            ceiling = COMPLETENESS_GUARD * entries[count - 1][0]
            if _is_complete(max_order, zeros_per_order, ceiling):
                break
        max_order *= 2
        zeros_per_order *= 2
    logger.debug("[DISC] count=%s orders<=%s zeros/order=%s", count, max_order, zeros_per_order)

    j01 = bessel_zero(0, 1)
    j11 = bessel_zero(1, 1)
    lambda1 = j01 * j01
    lambda2 = j11 * j11
    head = entries[:count]
    spectrum = tuple(value for value, _, _ in head)
    # same cached zeros as the enumeration, so spectrum[0] == lambda1 bitwise
    return DiscConstants(
        lambda1_disc=lambda1,
        lambda2_disc=lambda2,
        lambda_star=lambda2 / lambda1,
        spectrum=spectrum,
        modes=tuple((m, l_index) for _, m, l_index in head),
    )


def disc_constants() -> DiscConstants:
    """Default disc spectrum used by the bound engine."""
    return disc_spectrum(12)


def j01_bessel_j1_squared() -> float:
    """J_1(j_{0,1})^2, the Payne–Weinberger weight."""
    return bessel_j(1, bessel_zero(0, 1)) ** 2


def disc_traces(disc: DiscConstants) -> list[ConstantTrace]:
    """Provenance records for the disc constants."""
    return [
        ConstantTrace.closed_form("lambda1_disc", disc.lambda1_disc, "disc-j01-squared"),
        ConstantTrace.closed_form("lambda2_disc", disc.lambda2_disc, "disc-j11-squared"),
        ConstantTrace.closed_form("lambda_star", disc.lambda_star, "ppw-disc-ratio"),
    ]
