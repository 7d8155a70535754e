"""Infimum search for smooth objectives on an open interval, in log space."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
import logging

import numpy as np
from scipy.optimize import minimize_scalar

from ..config import OptimizerConfig
from .types import CertificateKind

logger = logging.getLogger(__name__)

type LogObjective = Callable[[np.ndarray], np.ndarray]

CERTIFICATE_STEP = 1e-4
RELATIVE_CLAMP = 1e-6


@dataclass(frozen=True, slots=True)
class Infimum:
    log_value: float
    argument: float
    interval: tuple[float, float]
    certificate: CertificateKind
    certified: bool


def scan_nodes(lower: float, upper: float, count: int) -> np.ndarray:
    """Uniform nodes plus nodes log-clustered toward both ends of [lower, upper]."""
    half_width = (upper - lower) / 2
    smallest_offset = max(half_width * 1e-12, np.finfo(float).eps * max(abs(lower), abs(upper)))
    offsets = np.geomspace(smallest_offset, half_width, count // 4)
    nodes = np.concatenate(
        [
            np.linspace(lower, upper, count - 2 * (count // 4)),
            lower + offsets,
            upper - offsets,
        ]
    )
    return np.unique(np.clip(nodes, lower, upper))


def _scalar(log_objective: LogObjective, x: float) -> float:
    return float(np.asarray(log_objective(np.asarray([x], dtype=float)))[0])


def _certify(log_objective: LogObjective, argument: float, lower: float, upper: float) -> tuple[CertificateKind, bool]:
    """Check the minimum with one-sided finite differences."""
    step = CERTIFICATE_STEP * (upper - lower)
    center = _scalar(log_objective, argument)
    if argument - step <= lower:
        return "left_endpoint", _scalar(log_objective, argument + step) >= center
    if argument + step >= upper:
        return "right_endpoint", _scalar(log_objective, argument - step) >= center
    left_slope = center - _scalar(log_objective, argument - step)
    right_slope = _scalar(log_objective, argument + step) - center
    return "interior", left_slope <= 0 <= right_slope


def minimize_log_objective(
    log_objective: LogObjective,
    lower: float,
    upper: float,
    config: OptimizerConfig | None = None,
) -> Infimum:
    """Infimum of exp(log_objective) over the open interval (lower, upper).

    The interval is clamped inward by `config.endpoint_clamp`, or by a 1e-6
    fraction of its width when that is smaller; the returned argument always
    lies strictly inside (lower, upper). Any log base works.
    """
    config = config or OptimizerConfig()
    clamp = min(config.endpoint_clamp, RELATIVE_CLAMP * (upper - lower))
    lo = lower + clamp
    hi = upper - clamp
    if not lo < hi:
        raise ValueError(f"interval ({lower!r}, {upper!r}) is too narrow to optimize over")

    nodes = scan_nodes(lo, hi, config.scan_points)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        values = np.asarray(log_objective(nodes), dtype=float)
    values = np.where(np.isfinite(values), values, np.inf)
    best = int(np.argmin(values))
    bracket_lo = nodes[max(best - 1, 0)]
    bracket_hi = nodes[min(best + 1, len(nodes) - 1)]

    candidates = [(float(values[best]), float(nodes[best])), (_scalar(log_objective, lo), lo), (_scalar(log_objective, hi), hi)]
    if bracket_lo < bracket_hi:
        refined = minimize_scalar(
            lambda x: _scalar(log_objective, x),
            bounds=(bracket_lo, bracket_hi),
            method="bounded",
            options={"xatol": config.xatol},
        )
        candidates.append((float(refined.fun), float(refined.x)))
    log_value, argument = min(candidates)
    certificate, certified = _certify(log_objective, argument, lo, hi)
    logger.debug(
        "[INFIMUM] interval=(%s,%s) argument=%s log_value=%s certificate=%s certified=%s",
        lower,
        upper,
        argument,
        log_value,
        certificate,
        certified,
    )
    return Infimum(log_value=log_value, argument=argument, interval=(lower, upper), certificate=certificate, certified=certified)
