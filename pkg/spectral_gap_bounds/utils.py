"""Shared deterministic helpers for exponents and JSON reports."""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any

import numpy as np

JsonObject = dict[str, Any]


def parse_alpha(value: str | float) -> float:
    """Parse a regularity exponent, accepting `inf`/`∞` for the infinite case."""
    if isinstance(value, str) and value.strip().lower() in {"inf", "infinity", "∞"}:
        return math.inf
    alpha = float(value)
    if math.isnan(alpha):
        raise ValueError(f"alpha must be a number or 'inf', got {value!r}")
    return alpha


def format_alpha(alpha: float) -> str:
    """Render an exponent for tables and JSON keys."""
    return "inf" if math.isinf(alpha) else f"{alpha:g}"


def inverse_power(base: float, alpha: float) -> float:
    """Return base**(1/alpha), with alpha = inf giving 1."""
    return 1.0 if math.isinf(alpha) else base ** (1.0 / alpha)


def is_nondecreasing(values: Any, *, tol: float = 0.0) -> bool:
    """Return whether a sequence is non-decreasing up to tol."""
    array = np.asarray(values, dtype=float)
    return bool(np.all(np.diff(array) >= -tol))


def write_json_file(path: Path, payload: Any) -> None:
    """Write a JSON payload deterministically to disk."""
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(f"{json.dumps(payload, indent=2, sort_keys=True)}\n", encoding="utf-8")
