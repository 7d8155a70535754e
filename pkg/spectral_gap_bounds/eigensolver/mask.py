"""Grid masks of polygons with the distances needed for ghost-point boundaries."""

from __future__ import annotations

import logging
import math

import numpy as np

from ..confmap.geometry import points_in_polygon, polygon_area, scanline_crossings
from ..errors import DomainError
from .types import GridMask

logger = logging.getLogger(__name__)

PADDING_CELLS = 2
MIN_AREA_CELLS = 10


def _axis_fractions(inside: np.ndarray, coords: np.ndarray, levels: np.ndarray, polygon: np.ndarray, axis: int, h: float) -> tuple[np.ndarray, np.ndarray]:
    """Boundary distance / h toward +axis and −axis for every node of `inside`.

    `inside` is laid out with lines of constant `levels` along its first index
    and `coords` along its second. Entries default to 1 where the neighbor is inside.
    """
    forward = np.ones(inside.shape)
    backward = np.ones(inside.shape)
    for line, level in enumerate(levels):
        row = inside[line]
        if not row.any():
            continue
        crossings = scanline_crossings(polygon, float(level), axis=axis)
        exits_forward = row & ~np.append(row[1:], False)
        exits_backward = row & ~np.insert(row[:-1], 0, False)
        if exits_forward.any():
            x = coords[exits_forward]
            index = np.searchsorted(crossings, x, side="right")
            hit = np.where(index < len(crossings), crossings[np.minimum(index, len(crossings) - 1)], x + h)
            forward[line, exits_forward] = np.clip((hit - x) / h, 0.0, 1.0)
        if exits_backward.any():
            x = coords[exits_backward]
            index = np.searchsorted(crossings, x, side="left") - 1
            hit = np.where(index >= 0, crossings[np.maximum(index, 0)], x - h)
            backward[line, exits_backward] = np.clip((x - hit) / h, 0.0, 1.0)
    return forward, backward


def build_mask(polygon: np.ndarray, h: float, *, min_boundary_fraction: float = 1e-2) -> GridMask:
    """Nodes strictly inside the polygon on a grid padded by 2h around its bounding box."""
    polygon = np.asarray(polygon, dtype=float)
    if polygon.ndim != 2 or polygon.shape[1] != 2 or len(polygon) < 3:
        raise DomainError(f"polygon must be an (N, 2) array with N >= 3, got shape {polygon.shape}")
    if not h > 0:
        raise DomainError(f"grid spacing h must be positive, got {h!r}")
    enclosed = abs(polygon_area(polygon))
    if enclosed < MIN_AREA_CELLS * h * h:
        raise DomainError(f"polygon area {enclosed!r} is below {MIN_AREA_CELLS}·h² at h={h!r}")

    lower = polygon.min(axis=0) - PADDING_CELLS * h
    upper = polygon.max(axis=0) + PADDING_CELLS * h
    nx, ny = (int(math.ceil((upper[axis] - lower[axis]) / h)) + 1 for axis in (0, 1))
    xs = lower[0] + h * np.arange(nx)
    ys = lower[1] + h * np.arange(ny)
    grid_x, grid_y = np.meshgrid(xs, ys)
    inside = points_in_polygon(np.column_stack([grid_x.ravel(), grid_y.ravel()]), polygon).reshape(ny, nx)
    if not inside.any():
        raise DomainError(f"no grid node lies inside the polygon at h={h!r}")

    east, west = _axis_fractions(inside, xs, ys, polygon, axis=1, h=h)
    north, south = _axis_fractions(inside.T, ys, xs, polygon, axis=0, h=h)
    fractions = np.column_stack([east[inside], west[inside], north.T[inside], south.T[inside]])
    fractions = np.maximum(fractions, min_boundary_fraction)

    mask = GridMask.from_inside(h, (float(lower[0]), float(lower[1])), inside, fractions)
    logger.debug("[MASK] h=%s grid=%sx%s inside=%s area=%s polygon_area=%s", h, nx, ny, mask.count, mask.area, enclosed)
    return mask
