"""Boundary polygons of map images and the planar geometry built on them."""

from __future__ import annotations

import logging
import math
from typing import Literal

import numpy as np
from numpy.polynomial import polynomial as P
from scipy.spatial import cKDTree

from ..config import GeometryConfig
from ..errors import DomainError, SolverConvergenceError
from .maps import PolynomialConformalMap, epicycloid_map

logger = logging.getLogger(__name__)

type InradiusMode = Literal["formula", "paper", "numeric"]

EDGE_TOLERANCE = 1e-12
ROOT_TOLERANCE = 1e-9
CUSP_SEGMENT_FRACTION = 0.05
MAX_PHASE_STEP = math.pi / 4
WINDING_RADIUS = 1 - 1e-3


def boundary_polygon(phi: PolynomialConformalMap, samples: int) -> np.ndarray:
    """φ(e^{2πij/samples}) for j = 0..samples−1 as a (samples, 2) array."""
    if samples < 3:
        raise DomainError(f"polygon needs at least 3 samples, got {samples!r}")
    w = phi(np.exp(2j * math.pi * np.arange(samples) / samples))
    return np.column_stack([w.real, w.imag])


def polygon_area(polygon: np.ndarray) -> float:
    """Signed shoelace area, positive for counter-clockwise vertices."""
    x, y = polygon[:, 0], polygon[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def polygon_perimeter(polygon: np.ndarray) -> float:
    return float(np.sum(np.hypot(*(np.roll(polygon, -1, axis=0) - polygon).T)))


def perimeter(phi: PolynomialConformalMap, samples: int = 4096) -> float:
    """Arclength |∂Ω| of the boundary polygon."""
    return polygon_perimeter(boundary_polygon(phi, samples))


def critical_points(phi: PolynomialConformalMap) -> np.ndarray:
    """Roots of φ′."""
    derivative = np.trim_zeros(phi.derivative_coefficients, "b")
    if len(derivative) <= 1:
        return np.empty(0, dtype=complex)
    return P.polyroots(derivative)


def cusp_count(phi: PolynomialConformalMap) -> int:
    """Number of zeros of φ′ on the unit circle, i.e. boundary cusps."""
    return int(np.sum(np.abs(np.abs(critical_points(phi)) - 1) < ROOT_TOLERANCE))


def interior_zero_count(phi: PolynomialConformalMap) -> int:
    """Number of zeros of φ′ strictly inside the unit disc."""
    return int(np.sum(np.abs(critical_points(phi)) < 1 - ROOT_TOLERANCE))


def polygon_cusp_count(polygon: np.ndarray) -> int:
    """Count cusps of a sampled curve as isolated dips of the edge length."""
    lengths = np.hypot(*(np.roll(polygon, -1, axis=0) - polygon).T)
    dips = (lengths < np.roll(lengths, 1)) & (lengths <= np.roll(lengths, -1))
    return int(np.sum(dips & (lengths < CUSP_SEGMENT_FRACTION * np.median(lengths))))


def winding_zero_count(phi: PolynomialConformalMap, radius: float = WINDING_RADIUS, *, max_samples: int = 2**20) -> int:
    """Zeros of φ′ in |z| < radius by the argument principle.

    The contour sample doubles until every phase step is below π/4.
    """
    if not 0 < radius:
        raise DomainError(f"radius must be positive, got {radius!r}")
    samples = 1024
    while samples <= max_samples:
        values = phi.derivative(radius * np.exp(2j * math.pi * np.arange(samples) / samples))
        if np.any(values == 0):
            raise DomainError(f"φ′ vanishes on the contour |z|={radius!r}")
        steps = np.angle(np.roll(values, -1) / values)
        if float(np.max(np.abs(steps))) < MAX_PHASE_STEP:
            return round(float(np.sum(steps)) / (2 * math.pi))
        samples *= 2
    raise SolverConvergenceError(
        f"argument principle unresolved at radius {radius!r}",
        diagnostics={"samples": samples // 2, "radius": radius},
    )


def require_locally_conformal(phi: PolynomialConformalMap) -> None:
    """Raise DomainError when φ′ has a zero inside the unit disc."""
    zeros = interior_zero_count(phi)
    if zeros:
        raise DomainError(f"map {phi.label} is not locally conformal: φ′ has {zeros} zero(s) in the unit disc")


def scanline_crossings(polygon: np.ndarray, level: float, axis: int = 1) -> np.ndarray:
    """Sorted coordinates where the polygon crosses the line {coordinate[axis] = level}.

    Edges are half-open in the scan direction so each vertex is counted once.
    """
    other = 1 - axis
    start = polygon
    end = np.roll(polygon, -1, axis=0)
    a, b = start[:, axis], end[:, axis]
    spans = (a <= level) != (b <= level)
    t = (level - a[spans]) / (b[spans] - a[spans])
    return np.sort(start[spans, other] + t * (end[spans, other] - start[spans, other]))


def _segment_distance(px: np.ndarray, py: float, start: np.ndarray, end: np.ndarray) -> np.ndarray:
    """Distance from each point (px_i, py) to the nearest of the given segments."""
    d = end - start
    length_sq = np.einsum("ij,ij->i", d, d)
    t = ((px[:, None] - start[:, 0]) * d[:, 0] + (py - start[:, 1]) * d[:, 1]) / np.where(length_sq > 0, length_sq, 1.0)
    t = np.clip(t, 0.0, 1.0)
    return np.hypot(px[:, None] - (start[:, 0] + t * d[:, 0]), py - (start[:, 1] + t * d[:, 1])).min(axis=1)


def _row_inside(xs: np.ndarray, y: float, polygon: np.ndarray, edge_tolerance: float) -> np.ndarray:
    crossings = scanline_crossings(polygon, y)
    inside = np.searchsorted(crossings, xs, side="left") % 2 == 1
    end = np.roll(polygon, -1, axis=0)
    near = (np.minimum(polygon[:, 1], end[:, 1]) <= y + edge_tolerance) & (np.maximum(polygon[:, 1], end[:, 1]) >= y - edge_tolerance)
    if inside.any() and near.any():
        on_edge = _segment_distance(xs[inside], y, polygon[near], end[near]) <= edge_tolerance
        inside[np.flatnonzero(inside)[on_edge]] = False
    return inside


def points_in_polygon(points: np.ndarray, polygon: np.ndarray, *, edge_tolerance: float = EDGE_TOLERANCE) -> np.ndarray:
    """Even–odd inside test; points within edge_tolerance of an edge count as outside."""
    points = np.asarray(points, dtype=float).reshape(-1, 2)
    inside = np.zeros(len(points), dtype=bool)
    if not len(points):
        return inside
    rows, inverse = np.unique(points[:, 1], return_inverse=True)
    order = np.argsort(inverse, kind="stable")
    groups = np.split(order, np.cumsum(np.bincount(inverse))[:-1])
    for y, members in zip(rows, groups, strict=True):
        inside[members] = _row_inside(points[members, 0], float(y), polygon, edge_tolerance)
    return inside


def _is_epicycloid(phi: PolynomialConformalMap) -> bool:
    if phi.family != "epicycloid" or phi.parameter is None:
        return False
    reference = epicycloid_map(phi.parameter).complex_coefficients
    return len(reference) == len(phi.coefficients) and bool(np.allclose(phi.complex_coefficients, reference, rtol=0, atol=1e-15))


def inscribed_radius(phi: PolynomialConformalMap, mode: InradiusMode = "numeric", config: GeometryConfig | None = None) -> float:
    """Inscribed radius ρ of Ω = φ(𝔻).

    `formula` (alias `paper`) returns ((n−1)/(n+1))^{3/4} and only accepts epicycloid maps;
    `numeric` returns the largest grid-node distance to the boundary sample.
    """
    if mode in ("formula", "paper"):
        if not _is_epicycloid(phi):
            raise DomainError(f"formula inradius is defined for epicycloid maps only, got {phi.label}")
        n = phi.parameter
        return ((n - 1) / (n + 1)) ** 0.75
    config = config or GeometryConfig()
    polygon = boundary_polygon(phi, config.polygon_samples)
    xs = np.linspace(polygon[:, 0].min(), polygon[:, 0].max(), config.inradius_grid)
    ys = np.linspace(polygon[:, 1].min(), polygon[:, 1].max(), config.inradius_grid)
    grid = np.column_stack([axis.ravel() for axis in np.meshgrid(xs, ys)])
    interior = grid[points_in_polygon(grid, polygon)]
    if not len(interior):
        raise DomainError(f"no grid node inside {phi.label} at resolution {config.inradius_grid}")
    distances, _ = cKDTree(polygon).query(interior)
    radius = float(distances.max())
    logger.debug("[GEOMETRY] inradius map=%s nodes=%s radius=%s", phi.label, len(interior), radius)
    return radius


def disc_sample(radius: float, grid: int, circle: int) -> np.ndarray:
    """Cartesian nodes of the closed disc of the given radius plus its boundary circle."""
    axis = np.linspace(-radius, radius, grid)
    x, y = (values.ravel() for values in np.meshgrid(axis, axis))
    keep = np.hypot(x, y) <= radius
    angles = 2 * math.pi * np.arange(circle) / circle
    return np.concatenate([np.column_stack([x[keep], y[keep]]), radius * np.column_stack([np.cos(angles), np.sin(angles)])])


def check_disc_containment(phi: PolynomialConformalMap, t: float, config: GeometryConfig | None = None) -> bool:
    """Whether a dense sample of the closed unit disc lies inside the polygon of tΩ."""
    if not t > 0:
        raise DomainError(f"t must be positive, got {t!r}")
    config = config or GeometryConfig()
    polygon = t * boundary_polygon(phi, config.polygon_samples)
    sample = disc_sample(1 - config.containment_margin, config.containment_grid, config.containment_circle)
    contained = bool(points_in_polygon(sample, polygon).all())
    logger.debug("[GEOMETRY] containment map=%s t=%s points=%s contained=%s", phi.label, t, len(sample), contained)
    return contained
