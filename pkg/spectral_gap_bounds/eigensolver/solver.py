"""Smallest Dirichlet eigenpairs and two-grid solves of map images."""

from __future__ import annotations

from dataclasses import dataclass
import logging
from pathlib import Path

import numpy as np
import polars as pl
from scipy import sparse
from scipy.sparse.linalg import ArpackNoConvergence, LinearOperator, eigsh, splu

from ..config import SolverConfig
from ..confmap import PolynomialConformalMap, boundary_polygon, cusp_count, polygon_cusp_count
from ..errors import DomainError, SolverConvergenceError
from .laplacian import assemble_laplacian
from .mask import build_mask
from .types import EigenResult

logger = logging.getLogger(__name__)

DENSE_LIMIT = 400
ITERATIONS_PER_NODE = 10


@dataclass(frozen=True, slots=True)
class Eigenpairs:
    values: np.ndarray
    vectors: np.ndarray
    residuals: np.ndarray


def _residuals(operator: sparse.spmatrix, values: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    """‖Au − λu‖/‖u‖ per column."""
    return np.linalg.norm(operator @ vectors - vectors * values, axis=0) / np.linalg.norm(vectors, axis=0)


def smallest_eigenpairs(operator: sparse.spmatrix, count: int, config: SolverConfig | None = None) -> Eigenpairs:
    """The `count` smallest eigenpairs of a sparse SPD operator.

    Shift-invert Lanczos about 0 on a sparse LU factor, followed by one block
    inverse-iteration step with Rayleigh–Ritz to polish the subspace.
    """
    config = config or SolverConfig()
    dimension = operator.shape[0]
    if not 1 <= count <= config.max_eigenpairs:
        raise DomainError(f"count must lie in [1, {config.max_eigenpairs}], got {count!r}")
    if dimension < count:
        raise DomainError(f"operator of dimension {dimension} has fewer than {count} eigenpairs")

    if dimension <= DENSE_LIMIT:
        values, vectors = np.linalg.eigh(operator.toarray())
        values, vectors = values[:count], vectors[:, :count]
    else:
        factor = splu(sparse.csc_matrix(operator))
        inverse = LinearOperator(operator.shape, matvec=factor.solve, dtype=float)
        max_iterations = ITERATIONS_PER_NODE * dimension
        try:
            values, vectors = eigsh(operator, k=count, sigma=0.0, OPinv=inverse, which="LM", tol=config.tolerance, maxiter=max_iterations)
        except ArpackNoConvergence as exc:
            raise SolverConvergenceError(
                f"Lanczos did not converge for {count} eigenpairs on {dimension} nodes",
                diagnostics={"dimension": dimension, "converged": len(exc.eigenvalues), "max_iterations": max_iterations},
            ) from exc
        basis, _ = np.linalg.qr(factor.solve(np.asarray(vectors)))
        values, rotation = np.linalg.eigh(basis.T @ (operator @ basis))
        vectors = basis @ rotation

    order = np.argsort(values)
    values, vectors = values[order], vectors[:, order]
    residuals = _residuals(operator, values, vectors)
    if np.any(residuals > config.residual_tolerance):
        raise SolverConvergenceError(
            f"eigenpair residuals exceed {config.residual_tolerance!r}",
            diagnostics={"dimension": dimension, "residuals": residuals.tolist(), "eigenvalues": values.tolist()},
        )
    logger.debug("[SOLVER] nodes=%s eigenvalues=%s max_residual=%s", dimension, values.tolist(), float(residuals.max()))
    return Eigenpairs(values=values, vectors=vectors, residuals=residuals)


def _polygon_of(domain: PolynomialConformalMap | np.ndarray, config: SolverConfig) -> tuple[str, np.ndarray, bool]:
    if isinstance(domain, PolynomialConformalMap):
        return domain.label, boundary_polygon(domain, config.polygon_samples), cusp_count(domain) > 0
    polygon = np.asarray(domain, dtype=float)
    return f"polygon({len(polygon)})", polygon, polygon_cusp_count(polygon) > 0


def solve_polygon(polygon: np.ndarray, h: float, count: int, config: SolverConfig | None = None) -> tuple[Eigenpairs, float]:
    """Eigenpairs of the masked grid Laplacian at one spacing, with the measured mask area."""
    config = config or SolverConfig()
    mask = build_mask(polygon, h, min_boundary_fraction=config.min_boundary_fraction)
    if mask.count < count:
        raise DomainError(f"only {mask.count} grid nodes inside the domain at h={h!r}, need {count}")
    operator = assemble_laplacian(mask, config.boundary)
    return smallest_eigenpairs(operator, count, config), mask.area


def solve_domain(
    domain: PolynomialConformalMap | np.ndarray,
    h: float,
    count: int = 3,
    refine: bool = True,
    config: SolverConfig | None = None,
) -> EigenResult:
    """Dirichlet eigenvalues of a map image or polygon.

    With `refine`, solves at h and h/2. Smooth boundaries under the ghost
    closure get Richardson values (4λ(h/2) − λ(h))/3; cusped boundaries and the
    staircase closure keep λ(h/2). The band is |λ(h) − λ(h/2)| either way.
    """
    config = config or SolverConfig()
    label, polygon, cusped = _polygon_of(domain, config)
    coarse, mask_area = solve_polygon(polygon, h, count, config)
    logger.info("[SOLVER] Solved label=%s h=%s lambda=%s", label, h, np.round(coarse.values, 6).tolist())
    if not refine:
        return EigenResult(
            label=label,
            h=h,
            boundary=config.boundary,
            nodes=len(coarse.vectors),
            eigenvalues=tuple(coarse.values.tolist()),
            residual_norms=tuple(coarse.residuals.tolist()),
            band=(0.0,) * count,
            cusped=cusped,
            mask_area=mask_area,
        )

    fine, fine_area = solve_polygon(polygon, h / 2, count, config)
    band = np.abs(coarse.values - fine.values)
    extrapolated = None
    extrapolation = "two_grid"
    if config.boundary == "ghost" and not cusped:
        extrapolated = tuple(np.sort((4 * fine.values - coarse.values) / 3).tolist())
        extrapolation = "richardson"
    logger.info("[SOLVER] Refined label=%s h=%s lambda=%s band=%s", label, h / 2, np.round(fine.values, 6).tolist(), np.round(band, 6).tolist())
    return EigenResult(
        label=label,
        h=h,
        boundary=config.boundary,
        nodes=len(fine.vectors),
        eigenvalues=tuple(coarse.values.tolist()),
        residual_norms=tuple(np.maximum(coarse.residuals, fine.residuals).tolist()),
        refined_eigenvalues=tuple(fine.values.tolist()),
        extrapolated=extrapolated,
        band=tuple(band.tolist()),
        extrapolation=extrapolation,
        cusped=cusped,
        mask_area=fine_area,
    )


def convergence_table(results: list[EigenResult]) -> pl.DataFrame:
    """One row per grid spacing: h, λ_1..λ_k."""
    rows: list[dict[str, float | str]] = []
    for result in results:
        grids = [(result.h, result.eigenvalues)]
        if result.refined_eigenvalues is not None:
            grids.append((result.h / 2, result.refined_eigenvalues))
        for h, values in grids:
            rows.append({"label": result.label, "h": h} | {f"lambda_{k}": value for k, value in enumerate(values, start=1)})
    return pl.DataFrame(rows).unique(subset=["label", "h"], keep="first", maintain_order=True).sort(["label", "h"], descending=[False, True])


def write_convergence_csv(results: list[EigenResult], path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    convergence_table(results).write_csv(path)
