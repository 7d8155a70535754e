"""Finite-difference Dirichlet eigensolver used as the reference oracle."""

from .laplacian import assemble_laplacian
from .mask import build_mask
from .solver import Eigenpairs, convergence_table, smallest_eigenpairs, solve_domain, solve_polygon, write_convergence_csv
from .types import BoundaryTreatment, EigenResult, GridMask

__all__ = [
    "BoundaryTreatment",
    "EigenResult",
    "Eigenpairs",
    "GridMask",
    "assemble_laplacian",
    "build_mask",
    "convergence_table",
    "smallest_eigenpairs",
    "solve_domain",
    "solve_polygon",
    "write_convergence_csv",
]
