"""Five-point Dirichlet Laplacian on a grid mask."""

from __future__ import annotations

import logging

import numpy as np
from scipy import sparse

from .types import BoundaryTreatment, GridMask

logger = logging.getLogger(__name__)


def _second_difference(size: int) -> sparse.csr_matrix:
    return sparse.diags([-1.0, 2.0, -1.0], [-1, 0, 1], shape=(size, size), format="csr")


def assemble_laplacian(mask: GridMask, boundary: BoundaryTreatment = "staircase") -> sparse.csr_matrix:
    """(4u_ij − u_{i±1,j} − u_{i,j±1})/h² restricted to the inside nodes.

    Outside neighbors contribute zero. With `ghost`, a neighbor cut by the
    boundary at fraction θ of the cell adds (1/θ − 1)/h² to the diagonal,
    the symmetric linear ghost-value closure.
    """
    full = sparse.kron(sparse.identity(mask.ny), _second_difference(mask.nx)) + sparse.kron(_second_difference(mask.ny), sparse.identity(mask.nx))
    flat = mask.inside.ravel()
    operator = full.tocsr()[flat][:, flat] / (mask.h * mask.h)
    if boundary == "ghost":
        correction = np.sum(1.0 / mask.boundary_fractions - 1.0, axis=1) / (mask.h * mask.h)
        operator = operator + sparse.diags(correction)
    logger.debug("[LAPLACIAN] boundary=%s nodes=%s nnz=%s", boundary, operator.shape[0], operator.nnz)
    return sparse.csr_matrix(operator)
