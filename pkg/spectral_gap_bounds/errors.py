"""Error family shared by the constant, map, bound and solver layers."""

from __future__ import annotations

from typing import Any


class SpectralBoundsError(Exception):
    """Base class for every error raised by spectral_gap_bounds."""


class DomainError(SpectralBoundsError, ValueError):
    """An argument lies outside the admissible range of a formula."""


class InfeasibleConstantError(DomainError):
    """A quasidisc constant is undefined because nu >= 1."""


class ContainmentError(DomainError):
    """The inclusion D ⊆ tΩ required by the high-eigenvalue bounds is not certified."""


class SolverConvergenceError(SpectralBoundsError, RuntimeError):
    """The reference eigensolver did not reach its residual tolerance."""

    def __init__(self, message: str, *, diagnostics: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.diagnostics = diagnostics or {}


def require_open_interval(name: str, value: float, lower: float, upper: float) -> None:
    """Raise DomainError unless lower < value < upper."""
    if not lower < value < upper:
        raise DomainError(f"{name}={value!r} must lie in the open interval ({lower!r}, {upper!r})")
