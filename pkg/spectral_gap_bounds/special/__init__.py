"""Special functions: Γ, Bessel J and Bessel zeros."""

from .functions import bessel_j, double_factorial, gamma, gamma_half_integer, log_gamma
from .zeros import BesselZeroTable, bessel_zero, bessel_zeros

__all__ = [
    "BesselZeroTable",
    "bessel_j",
    "bessel_zero",
    "bessel_zeros",
    "double_factorial",
    "gamma",
    "gamma_half_integer",
    "log_gamma",
]
