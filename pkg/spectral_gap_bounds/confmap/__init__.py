"""Polynomial conformal maps of the disc: families, norms, geometry."""

from .geometry import (
    InradiusMode,
    boundary_polygon,
    check_disc_containment,
    critical_points,
    cusp_count,
    disc_sample,
    inscribed_radius,
    interior_zero_count,
    perimeter,
    points_in_polygon,
    polygon_area,
    polygon_cusp_count,
    polygon_perimeter,
    require_locally_conformal,
    scanline_crossings,
    winding_zero_count,
)
from .maps import MapFamily, PolynomialConformalMap, dump_map, epicycloid_map, from_complex, identity_map, load_map, scale_map, section4_map
from .norms import (
    DerivativeNorms,
    ModulusIntegral,
    area,
    derivative_norm,
    derivative_norms,
    deviation_between,
    deviation_norm_l2,
    even_power_norm,
    modulus_cross_integral,
    modulus_deviation,
    modulus_deviation_l2,
    normalize_area,
    quadrature_lp_integral,
    quadrature_lp_norm,
    sqrt_series,
    sup_norm,
    variation_between,
    variation_upper_bound,
)
from .quadrature import DiscIntegral, DiscRule, disc_rule, integrate_disc

__all__ = [
    "DerivativeNorms",
    "DiscIntegral",
    "DiscRule",
    "InradiusMode",
    "MapFamily",
    "ModulusIntegral",
    "PolynomialConformalMap",
    "area",
    "boundary_polygon",
    "check_disc_containment",
    "critical_points",
    "cusp_count",
    "derivative_norm",
    "derivative_norms",
    "deviation_between",
    "deviation_norm_l2",
    "disc_rule",
    "disc_sample",
    "dump_map",
    "epicycloid_map",
    "even_power_norm",
    "from_complex",
    "identity_map",
    "inscribed_radius",
    "integrate_disc",
    "interior_zero_count",
    "load_map",
    "modulus_cross_integral",
    "modulus_deviation",
    "modulus_deviation_l2",
    "normalize_area",
    "perimeter",
    "points_in_polygon",
    "polygon_area",
    "polygon_cusp_count",
    "polygon_perimeter",
    "quadrature_lp_integral",
    "quadrature_lp_norm",
    "require_locally_conformal",
    "scale_map",
    "scanline_crossings",
    "section4_map",
    "sqrt_series",
    "sup_norm",
    "variation_between",
    "variation_upper_bound",
    "winding_zero_count",
]
