import json
import math

import numpy as np
import pytest
from scipy.special import binom

from spectral_gap_bounds.bounds import epicycloid_variation_closed_form
from spectral_gap_bounds.config import GeometryConfig, QuadratureConfig
from spectral_gap_bounds.confmap import (
    PolynomialConformalMap,
    area,
    boundary_polygon,
    check_disc_containment,
    cusp_count,
    derivative_norm,
    derivative_norms,
    deviation_norm_l2,
    disc_rule,
    dump_map,
    epicycloid_map,
    even_power_norm,
    from_complex,
    identity_map,
    inscribed_radius,
    integrate_disc,
    interior_zero_count,
    load_map,
    modulus_cross_integral,
    modulus_deviation,
    modulus_deviation_l2,
    normalize_area,
    perimeter,
    points_in_polygon,
    polygon_area,
    polygon_cusp_count,
    quadrature_lp_norm,
    require_locally_conformal,
    scale_map,
    section4_map,
    sqrt_series,
    sup_norm,
    variation_between,
    variation_upper_bound,
    winding_zero_count,
)
from spectral_gap_bounds.confmap import quadrature
from spectral_gap_bounds.confmap.quadrature import integrate_on_rule
from spectral_gap_bounds.errors import DomainError


@pytest.mark.parametrize("n", [2, 3, 5, 10, 50])
def test_epicycloid_closed_forms(n):
    phi = epicycloid_map(n)
    c = math.sqrt(n / (n + 1))
    assert phi.complex_coefficients[1] == pytest.approx(c)
    assert phi.complex_coefficients[n] == pytest.approx(c / n)
    assert area(phi) == pytest.approx(math.pi, rel=1e-14)
    assert deviation_norm_l2(phi) ** 2 == pytest.approx(2 * math.pi * (1 - c), rel=1e-12)
    assert sup_norm(phi) == pytest.approx(2 * c, rel=1e-10)
    assert cusp_count(phi) == n - 1
    assert interior_zero_count(phi) == 0


@pytest.mark.parametrize("n", [3, 5, 8])
def test_variation_at_infinity_matches_closed_form(n):
    assert variation_upper_bound(epicycloid_map(n), math.inf) == pytest.approx(epicycloid_variation_closed_form(n), rel=1e-10)


def test_identity_map_has_zero_deviation():
    phi = identity_map()
    assert deviation_norm_l2(phi) == 0
    assert variation_upper_bound(phi, 4.0) == 0
    assert modulus_deviation_l2(phi) == pytest.approx(0, abs=1e-12)


def test_identity_polygon_approximates_the_unit_circle():
    polygon = boundary_polygon(identity_map(), 4096)
    assert polygon_area(polygon) == pytest.approx(math.pi, rel=1e-5)
    assert perimeter(identity_map()) == pytest.approx(2 * math.pi, rel=1e-6)


def test_map_validation_and_degree():
    with pytest.raises(ValueError, match="non-constant"):
        PolynomialConformalMap(label="const", coefficients=((1.0, 0.0), (0.0, 0.0)))
    assert epicycloid_map(5).degree == 5
    with pytest.raises(DomainError):
        epicycloid_map(1)
    with pytest.raises(DomainError):
        section4_map(1)


def test_section4_family():
    psi, t = section4_map(3)
    assert t == pytest.approx(9 / 4)
    assert cusp_count(psi) == 2
    assert area(psi) == pytest.approx(math.pi * (1 + 1 / 3))


@pytest.mark.parametrize("alpha", [4, 6])
def test_even_power_norm_matches_quadrature(alpha):
    phi = epicycloid_map(5)
    assert even_power_norm(phi, alpha) == pytest.approx(quadrature_lp_norm(phi, alpha), rel=1e-9)


def test_even_power_norm_rejects_odd_exponents():
    with pytest.raises(DomainError):
        even_power_norm(epicycloid_map(3), 3)


def test_derivative_norm_domain():
    phi = epicycloid_map(4)
    with pytest.raises(DomainError):
        derivative_norm(phi, 2.0)
    assert derivative_norm(phi, math.inf) == pytest.approx(sup_norm(phi))
    norms = derivative_norms(phi, 4.0)
    assert norms.area == pytest.approx(math.pi)
    assert norms.l_alpha_norm == pytest.approx(even_power_norm(phi, 4), rel=1e-9)


def test_disc_quadrature_integrates_polynomials_exactly():
    integral = integrate_disc(lambda z: np.abs(z) ** 4)
    assert integral.converged
    assert integral.value == pytest.approx(math.pi / 3, rel=1e-12)


@pytest.mark.parametrize("n", range(2, 11))
def test_closed_forms_agree_with_disc_quadrature(n):
    phi = epicycloid_map(n)
    deviation_sq = integrate_disc(lambda z: np.abs(phi.derivative(z) - 1) ** 2)
    area_integral = integrate_disc(lambda z: np.abs(phi.derivative(z)) ** 2)
    assert deviation_sq.converged and area_integral.converged
    assert deviation_norm_l2(phi) == pytest.approx(math.sqrt(deviation_sq.value), rel=1e-10)
    assert area(phi) == pytest.approx(area_integral.value, rel=1e-10)


def test_disc_rule_is_stored_factored():
    rule = disc_rule(8, 16)
    assert rule.radii.shape == (8,)
    assert rule.unit.shape == (16,)
    assert rule.nodes.shape == rule.weights.shape == (8, 16)
    assert float(np.sum(rule.weights)) == pytest.approx(math.pi, rel=1e-14)


def test_blocked_evaluation_matches_a_single_block(monkeypatch):
    phi = epicycloid_map(4)
    integrand = lambda z: np.abs(phi.derivative(z)) ** 3
    whole = integrate_on_rule(integrand, 64, 256)
    monkeypatch.setattr(quadrature, "BLOCK_NODES", 256 * 5)
    assert integrate_on_rule(integrand, 64, 256) == pytest.approx(whole, rel=1e-13)


def test_sqrt_series_squares_back():
    b = sqrt_series(np.array([1.0, 1.0]), 6)
    assert np.allclose(b[:4], [1, 0.5, -0.125, 0.0625])
    p = np.array([2.0, -0.5 + 0.3j, 0.1j])
    square = np.convolve(sqrt_series(p, 12), sqrt_series(p, 12))[:12]
    assert np.allclose(square[:3], p, rtol=0, atol=1e-14)
    assert np.abs(square[3:]).max() < 1e-12
    with pytest.raises(DomainError):
        sqrt_series(np.array([0.0, 1.0]), 4)


@pytest.mark.parametrize("n", [2, 5, 10])
def test_modulus_deviation_of_epicycloids(n):
    phi = epicycloid_map(n)
    c = math.sqrt(n / (n + 1))
    k = np.arange(200_000)
    cross = c * math.pi * float(np.sum(binom(0.5, k) ** 2 / (k * (n - 1) + 1)))
    modulus = modulus_deviation(phi)
    assert modulus.method == "sqrt-series"
    assert modulus.converged
    assert modulus.value**2 == pytest.approx(2 * math.pi - 2 * cross, rel=1e-9)
    coarse = integrate_disc(lambda z: (np.abs(phi.derivative(z)) - 1) ** 2, QuadratureConfig(max_doublings=1))
    assert modulus.value**2 == pytest.approx(coarse.value, abs=1e-5)


def test_modulus_cross_integral_falls_back_to_quadrature_inside_zeros():
    folded = from_complex("folded", [0, 1, 1])
    result = modulus_cross_integral(folded, identity_map(), QuadratureConfig(max_doublings=1))
    assert result.method == "disc-quadrature"
    assert result.value > 0


def test_derivative_norms_carry_convergence_and_provenance():
    norms = derivative_norms(epicycloid_map(5), math.inf)
    assert norms.converged
    payload = json.loads(norms.model_dump_json())
    assert payload["provenance"] == "l_alpha:boundary-sup;deviation:closed-form;modulus:sqrt-series;area:closed-form"
    assert payload["alpha"] == "Infinity"


def test_normalize_area():
    phi = from_complex("scaled", [0, 2.0, 0.5])
    assert area(normalize_area(phi)) == pytest.approx(math.pi, rel=1e-12)


def test_scale_map_scales_area_quadratically():
    phi = epicycloid_map(4)
    scaled = scale_map(phi, 2.0)
    assert area(scaled) == pytest.approx(4 * area(phi), rel=1e-14)
    assert scaled.label == "2*" + phi.label
    with pytest.raises(DomainError, match="positive"):
        scale_map(phi, 0.0)


@pytest.mark.parametrize("alpha", [4.0, math.inf])
def test_variation_against_the_identity_is_the_disc_variation(alpha):
    phi = epicycloid_map(5)
    assert variation_between(phi, identity_map(), alpha) == pytest.approx(variation_upper_bound(phi, alpha), rel=1e-8)
    assert variation_between(phi, phi, alpha) == 0.0


def test_map_file_round_trip(tmp_path):
    phi = epicycloid_map(4)
    path = tmp_path / "map.json"
    dump_map(phi, path)
    loaded = load_map(path)
    assert loaded.label == phi.label
    np.testing.assert_allclose(loaded.complex_coefficients, phi.complex_coefficients)


def test_map_file_needs_coefficients(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"label": "x"}', encoding="utf-8")
    with pytest.raises(DomainError):
        load_map(path)


def test_points_on_an_edge_count_as_outside():
    square = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
    points = np.array([[0.5, 0.5], [0.0, 0.5], [0.5, 0.0], [1.5, 0.5], [0.999, 0.001]])
    assert points_in_polygon(points, square).tolist() == [True, False, False, False, True]


def test_polygon_cusps_of_an_epicycloid():
    assert polygon_cusp_count(boundary_polygon(epicycloid_map(5), 4096)) == 4
    assert polygon_cusp_count(boundary_polygon(identity_map(), 4096)) == 0


def test_winding_count_detects_interior_critical_points():
    assert winding_zero_count(epicycloid_map(6)) == 0
    folded = from_complex("folded", [0, 1.0, 1.0])
    assert winding_zero_count(folded) == 1
    assert interior_zero_count(folded) == 1
    with pytest.raises(DomainError, match="not locally conformal"):
        require_locally_conformal(folded)


def test_inradius_modes():
    phi = epicycloid_map(5)
    formula = inscribed_radius(phi, "formula")
    assert formula == pytest.approx((4 / 6) ** 0.75)
    assert inscribed_radius(phi, "numeric") == pytest.approx(4 / math.sqrt(30), rel=2e-2)
    with pytest.raises(DomainError):
        inscribed_radius(section4_map(3)[0], "formula")


def test_inradius_of_the_disc():
    assert inscribed_radius(identity_map(), "numeric") == pytest.approx(1.0, rel=1e-2)


def test_containment_of_section4_image():
    psi, t = section4_map(3)
    config = GeometryConfig(containment_grid=128, containment_circle=1024)
    assert check_disc_containment(psi, t, config)
    assert not check_disc_containment(psi, 1.0, config)
    with pytest.raises(DomainError):
        check_disc_containment(psi, 0.0)


@pytest.mark.parametrize("n", [6, 8, 12, 20])
def test_numeric_inradius_tracks_the_formula(n):
    phi = epicycloid_map(n)
    formula = inscribed_radius(phi, "formula")
    assert inscribed_radius(phi, "paper") == formula
    assert inscribed_radius(phi, "numeric") == pytest.approx(formula, rel=2e-2)


@pytest.mark.parametrize("k", range(2, 9))
def test_section4_images_reach_their_modulus_and_are_contained(k):
    psi, t = section4_map(k)
    boundary = boundary_polygon(psi, 4096)
    assert float(np.hypot(*boundary.T).max()) == pytest.approx((k + 1) / k, rel=1e-12)
    assert check_disc_containment(psi, t, GeometryConfig(containment_grid=96, containment_circle=1024))
