import json
import math

import numpy as np
import pytest
from scipy import sparse

from spectral_gap_bounds.bounds import conformal_bounds, high_eigenvalue_report, validate_high_sandwich, validate_sandwich
from spectral_gap_bounds.config import SolverConfig
from spectral_gap_bounds.constants import disc_constants
from spectral_gap_bounds.confmap import boundary_polygon, epicycloid_map, identity_map, scale_map, section4_map
from spectral_gap_bounds.eigensolver import (
    EigenResult,
    GridMask,
    assemble_laplacian,
    build_mask,
    convergence_table,
    smallest_eigenpairs,
    solve_domain,
    solve_polygon,
    write_convergence_csv,
)
from spectral_gap_bounds.errors import DomainError, SolverConvergenceError

SQUARE = np.array([[0.0, 0.0], [math.pi, 0.0], [math.pi, math.pi], [0.0, math.pi]])
DISC = disc_constants()


def test_mask_of_a_square():
    mask = build_mask(SQUARE, math.pi / 10)
    assert mask.count == 81
    assert mask.area == pytest.approx(81 * (math.pi / 10) ** 2)
    assert np.all(mask.boundary_fractions > 0)
    assert mask.coordinates().shape == (81, 2)


def test_mask_argument_errors():
    with pytest.raises(DomainError):
        build_mask(SQUARE, 0.0)
    with pytest.raises(DomainError):
        build_mask(SQUARE[:2], 0.1)
    with pytest.raises(DomainError, match="below"):
        build_mask(SQUARE, 2.0)


def test_staircase_laplacian_of_a_line_of_nodes():
    inside = np.zeros((3, 5), dtype=bool)
    inside[1, 1:4] = True
    operator = assemble_laplacian(GridMask.from_inside(1.0, (0.0, 0.0), inside))
    expected = np.array([[4.0, -1.0, 0.0], [-1.0, 4.0, -1.0], [0.0, -1.0, 4.0]])
    np.testing.assert_allclose(operator.toarray(), expected)


def test_ghost_closure_adds_to_the_diagonal():
    inside = np.zeros((3, 3), dtype=bool)
    inside[1, 1] = True
    fractions = np.array([[0.5, 1.0, 1.0, 1.0]])
    operator = assemble_laplacian(GridMask.from_inside(1.0, (0.0, 0.0), inside, fractions), "ghost")
    assert operator.toarray()[0, 0] == pytest.approx(5.0)


def test_smallest_eigenpairs_of_a_path_graph():
    size = 800
    operator = sparse.diags([-1.0, 2.0, -1.0], [-1, 0, 1], shape=(size, size), format="csr")
    pairs = smallest_eigenpairs(operator, 3)
    exact = [4 * math.sin(k * math.pi / (2 * (size + 1))) ** 2 for k in (1, 2, 3)]
    np.testing.assert_allclose(pairs.values, exact, rtol=1e-8)
    assert np.all(pairs.residuals < 1e-8)


def test_smallest_eigenpairs_argument_errors():
    operator = sparse.identity(5, format="csr")
    with pytest.raises(DomainError):
        smallest_eigenpairs(operator, 0)
    with pytest.raises(DomainError):
        smallest_eigenpairs(operator, 6)


def test_unreachable_residual_tolerance_raises():
    operator = sparse.diags([-1.0, 2.0, -1.0], [-1, 0, 1], shape=(50, 50), format="csr")
    with pytest.raises(SolverConvergenceError) as info:
        smallest_eigenpairs(operator, 2, SolverConfig(residual_tolerance=1e-30))
    assert "residuals" in info.value.diagnostics


def test_square_spectrum():
    result = solve_domain(SQUARE, math.pi / 20)
    assert result.extrapolation == "richardson"
    assert not result.cusped
    np.testing.assert_allclose(result.estimates, [2.0, 5.0, 5.0], rtol=1e-3)
    assert result.margin(1) > 0


def test_scaling_law():
    (small, _), (large, _) = solve_polygon(SQUARE, 0.2, 3), solve_polygon(2 * SQUARE, 0.4, 3)
    np.testing.assert_allclose(large.values, small.values / 4, rtol=1e-8)


def test_unrefined_solve_has_zero_band():
    result = solve_domain(SQUARE, math.pi / 10, refine=False)
    assert result.band == (0.0, 0.0, 0.0)
    assert result.extrapolation == "none"
    assert result.margin(1) == pytest.approx(1e-9 * result.estimates[0])


def test_disc_spectrum_with_ghost_boundary():
    result = solve_domain(identity_map(), 0.05)
    assert result.extrapolation == "richardson"
    assert result.estimates[0] == pytest.approx(DISC.lambda1_disc, rel=1e-2)
    assert result.estimates[1] == pytest.approx(DISC.lambda2_disc, rel=1e-2)
    assert result.mask_area == pytest.approx(math.pi, rel=2e-2)


def test_ghost_boundary_beats_staircase_on_the_disc():
    ghost = solve_domain(identity_map(), 0.05, refine=False)
    staircase = solve_domain(identity_map(), 0.05, refine=False, config=SolverConfig(boundary="staircase"))
    assert abs(ghost.eigenvalues[0] - DISC.lambda1_disc) < abs(staircase.eigenvalues[0] - DISC.lambda1_disc)


def test_cusped_domains_use_two_grid_estimates():
    result = solve_domain(epicycloid_map(4), 0.08)
    assert result.cusped
    assert result.extrapolation == "two_grid"
    assert result.estimates == result.refined_eigenvalues


def test_convergence_table(tmp_path):
    results = [solve_domain(SQUARE, math.pi / 10), solve_domain(SQUARE, math.pi / 5, refine=False)]
    table = convergence_table(results)
    assert table["h"].to_list() == pytest.approx([math.pi / 5, math.pi / 10, math.pi / 20])
    assert {"label", "h", "lambda_1", "lambda_2", "lambda_3"} <= set(table.columns)
    path = tmp_path / "convergence.csv"
    write_convergence_csv(results, path)
    assert path.read_text(encoding="utf-8").startswith("label,h,lambda_1")


def test_result_shapes_are_validated():
    with pytest.raises(ValueError, match="non-decreasing"):
        EigenResult(label="x", h=0.1, boundary="ghost", nodes=10, eigenvalues=(2.0, 1.0), residual_norms=(0.0, 0.0), band=(0.0, 0.0), mask_area=1.0)
    with pytest.raises(ValueError, match="entries"):
        EigenResult(label="x", h=0.1, boundary="ghost", nodes=10, eigenvalues=(1.0, 2.0), residual_norms=(0.0,), band=(0.0, 0.0), mask_area=1.0)


def test_polygon_input_detects_cusps():
    polygon = boundary_polygon(epicycloid_map(3), 2048)
    result = solve_domain(polygon, 0.1, count=2, refine=False)
    assert result.cusped


def test_first_eigenvector_has_one_sign_and_the_basis_is_orthonormal():
    pairs, _ = solve_polygon(boundary_polygon(identity_map(), 1024), 0.05, 3)
    assert len(pairs.values) == 3
    ground = pairs.vectors[:, 0] * np.sign(pairs.vectors[0, 0])
    assert np.all(ground > 0)
    np.testing.assert_allclose(pairs.vectors.T @ pairs.vectors, np.identity(3), atol=1e-10)


def test_scaling_law_for_map_images():
    phi = epicycloid_map(6)
    small = solve_domain(phi, 0.1, refine=False)
    large = solve_domain(scale_map(phi, 2.0), 0.2, refine=False)
    np.testing.assert_allclose(large.eigenvalues, np.asarray(small.eigenvalues) / 4, rtol=1e-8)
    assert large.mask_area == pytest.approx(4 * small.mask_area, rel=1e-12)


def test_inscribed_square_has_the_larger_ground_state():
    half = 1 / math.sqrt(2)
    square = np.array([[-half, -half], [half, -half], [half, half], [-half, half]])
    disc = solve_domain(identity_map(), 0.05, count=1)
    inscribed = solve_domain(square, 0.05, count=1)
    assert inscribed.estimates[0] > disc.estimates[0]
    assert inscribed.estimates[0] == pytest.approx(math.pi**2, rel=1e-2)


@pytest.mark.parametrize(
    ("polygon", "exact"),
    [
        (SQUARE, 2.0),
        (np.array([[0.0, 0.0], [3.0, 0.0], [1.5, 1.5 * math.sqrt(3)]]), 16 * math.pi**2 / 27),
    ],
)
def test_ground_state_respects_faber_krahn(polygon, exact):
    result = solve_domain(polygon, 0.05, count=1)
    assert result.estimates[0] == pytest.approx(exact, rel=2e-2)
    assert result.estimates[0] * result.mask_area >= math.pi * DISC.lambda1_disc


def test_square_eigenvalue_converges_at_second_order():
    spacings, errors = [], []
    for interior in (9, 19, 39):
        inside = np.zeros((interior + 2, interior + 2), dtype=bool)
        inside[1:-1, 1:-1] = True
        h = math.pi / (interior + 1)
        value = smallest_eigenpairs(assemble_laplacian(GridMask.from_inside(h, (0.0, 0.0), inside)), 1).values[0]
        assert value == pytest.approx(8 / h**2 * math.sin(h / 2) ** 2, rel=1e-9)
        spacings.append(h)
        errors.append(2.0 - value)
    order, _ = np.polyfit(np.log(spacings), np.log(errors), 1)
    assert order == pytest.approx(2.0, abs=2e-2)


def test_provenance_is_serialized():
    refined = solve_domain(SQUARE, math.pi / 10)
    coarse = solve_domain(SQUARE, math.pi / 10, refine=False)
    assert json.loads(refined.model_dump_json())["provenance"] == "finite-difference-5pt:ghost:richardson"
    assert coarse.provenance == "finite-difference-5pt:ghost:none"
    assert EigenResult.model_validate_json(refined.model_dump_json()) == refined


@pytest.mark.slow
def test_disc_ground_state_at_fine_spacing():
    result = solve_domain(identity_map(), 1 / 64, count=1)
    assert result.refined_eigenvalues[0] == pytest.approx(DISC.lambda1_disc, rel=1e-3)
    assert result.estimates[0] == pytest.approx(DISC.lambda1_disc, rel=1e-3)


@pytest.mark.slow
@pytest.mark.parametrize("n", [3, 4, 5, 6, 7, 8])
def test_epicycloid_sandwich_holds(n):
    phi = epicycloid_map(n)
    report = conformal_bounds(phi, math.inf)
    eigen = solve_domain(phi, 0.02)
    validation = validate_sandwich(report, eigen)
    assert validation.passed, [check for check in validation.checks if not check.passed]
    assert eigen.estimates[1] / eigen.estimates[0] <= 2.539 + 0.05


@pytest.mark.slow
@pytest.mark.parametrize("k", [3, 4, 5])
def test_section4_sandwich_holds(k):
    psi, t = section4_map(k)
    report = high_eigenvalue_report(psi, t, math.inf)
    assert report.containment.certified
    eigen = solve_domain(psi, 0.03)
    validation = validate_high_sandwich(report, eigen)
    assert validation.passed, [check for check in validation.checks if not check.passed]
