import json
import math

import pytest

from spectral_gap_bounds.bounds import (
    BoundInputs,
    BoundReport,
    DiscContainment,
    bounds_from_slack,
    build_bound_report,
    conformal_bounds,
    epicycloid_C,
    epicycloid_rho,
    faber_krahn_lower,
    high_eigenvalue_bounds,
    high_eigenvalue_report,
    high_ratio_lower,
    inscribed_disc_upper,
    isoperimetric_perimeter,
    payne_weinberger_upper,
    sandwich_slack,
    stability_bound,
    validate_high_sandwich,
    validate_sandwich,
)
from spectral_gap_bounds.constants import disc_constants, gamma_alpha
from spectral_gap_bounds.confmap import area, epicycloid_map, from_complex, identity_map, normalize_area, section4_map
from spectral_gap_bounds.eigensolver import EigenResult
from spectral_gap_bounds.errors import ContainmentError, DomainError

DISC = disc_constants()


def _inputs(variation: float, rho: float = 1.0) -> BoundInputs:
    return BoundInputs(rho=rho, alpha=math.inf, variation=variation, gamma_alpha_value=gamma_alpha(math.inf).value, area=math.pi)


def _eigen(*values: float, band: float = 1e-3) -> EigenResult:
    return EigenResult(
        label="fixture",
        h=0.05,
        boundary="ghost",
        nodes=1000,
        eigenvalues=values,
        residual_norms=(0.0,) * len(values),
        band=(band,) * len(values),
        mask_area=math.pi,
    )


def test_zero_variation_recovers_the_disc():
    report = build_bound_report(_inputs(0.0))
    assert report.lambda1_upper.value == DISC.lambda1_disc
    assert report.lambda2_lower.value == DISC.lambda2_disc
    assert report.ratio_lower.value == pytest.approx(DISC.lambda_star, rel=1e-15)
    assert report.gap_lower.value == pytest.approx(DISC.lambda2_disc - DISC.lambda1_disc)
    assert report.fk_lower.value == pytest.approx(DISC.lambda1_disc)
    assert all(report.validity_flags.values())
    assert report.slack_log10 == -math.inf


def test_slack_formulas():
    slack = 0.25
    sandwich = bounds_from_slack(slack)
    star_sq = DISC.lambda_star**2
    assert sandwich.lambda1_upper == DISC.lambda1_disc + slack
    assert sandwich.lambda2_lower == DISC.lambda2_disc - star_sq * slack
    assert sandwich.ratio_lower == sandwich.lambda2_lower / sandwich.lambda1_upper
    assert sandwich.gap_lower == pytest.approx(DISC.lambda2_disc - DISC.lambda1_disc - (star_sq + 1) * slack)


def test_infinite_slack_is_vacuous_not_nan():
    sandwich = bounds_from_slack(math.inf)
    assert sandwich.lambda1_upper == math.inf
    assert sandwich.lambda2_lower == -math.inf
    assert sandwich.ratio_lower == -(DISC.lambda_star**2)
    with pytest.raises(DomainError):
        bounds_from_slack(-1.0)


def test_sandwich_slack_needs_area_pi():
    inputs = BoundInputs(rho=0.5, alpha=4.0, variation=1.0, gamma_alpha_value=0.2, area=2 * math.pi)
    with pytest.raises(DomainError, match="area π"):
        sandwich_slack(inputs)


def test_rho_above_one_is_rejected_at_area_pi():
    with pytest.raises(ValueError, match="exceeds 1"):
        _inputs(0.1, rho=1.5)


def test_elementary_bounds():
    assert inscribed_disc_upper(0.5) == pytest.approx(4 * DISC.lambda1_disc)
    assert faber_krahn_lower(math.pi) == pytest.approx(DISC.lambda1_disc)
    assert payne_weinberger_upper(math.pi, 2 * math.pi) == pytest.approx(DISC.lambda1_disc)
    assert payne_weinberger_upper(math.pi, 7.0) > DISC.lambda1_disc
    assert payne_weinberger_upper(math.pi, math.inf) == math.inf
    with pytest.raises(DomainError, match="isoperimetric"):
        payne_weinberger_upper(math.pi, 6.0)
    assert stability_bound(2, 4.0, 0.5, 3.0) == 6.0
    with pytest.raises(DomainError):
        stability_bound(0, 1.0, 1.0, 1.0)


@pytest.mark.parametrize("n", [3, 5, 20])
def test_epicycloid_pipeline_matches_closed_form(n):
    report = conformal_bounds(epicycloid_map(n), math.inf, rho_mode="formula")
    assert report.inputs.rho == epicycloid_rho(n)
    assert 10**report.slack_log10 == pytest.approx(epicycloid_C(n), rel=1e-8)
    assert report.lambda1_upper.value == pytest.approx(DISC.lambda1_disc + epicycloid_C(n), rel=1e-10)
    assert report.pw_upper is not None
    assert report.pw_upper.value > DISC.lambda1_disc
    assert [trace.formula_id for trace in report.constants_used][:3] == ["disc-j01-squared", "disc-j11-squared", "ppw-disc-ratio"]


def test_epicycloid_lower_bounds_are_vacuous_but_reported():
    report = conformal_bounds(epicycloid_map(50), math.inf)
    assert report.lambda2_lower.vacuous
    assert report.ratio_lower.vacuous
    assert report.lambda2_lower.value < 0
    assert epicycloid_C(50) == pytest.approx(5.0, rel=0.05)
    assert report.validity_flags["lambda1_upper"]


def test_disc_image_reproduces_the_disc_bounds():
    report = conformal_bounds(identity_map(), math.inf, rho_mode="numeric")
    assert report.inputs.variation == 0.0
    assert report.lambda1_upper.value == DISC.lambda1_disc
    assert report.ratio_lower.value == pytest.approx(DISC.lambda_star, rel=1e-15)
    assert report.pw_upper.value >= DISC.lambda1_disc
    assert report.pw_upper.value == pytest.approx(DISC.lambda1_disc, rel=1e-5)


@pytest.mark.parametrize("eps", [1e-4, 1e-2])
def test_near_disc_images_keep_every_bound_informative(eps):
    phi = normalize_area(from_complex(f"z+{eps}z^2", [0, 1, eps]))
    report = conformal_bounds(phi, math.inf, rho_mode="numeric")
    assert all(report.validity_flags.values())
    assert report.lambda1_upper.value > DISC.lambda1_disc
    assert report.pw_upper.value >= report.fk_lower.value
    assert report.ratio_lower.value < DISC.lambda_star


@pytest.mark.parametrize("samples", [64, 4096])
def test_isoperimetric_perimeter_never_beats_the_disc(samples):
    for phi in (identity_map(), epicycloid_map(4)):
        value = isoperimetric_perimeter(phi, area(phi), samples)
        assert value**2 >= 4 * math.pi * area(phi)
    assert isoperimetric_perimeter(identity_map(), math.pi, 4096) == pytest.approx(2 * math.pi, rel=1e-6)


def test_validity_flags_are_serialized():
    report = build_bound_report(_inputs(0.5))
    payload = json.loads(report.model_dump_json())
    assert payload["validity_flags"] == report.validity_flags
    assert payload["validity_flags"]["lambda1_upper"] is True
    assert BoundReport.model_validate_json(report.model_dump_json()) == report


def test_asymptotic_sharpness_along_the_family():
    uppers, ratios = [], []
    for n in (5, 10, 20, 50):
        slack = epicycloid_C(n)
        sandwich = bounds_from_slack(slack)
        uppers.append(sandwich.lambda1_upper)
        ratios.append(sandwich.ratio_lower)
    assert uppers == sorted(uppers, reverse=True)
    assert ratios == sorted(ratios)
    assert (DISC.lambda_star - ratios[0]) / (DISC.lambda_star - ratios[-1]) > 1.5


def test_validate_sandwich_with_disc_eigenvalues():
    report = build_bound_report(_inputs(0.0))
    validation = validate_sandwich(report, _eigen(DISC.lambda1_disc, DISC.lambda2_disc, DISC.lambda2_disc))
    assert validation.passed
    assert {check.name for check in validation.checks} >= {"lambda1_upper", "ppw_ratio_upper", "faber_krahn_lower", "inscribed_disc_upper"}


def test_validate_sandwich_flags_a_violation():
    report = build_bound_report(_inputs(0.0))
    validation = validate_sandwich(report, _eigen(7.0, 15.0, 15.5))
    assert not validation.passed
    failed = {check.name for check in validation.checks if not check.passed}
    assert "lambda1_upper" in failed
    with pytest.raises(DomainError):
        validate_sandwich(report, _eigen(7.0))


def test_vacuous_lower_bounds_are_skipped_in_validation():
    report = build_bound_report(_inputs(50.0, rho=0.9))
    assert report.lambda2_lower.vacuous
    validation = validate_sandwich(report, _eigen(6.0, 15.0, 15.0, band=1e-2))
    lower = next(check for check in validation.checks if check.name == "lambda2_lower")
    assert lower.skipped
    assert lower.passed


def test_high_eigenvalue_bounds_need_certified_containment():
    uncertified = DiscContainment(map_label="x", t=2.0, certified=False)
    with pytest.raises(ContainmentError):
        high_eigenvalue_bounds(1, uncertified, 0.2, 0.1)
    certified = DiscContainment(map_label="x", t=2.0, certified=True)
    lower, upper = high_eigenvalue_bounds(2, certified, 0.2, 0.0)
    assert lower == DISC.eigenvalue(2)
    assert upper == 4 * DISC.eigenvalue(2)
    assert high_ratio_lower(1, 2, certified, 0.2, 0.0) == pytest.approx(DISC.eigenvalue(2) / (4 * DISC.eigenvalue(1)))
    with pytest.raises(DomainError):
        high_ratio_lower(2, 2, certified, 0.2, 0.0)
    with pytest.raises(DomainError):
        high_eigenvalue_bounds(100, certified, 0.2, 0.0)


def test_section4_report():
    psi, t = section4_map(3)
    report = high_eigenvalue_report(psi, t, math.inf)
    assert report.containment.certified
    assert report.containment.t == pytest.approx(9 / 4)
    assert [bound.k for bound in report.bounds] == [1, 2, 3]
    first = report.bounds[0]
    assert first.upper.value == pytest.approx(t**2 * DISC.lambda1_disc)
    assert first.lower.vacuous

    validation = validate_high_sandwich(report, _eigen(10.0, 25.0, 25.0))
    assert validation.passed
    failing = validate_high_sandwich(report, _eigen(40.0, 60.0, 60.0))
    assert not failing.passed


def test_section4_report_refuses_uncertified_scale():
    psi, _ = section4_map(3)
    with pytest.raises(ContainmentError):
        high_eigenvalue_report(psi, 1.0, math.inf)
