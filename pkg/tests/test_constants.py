import math

import numpy as np
import pytest

from spectral_gap_bounds.config import OptimizerConfig
from spectral_gap_bounds.constants import (
    MAX_DISC_EIGENVALUES,
    ConstantTrace,
    composite_poincare,
    disc_constants,
    disc_spectrum,
    disc_traces,
    exponent_r,
    gamma_alpha,
    gamma_alpha_interval,
    j01_bessel_j1_squared,
    minimize_log_objective,
    poincare_constant_bound,
    poincare_objective,
    scan_nodes,
    talenti_constant,
)
from spectral_gap_bounds.errors import DomainError

J01_SQUARED = 5.783185962946784
J11_SQUARED = 14.681970642123893


def test_disc_constants():
    disc = disc_constants()
    assert disc.lambda1_disc == pytest.approx(J01_SQUARED, rel=1e-14)
    assert disc.lambda2_disc == pytest.approx(J11_SQUARED, rel=1e-14)
    assert disc.lambda_star == pytest.approx(2.5387, abs=1e-4)
    assert disc.lambda_star == disc.lambda2_disc / disc.lambda1_disc


def test_disc_spectrum_multiplicities():
    disc = disc_spectrum(6)
    assert disc.spectrum[0] == disc.lambda1_disc
    assert disc.spectrum[1] == disc.spectrum[2] == disc.lambda2_disc
    assert disc.spectrum[3] == disc.spectrum[4]
    assert disc.modes[3] == (2, 1)
    assert disc.modes[5] == (0, 2)
    assert disc.spectrum[5] == pytest.approx(5.520078110286311**2, rel=1e-12)


def test_disc_spectrum_is_complete_at_the_cap():
    disc = disc_spectrum(MAX_DISC_EIGENVALUES)
    assert len(disc.spectrum) == MAX_DISC_EIGENVALUES
    assert all(left <= right for left, right in zip(disc.spectrum, disc.spectrum[1:], strict=False))
    with pytest.raises(DomainError):
        disc_spectrum(MAX_DISC_EIGENVALUES + 1)


def test_eigenvalue_index():
    disc = disc_constants()
    assert disc.eigenvalue(1) == disc.lambda1_disc
    with pytest.raises(IndexError):
        disc.eigenvalue(0)


def test_payne_weinberger_weight():
    assert j01_bessel_j1_squared() == pytest.approx(0.2695141239419, rel=1e-8)


def test_disc_traces_are_closed_form():
    traces = disc_traces(disc_constants())
    assert [trace.formula_id for trace in traces] == ["disc-j01-squared", "disc-j11-squared", "ppw-disc-ratio"]
    assert all(trace.certificate == "closed_form" for trace in traces)


def test_exponent_r_and_interval():
    assert exponent_r(math.inf) == 4.0
    assert exponent_r(4.0) == pytest.approx(8.0)
    assert gamma_alpha_interval(math.inf) == (4.0 / 3.0, 2.0)
    assert gamma_alpha_interval(4.0)[0] == pytest.approx(1.6)
    with pytest.raises(DomainError):
        exponent_r(2.0)
    with pytest.raises(DomainError):
        gamma_alpha_interval(1.5)


def test_talenti_constant_domain():
    assert talenti_constant(1.5) > 0
    assert talenti_constant(2.5, n=3) > 0
    with pytest.raises(DomainError):
        talenti_constant(2.0)
    with pytest.raises(DomainError):
        talenti_constant(1.0)


@pytest.mark.parametrize(("p", "r"), [(1.2, 3.0), (1.5, 4.0), (1.9, 12.0)])
def test_composite_chain_matches_objective(p, r):
    assert composite_poincare(p, r) == pytest.approx(poincare_objective(p, r), rel=1e-12)


def test_gamma_infinity_sits_at_the_left_endpoint():
    trace = gamma_alpha(math.inf)
    assert trace.value == pytest.approx(0.179587, rel=1e-5)
    assert trace.certificate == "left_endpoint"
    assert trace.optimizer_argument == pytest.approx(4 / 3, abs=1e-6)
    assert trace.formula_id == "gamma-alpha-stability"


def test_poincare_bound_has_interior_minimum_at_r2():
    trace = poincare_constant_bound(2.0)
    assert trace.certificate == "interior"
    assert 1.0 < trace.optimizer_argument < 1.2


@pytest.mark.parametrize("alpha", [2.5, 3.0, 4.0, 8.0, 100.0, math.inf])
def test_gamma_alpha_is_squared_poincare_bound(alpha):
    gamma = gamma_alpha(alpha)
    poincare = poincare_constant_bound(exponent_r(alpha))
    assert poincare.value**2 == pytest.approx(gamma.value, rel=1e-10)
    lower, upper = gamma.interval
    assert lower < gamma.optimizer_argument < upper


def test_gamma_alpha_approaches_the_infinite_limit():
    assert gamma_alpha(1e6).value == pytest.approx(gamma_alpha(math.inf).value, rel=1e-4)


def test_gamma_alpha_decreases_toward_the_infinite_limit():
    limit = gamma_alpha(math.inf).value
    values = [gamma_alpha(alpha).value for alpha in (10.0, 30.0, 100.0, 300.0, 1e3, 3e3, 1e4)]
    assert all(later < earlier for earlier, later in zip(values, values[1:], strict=False))
    assert all(value > limit for value in values)
    assert values[-1] == pytest.approx(limit, rel=1e-3)


def test_minimizer_reports_interior_quadratic_minimum():
    infimum = minimize_log_objective(lambda x: (x - 0.3) ** 2, 0.0, 1.0)
    assert infimum.argument == pytest.approx(0.3, abs=1e-6)
    assert infimum.certificate == "interior"
    assert infimum.certified


def test_minimizer_clamps_to_the_open_interval():
    infimum = minimize_log_objective(lambda x: -x, 0.0, 1.0, OptimizerConfig(endpoint_clamp=1e-6))
    assert infimum.argument < 1.0
    assert infimum.certificate == "right_endpoint"
    with pytest.raises(ValueError, match="too narrow"):
        minimize_log_objective(lambda x: x, 1.0, 1.0)


def test_scan_nodes_cluster_at_both_ends():
    nodes = scan_nodes(0.0, 1.0, 400)
    assert nodes[0] == 0.0
    assert nodes[-1] == 1.0
    assert np.all(np.diff(nodes) > 0)
    assert nodes[1] < 1e-6
    assert 1.0 - nodes[-2] < 1e-6


def test_trace_argument_must_lie_inside_interval():
    with pytest.raises(ValueError, match="outside"):
        ConstantTrace(name="x", value=1.0, log10_value=0.0, optimizer_argument=2.0, interval=(0.0, 1.0), formula_id="f")
