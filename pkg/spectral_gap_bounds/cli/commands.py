"""Command implementations behind the sgb subcommands."""

from __future__ import annotations

from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
import logging
import math
from pathlib import Path

from ..bounds import conformal_bounds, high_eigenvalue_report, validate_high_sandwich, validate_sandwich
from ..config import NumericsConfig, default_numerics_config
from ..confmap import (
    PolynomialConformalMap,
    deviation_norm_l2,
    epicycloid_map,
    inscribed_radius,
    load_map,
    modulus_deviation_l2,
    normalize_area,
    section4_map,
)
from ..constants import disc_constants, disc_traces, exponent_r, gamma_alpha, poincare_constant_bound
from ..eigensolver import EigenResult, solve_domain
from ..errors import DomainError
from ..quasidisc import QuasidiscReport, quasidisc_report
from .types import BoundsCommandReport, ConstantsReport, ConstantsRow, Family, SweepReport, SweepRow

logger = logging.getLogger(__name__)

SOLVER_MODES = 3
DEFAULT_H = 0.02


def cmd_constants(alphas: Sequence[float], numerics: NumericsConfig | None = None) -> ConstantsReport:
    """γ_α, its minimizing p and the A_{r,2}(𝔻) bound for each α, plus the disc constants."""
    numerics = numerics or default_numerics_config()
    disc = disc_constants()
    rows = [
        ConstantsRow(
            alpha=alpha,
            gamma_alpha=gamma_alpha(alpha, numerics.optimizer),
            poincare_bound=poincare_constant_bound(exponent_r(alpha), numerics.optimizer),
        )
        for alpha in alphas
    ]
    logger.info("[CONSTANTS] alphas=%s", list(alphas))
    return ConstantsReport(disc=disc, disc_traces=disc_traces(disc), rows=rows)


def _family_map(family: Family, parameter: int) -> tuple[PolynomialConformalMap, float | None]:
    if family == "epicycloid":
        return epicycloid_map(parameter), None
    return section4_map(parameter)


def _solve(phi: PolynomialConformalMap, h: float | None, numerics: NumericsConfig) -> EigenResult:
    return solve_domain(phi, h or DEFAULT_H, count=SOLVER_MODES, refine=True, config=numerics.solver)


def cmd_bounds(
    family: Family | None,
    parameter: int | None,
    alpha: float,
    *,
    with_solver: bool = False,
    h: float | None = None,
    map_file: Path | None = None,
    numerics: NumericsConfig | None = None,
) -> BoundsCommandReport:
    """Conformal bounds of an epicycloid, the high-eigenvalue sandwich of a section-4 map, or bounds of a map file.

    Map files are rescaled to area π and use the numeric inradius.
    """
    numerics = numerics or default_numerics_config()
    if map_file is not None:
        phi = normalize_area(load_map(map_file))
        report = BoundsCommandReport(
            family="custom",
            map=phi,
            alpha=alpha,
            deviation_l2=deviation_norm_l2(phi),
            modulus_deviation_l2=modulus_deviation_l2(phi, config=numerics.quadrature),
            bounds=conformal_bounds(phi, alpha, rho_mode="numeric", numerics=numerics),
        )
    elif family is None or parameter is None:
        raise DomainError("bounds needs --family with --n/--k, or --map-file")
    elif family == "epicycloid":
        phi, _ = _family_map(family, parameter)
        report = BoundsCommandReport(
            family=family,
            map=phi,
            alpha=alpha,
            deviation_l2=deviation_norm_l2(phi),
            modulus_deviation_l2=modulus_deviation_l2(phi, config=numerics.quadrature),
            bounds=conformal_bounds(phi, alpha, rho_mode="formula", numerics=numerics),
        )
    else:
        phi, t = _family_map(family, parameter)
        report = BoundsCommandReport(
            family=family,
            map=phi,
            alpha=alpha,
            deviation_l2=deviation_norm_l2(phi),
            high=high_eigenvalue_report(phi, t, alpha, numerics=numerics),
        )
    if not with_solver:
        return report

    eigen = _solve(report.map, h, numerics)
    if report.bounds is not None:
        validation = validate_sandwich(report.bounds, eigen)
    else:
        validation = validate_high_sandwich(report.high, eigen)
    if not validation.passed:
        logger.warning("[BOUNDS] sandwich failed map=%s checks=%s", report.map.label, [check.name for check in validation.checks if not check.passed])
    return report.model_copy(update={"eigen": eigen, "validation": validation})


def cmd_quasidisc(
    K: float,
    area: float = math.pi,
    *,
    witness_n: int = 5,
    rho: float | None = None,
    deviation_l2: float | None = None,
    numerics: NumericsConfig | None = None,
) -> QuasidiscReport:
    """log10 M_α(K), the feasible exponent range and the quasidisc bounds.

    ρ and ‖φ′−1‖₂ default to those of the epicycloid `witness_n`.
    """
    numerics = numerics or default_numerics_config()
    witness = epicycloid_map(witness_n)
    rho = inscribed_radius(witness, "formula") if rho is None else rho
    deviation_l2 = deviation_norm_l2(witness) if deviation_l2 is None else deviation_l2
    return quasidisc_report(K, rho, deviation_l2, area, numerics.optimizer)


def _sweep_point(family: Family, parameter: int, alpha: float, with_solver: bool, h: float | None, numerics: NumericsConfig) -> SweepRow:
    report = cmd_bounds(family, parameter, alpha, with_solver=with_solver, h=h, numerics=numerics)
    solver_columns: dict[str, float | bool | None] = {}
    if report.eigen is not None:
        solver_columns = {
            "lambda1": report.eigen.estimates[0],
            "lambda2": report.eigen.estimates[1],
            "band1": report.eigen.margin(1),
            "band2": report.eigen.margin(2),
            "sandwich_passed": report.validation.passed if report.validation is not None else None,
        }
    solver_tag = f"+{report.eigen.provenance}" if report.eigen is not None else ""
    if report.bounds is not None:
        bounds = report.bounds
        return SweepRow(
            parameter=parameter,
            variation=bounds.inputs.variation,
            slack=10**bounds.slack_log10,
            lambda1_upper=bounds.lambda1_upper.value,
            lambda2_lower=bounds.lambda2_lower.value,
            ratio_lower=bounds.ratio_lower.value,
            gap_lower=bounds.gap_lower.value,
            provenance=f"conformal-sandwich{solver_tag}",
            **solver_columns,
        )
    high = report.high
    first, second = high.bounds[0], high.bounds[1]
    return SweepRow(
        parameter=parameter,
        variation=high.variation,
        slack=first.upper.value / high.containment.t**2 - first.lower.value,
        lambda1_upper=first.upper.value,
        lambda2_lower=second.lower.value,
        ratio_lower=high.ratios[0].lower.value,
        gap_lower=second.lower.value - first.upper.value,
        t=high.containment.t,
        containment_certified=high.containment.certified,
        provenance=f"scaled-disc-sandwich{solver_tag}",
        **solver_columns,
    )


def cmd_sweep(
    family: Family,
    parameters: Sequence[int],
    alpha: float,
    *,
    with_solver: bool = False,
    h: float | None = None,
    workers: int = 1,
    numerics: NumericsConfig | None = None,
) -> SweepReport:
    """One row per parameter value, ordered by parameter whatever the pool finishes first."""
    if not parameters:
        raise DomainError("sweep needs at least one parameter value")
    numerics = numerics or default_numerics_config()
    ordered = sorted(set(parameters))
    with ThreadPoolExecutor(max_workers=min(workers, len(ordered))) as executor:
        rows = list(executor.map(lambda parameter: _sweep_point(family, parameter, alpha, with_solver, h, numerics), ordered))
    logger.info("[SWEEP] family=%s points=%s workers=%s", family, len(rows), workers)
    return SweepReport(family=family, alpha=alpha, rows=rows)
