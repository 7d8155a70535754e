"""JSON payloads, CSV tables and terminal summaries of command reports."""

from __future__ import annotations

import json
import math
from pathlib import Path
import sys
from typing import Any

import polars as pl
from rich.console import Console
from rich.table import Table

from ..quasidisc import QuasidiscReport
from ..utils import JsonObject, format_alpha, write_json_file
from .types import BoundsCommandReport, CommandReport, ConstantsReport, RunConfig, SweepReport

SCHEMA = "sgb/1"


def report_payload(command: str, report: CommandReport) -> JsonObject:
    """Versioned JSON payload; infinities are encoded as strings."""
    return {"schema": SCHEMA, "command": command, "report": json.loads(report.model_dump_json())}


def _bound_row(report: BoundsCommandReport) -> dict[str, Any]:
    row: dict[str, Any] = {"map": report.map.label, "alpha": format_alpha(report.alpha), "deviation_l2": report.deviation_l2}
    if report.bounds is not None:
        for name in ("lambda1_upper", "lambda2_lower", "ratio_lower", "gap_lower", "fk_lower"):
            bound = getattr(report.bounds, name)
            row[name] = bound.value
            row[f"{name}_vacuous"] = bound.vacuous
        row["slack_log10"] = report.bounds.slack_log10
    if report.high is not None:
        row["t"] = report.high.containment.t
        row["containment_certified"] = report.high.containment.certified
        for bound in report.high.bounds:
            row[f"lambda{bound.k}_upper_scaled"] = bound.upper.value
            row[f"lambda{bound.k}_lower_scaled"] = bound.lower.value
    if report.eigen is not None:
        for k, value in enumerate(report.eigen.estimates, start=1):
            row[f"solver_lambda{k}"] = value
            row[f"solver_band{k}"] = report.eigen.margin(k)
    if report.validation is not None:
        row["sandwich_passed"] = report.validation.passed
    return row


def report_frame(report: CommandReport) -> pl.DataFrame:
    """Plot-ready table of a report, one row per parameter point."""
    match report:
        case ConstantsReport():
            rows = [
                {
                    "alpha": format_alpha(row.alpha),
                    "gamma_alpha": row.gamma_alpha.value,
                    "p_star": row.gamma_alpha.optimizer_argument,
                    "certificate": row.gamma_alpha.certificate,
                    "poincare_bound": row.poincare_bound.value,
                }
                for row in report.rows
            ]
            if not rows:
                rows = [{"lambda1_disc": report.disc.lambda1_disc, "lambda2_disc": report.disc.lambda2_disc, "lambda_star": report.disc.lambda_star}]
            return pl.DataFrame(rows)
        case BoundsCommandReport():
            return pl.DataFrame([_bound_row(report)])
        case QuasidiscReport():
            row: dict[str, Any] = {
                "K": report.params.K,
                "alpha_star": report.params.alpha_star,
                "feasible_excess_max": report.params.feasible_excess_max,
                "log10_m_alpha": report.m_alpha.value.log10_value,
                "alpha_excess_opt": report.m_alpha.alpha_excess_opt,
            }
            if report.bounds is not None:
                row |= {
                    "slack_log10": report.bounds.slack_log10,
                    "lambda2_lower_vacuous": report.bounds.lambda2_lower.vacuous,
                    "ratio_lower_vacuous": report.bounds.ratio_lower.vacuous,
                }
            return pl.DataFrame([row])
        case SweepReport():
            return pl.DataFrame([row.model_dump() for row in report.rows])
    raise TypeError(f"unsupported report type {type(report).__name__}")


def _cell(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.6g}" if math.isfinite(value) else str(value)
    return "" if value is None else str(value)


def render_table(title: str, frame: pl.DataFrame, console: Console | None = None) -> None:
    """Print a frame as a rich table."""
    console = console or Console()
    table = Table(title=title)
    for column in frame.columns:
        table.add_column(column)
    for row in frame.iter_rows():
        table.add_row(*(_cell(value) for value in row))
    console.print(table)


def meta_path(output: Path) -> Path:
    return output.with_name(f"{output.name}.meta.json")


def write_report(config: RunConfig, report: CommandReport, version: str) -> Path:
    """Write the payload in the configured format plus a `.meta.json` side file with run details."""
    if config.output is None:
        raise ValueError("write_report needs an output path")
    if config.format == "csv":
        config.output.parent.mkdir(parents=True, exist_ok=True)
        report_frame(report).write_csv(config.output)
    else:
        write_json_file(config.output, report_payload(config.command, report))
    write_json_file(
        meta_path(config.output),
        {"schema": SCHEMA, "argv": sys.argv[1:], "version": version, "run_config": json.loads(config.model_dump_json())},
    )
    return config.output
