"""The sgb command line: argument parsing, logging setup and exit codes."""

from __future__ import annotations

import argparse
from collections.abc import Sequence
import logging
import math
from pathlib import Path

from rich.console import Console
from rich.logging import RichHandler

from .._version import __version__
from ..config import load_numerics_config
from ..errors import InfeasibleConstantError, SolverConvergenceError
from ..quasidisc import QuasidiscReport
from ..utils import parse_alpha
from .commands import cmd_bounds, cmd_constants, cmd_quasidisc, cmd_sweep
from .output import render_table, report_frame, write_report
from .types import BoundsCommandReport, CommandReport, RunConfig, SweepReport

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3
EXIT_SOLVER = 4


class UsageError(Exception):
    """Raised by the parser instead of exiting, so main() owns every exit code."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def _alpha(value: str) -> float:
    try:
        alpha = parse_alpha(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    if not alpha > 2:
        raise argparse.ArgumentTypeError(f"alpha must exceed 2, got {value!r}")
    return alpha


def _range(value: str) -> tuple[int, ...]:
    """Parse `3..50` or `3,5,8` into parameter values."""
    try:
        if ".." in value:
            start, stop = (int(part) for part in value.split("..", 1))
            return tuple(range(start, stop + 1))
        return tuple(int(part) for part in value.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a range like 3..50 or a list like 3,5,8, got {value!r}") from exc


def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--output", type=Path, help="Write the report here; a .meta.json side file records the run")
    parser.add_argument("--format", choices=["json", "csv"], default="json")
    parser.add_argument("--strict", action="store_true", help="Exit 3 when a requested bound is vacuous or a constant infeasible")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sgb", description="Conformal spectral-gap bounds with a finite-difference reference solver.")
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    constants = subparsers.add_parser("constants", help="γ_α, A_{r,2}(𝔻) and the disc spectrum")
    constants.add_argument("--alpha", type=_alpha, action="append", default=[], help="Regularity exponent > 2 or 'inf'; repeatable")
    _add_output(constants)

    bounds = subparsers.add_parser("bounds", help="Eigenvalue bounds of one map image")
    bounds.add_argument("--family", choices=["epicycloid", "section4"])
    bounds.add_argument("--n", type=int, help="Epicycloid parameter n >= 2")
    bounds.add_argument("--k", type=int, help="Section-4 parameter k >= 2")
    bounds.add_argument("--map-file", type=Path, help="JSON map file; rescaled to area π")
    bounds.add_argument("--alpha", type=_alpha, default=math.inf)
    bounds.add_argument("--with-solver", action="store_true")
    bounds.add_argument("--h", type=float, help="Coarse grid spacing of the solver")
    _add_output(bounds)

    quasidisc = subparsers.add_parser("quasidisc", help="M_α(K) and the quasidisc bounds")
    quasidisc.add_argument("--K", type=float, required=True)
    quasidisc.add_argument("--area", type=float, default=math.pi)
    quasidisc.add_argument("--witness-n", type=int, default=5, help="Epicycloid supplying ρ and ‖φ′−1‖₂")
    quasidisc.add_argument("--rho", type=float)
    quasidisc.add_argument("--deviation", type=float, help="‖φ′−1‖₂ override")
    _add_output(quasidisc)

    sweep = subparsers.add_parser("sweep", help="Bounds along a family parameter range")
    sweep.add_argument("--family", choices=["epicycloid", "section4"], default="epicycloid")
    sweep.add_argument("--range", dest="parameters", type=_range, required=True, help="e.g. 3..50 or 3,5,8")
    sweep.add_argument("--alpha", type=_alpha, default=math.inf)
    sweep.add_argument("--with-solver", action="store_true")
    sweep.add_argument("--h", type=float)
    sweep.add_argument("--workers", type=int, default=1)
    _add_output(sweep)
    return parser


def configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


def _run_config(args: argparse.Namespace) -> RunConfig:
    family = getattr(args, "family", None)
    parameter = getattr(args, "n", None) if family == "epicycloid" else getattr(args, "k", None)
    alpha = getattr(args, "alpha", None)
    return RunConfig(
        command=args.command,
        family=family,
        parameter=parameter,
        parameters=getattr(args, "parameters", ()),
        K=getattr(args, "K", None),
        alphas=tuple(alpha) if isinstance(alpha, list) else (() if alpha is None else (alpha,)),
        area=getattr(args, "area", None),
        witness_n=getattr(args, "witness_n", 5),
        rho=getattr(args, "rho", None),
        deviation_l2=getattr(args, "deviation", None),
        h=getattr(args, "h", None),
        with_solver=getattr(args, "with_solver", False),
        map_file=getattr(args, "map_file", None),
        output=args.output,
        format=args.format,
        strict=args.strict,
        workers=getattr(args, "workers", 1),
    )


def run(config: RunConfig) -> CommandReport:
    """Dispatch one parsed command."""
    numerics = load_numerics_config()
    match config.command:
        case "constants":
            return cmd_constants(config.alphas, numerics)
        case "bounds":
            return cmd_bounds(config.family, config.parameter, config.alphas[0], with_solver=config.with_solver, h=config.h, map_file=config.map_file, numerics=numerics)
        case "quasidisc":
            return cmd_quasidisc(config.K, config.area, witness_n=config.witness_n, rho=config.rho, deviation_l2=config.deviation_l2, numerics=numerics)
        case "sweep":
            return cmd_sweep(config.family, config.parameters, config.alphas[0], with_solver=config.with_solver, h=config.h, workers=config.workers, numerics=numerics)
    raise UsageError(f"unknown command {config.command!r}")


def vacuous_bounds(report: CommandReport) -> list[str]:
    """Names of requested bounds that carry no information."""
    match report:
        case BoundsCommandReport():
            return report.vacuous
        case QuasidiscReport() if report.bounds is not None:
            return [name for name, valid in report.bounds.validity_flags.items() if not valid]
        case SweepReport():
            return [f"{name}[{row.parameter}]" for row in report.rows for name in ("lambda2_lower", "ratio_lower", "gap_lower") if not getattr(row, name) > 0]
    return []


def main(argv: Sequence[str] | None = None) -> int:
    """Run the sgb command-line entrypoint and return its exit code."""
    console = Console()
    try:
        args = build_parser().parse_args(argv)
        configure_logging(args.verbose)
        config = _run_config(args)
        report = run(config)
    except (UsageError, ValueError) as exc:
        if isinstance(exc, InfeasibleConstantError):
            logger.error("[CLI] %s", exc)
            return EXIT_INFEASIBLE
        Console(stderr=True).print(f"sgb: error: {exc}", markup=False)
        return EXIT_USAGE
    except SolverConvergenceError as exc:
        logger.error("[CLI] solver did not converge: %s diagnostics=%s", exc, exc.diagnostics)
        return EXIT_SOLVER

    render_table(f"sgb {config.command}", report_frame(report), console)
    if config.output is not None:
        path = write_report(config, report, __version__)
        logger.info("[CLI] Wrote %s", path)
    vacuous = vacuous_bounds(report)
    if vacuous:
        logger.info("[CLI] vacuous bounds: %s", vacuous)
        if config.strict:
            return EXIT_INFEASIBLE
    return EXIT_OK
