"""Command-line front end: sgb constants | bounds | quasidisc | sweep."""

from .app import EXIT_INFEASIBLE, EXIT_OK, EXIT_SOLVER, EXIT_USAGE, build_parser, main, run, vacuous_bounds
from .commands import cmd_bounds, cmd_constants, cmd_quasidisc, cmd_sweep
from .output import SCHEMA, meta_path, render_table, report_frame, report_payload, write_report
from .types import BoundsCommandReport, ConstantsReport, ConstantsRow, RunConfig, SweepReport, SweepRow

__all__ = [
    "EXIT_INFEASIBLE",
    "EXIT_OK",
    "EXIT_SOLVER",
    "EXIT_USAGE",
    "SCHEMA",
    "BoundsCommandReport",
    "ConstantsReport",
    "ConstantsRow",
    "RunConfig",
    "SweepReport",
    "SweepRow",
    "build_parser",
    "cmd_bounds",
    "cmd_constants",
    "cmd_quasidisc",
    "cmd_sweep",
    "main",
    "meta_path",
    "render_table",
    "report_frame",
    "report_payload",
    "run",
    "vacuous_bounds",
    "write_report",
]
