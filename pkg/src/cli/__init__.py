"""
CLI module.

This module provides the batch front end:
    - RunConfig and its parsers (parse_monomial, parse_caps), ExitCode.
    - The verification suites and run_suite.
    - The expand / coeff / verify / hurwitz / plan commands and `main`.
"""
from .run_config import Command, OutputFormat, ExitCode, RunConfig, parse_monomial, parse_caps
from .verify_suites import (
    Check, CheckResult, REPORT_COLUMNS, SUITES, compare_series, random_specs,
    suite_checks, run_check, run_suite
)
from .commands import (
    PLAN_BUILDERS, cmd_expand, cmd_coeff, cmd_verify, cmd_hurwitz, cmd_plan, hurwitz_rows,
    run, build_parser, config_from_args, main
)


__all__ = [
    "Command",
    "OutputFormat",
    "ExitCode",
    "RunConfig",
    "parse_monomial",
    "parse_caps",
    "Check",
    "CheckResult",
    "REPORT_COLUMNS",
    "SUITES",
    "compare_series",
    "random_specs",
    "suite_checks",
    "run_check",
    "run_suite",
    "PLAN_BUILDERS",
    "cmd_expand",
    "cmd_coeff",
    "cmd_verify",
    "cmd_hurwitz",
    "cmd_plan",
    "hurwitz_rows",
    "run",
    "build_parser",
    "config_from_args",
    "main",
]
