"""
Command line front end.

Usage:
    python -m src.main expand --spec hypergeometric_m0.json --caps 2,2
    python -m src.main coeff --spec fully_simple.json --monomial t2_2
    python -m src.main verify --suite hirota --corrupt
    python -m src.main hurwitz --spec gexp_m0.json --format csv
    python -m src.main plan simpfs --size 2
"""
import argparse
import csv
import io
import json
import logging
import os
import sys
from fractions import Fraction
from typing import Callable

from src.constant import RESULTS_PATH
from src.symfunc import Coeff, key_to_str, log_series
from src.tau import NestedSpec, coefficient_of, expand_tau, load_spec
from src.errors import SpecParseError, UnsupportedError
from src.wick import MatrixChainPlan, chain3_plan, dvapl_plan, plan_from_spec, simpfs_plan
from .run_config import (
    Command, ExitCode, OutputFormat, RunConfig, parse_caps, parse_monomial
)
from .verify_suites import REPORT_COLUMNS, SUITES, run_suite

logger = logging.getLogger(__name__)

PLAN_BUILDERS: dict[str, Callable[[int], MatrixChainPlan]] = {
    "simpfs": simpfs_plan,
    "chain3": chain3_plan,
    "dvapl": dvapl_plan,
}


def _emit(text: str, config: RunConfig) -> None:
    """Write to --out, or to standard output. A bare file name lands in RESULTS_PATH."""
    if config.out_path is None:
        sys.stdout.write(text)
        return
    path = config.out_path
    if not os.path.dirname(path):
        path = os.path.join(RESULTS_PATH, path)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as file:
        file.write(text)
    logger.info("Wrote %s", path)


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _load(config: RunConfig) -> NestedSpec:
    if config.spec_path is None:
        raise SpecParseError(f"{config.command.value} needs --spec")
    spec = load_spec(config.spec_path)
    if config.caps is not None:
        spec = spec.with_caps(config.caps)
    return spec


def cmd_expand(config: RunConfig) -> ExitCode:
    """Expand the spec and write the TauSeries (json) or (monomial, coefficient) rows (csv)."""
    tau = expand_tau(_load(config), jobs=config.jobs)
    if config.output_format is OutputFormat.CSV:
        rows = [[key_to_str(key), str(value)] for key, value in tau.series.items()]
        _emit(_csv_text(["monomial", "coefficient"], rows), config)
    else:
        _emit(json.dumps(tau.to_json(), indent=2) + "\n", config)
    return ExitCode.OK


def cmd_coeff(config: RunConfig) -> ExitCode:
    """Print one coefficient as "p/q"."""
    value = coefficient_of(_load(config), config.monomial)
    _emit(f"{value}\n", config)
    return ExitCode.OK


def cmd_verify(config: RunConfig) -> ExitCode:
    """Run a suite and report every check; exit 1 when any check fails."""
    results = run_suite(config.suite, jobs=config.jobs, corrupt=config.corrupt)
    if config.output_format is OutputFormat.CSV:
        _emit(_csv_text(list(REPORT_COLUMNS), [result.to_row() for result in results]), config)
    else:
        report = {
            "suite": config.suite,
            "passed": all(result.passed for result in results),
            "checks": [result.to_json() for result in results],
        }
        _emit(json.dumps(report, indent=2) + "\n", config)
    failed = [result.check for result in results if not result.passed]
    if failed:
        logger.warning("Failed checks: %s", ", ".join(failed))
        return ExitCode.VERIFY_FAILED
    return ExitCode.OK


def _p_variable_factor(exps) -> int:
    factor = 1
    for k, a in exps:
        factor *= k ** a
    return factor


def _profile(exps) -> str:
    parts = sorted((k for k, a in exps for _ in range(a)), reverse=True)
    return " ".join(str(k) for k in parts)


def hurwitz_rows(spec: NestedSpec, jobs: int = 1) -> list[list[str]]:
    """
    Rows (degree, end_profile, start_profile, hurwitz) of log tau in power sums.

    With t_k = p_k / k, the coefficient of p_mu(t_1) p_nu(t_0) is the t-coefficient divided
    by prod_i mu_i prod_j nu_j.

    Raises:
        UnsupportedError: The spec has middle blocks.
    """
    if spec.m != 0:
        raise UnsupportedError(f"Hurwitz numbers are tabulated for m = 0 specs, got m = {spec.m}")
    connected = log_series(expand_tau(spec, jobs=jobs).series)
    rows = []
    for key, value in connected.items():
        per_block = dict(key)
        end, start = per_block.get("t1", ()), per_block.get("t0", ())
        hurwitz: Coeff = value * Fraction(1, _p_variable_factor(end) * _p_variable_factor(start))
        degree = sum(k * a for k, a in end) or sum(k * a for k, a in start)
        rows.append([str(degree), _profile(end), _profile(start), str(hurwitz)])
    return rows


def cmd_hurwitz(config: RunConfig) -> ExitCode:
    """CSV of connected weighted Hurwitz numbers of an m = 0 spec."""
    rows = hurwitz_rows(_load(config), jobs=config.jobs)
    _emit(_csv_text(["degree", "end_profile", "start_profile", "hurwitz"], rows), config)
    return ExitCode.OK


def cmd_plan(config: RunConfig) -> ExitCode:
    """Pretty-print a chain matrix model; write its JSON to --out when given."""
    if config.spec_path is not None:
        plan = plan_from_spec(_load(config), config.size)
    elif config.plan_name in PLAN_BUILDERS:
        plan = PLAN_BUILDERS[config.plan_name](config.size)
    else:
        raise SpecParseError(
            f"plan needs --spec or a builder name ({', '.join(PLAN_BUILDERS)}), got {config.plan_name!r}"
        )
    sys.stdout.write(plan.pretty() + "\n")
    if config.out_path is not None:
        _emit(json.dumps(plan.to_json(), indent=2) + "\n", config)
    return ExitCode.OK


COMMANDS: dict[Command, Callable[[RunConfig], ExitCode]] = {
    Command.EXPAND: cmd_expand,
    Command.COEFF: cmd_coeff,
    Command.VERIFY: cmd_verify,
    Command.HURWITZ: cmd_hurwitz,
    Command.PLAN: cmd_plan,
}


def run(config: RunConfig) -> ExitCode:
    """Dispatch a command; library errors map to their exit codes."""
    try:
        return COMMANDS[config.command](config)
    except ValueError as exc:
        code = ExitCode.for_error(exc)
        logger.error("%s: %s", type(exc).__name__, exc)
        sys.stderr.write(f"error: {exc}\n")
        return code


def build_parser() -> argparse.ArgumentParser:
    """The argument parser with one subparser per command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", dest="spec_path", help="Spec JSON, a name under assets/specs or a path")
    common.add_argument("--caps", help="Cap override D_0,...,D_{m+1}, e.g. 4,4,3")
    common.add_argument(
        "--out", dest="out_path", help="Output file; a bare name goes under results/ (default: standard output)"
    )
    common.add_argument("--format", dest="output_format", default="json", help="json or csv (default: json)")
    common.add_argument("--jobs", type=int, default=1, help="Worker threads (default: 1)")
    common.add_argument("-v", "--verbose", action="store_true", help="Log progress to standard error")

    parser = argparse.ArgumentParser(
        description="Exact coefficients of nested hypergeometric tau-functions.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    subparsers.add_parser("expand", parents=[common], help="Expand a spec to its caps")

    p_coeff = subparsers.add_parser("coeff", parents=[common], help="One coefficient of a spec")
    p_coeff.add_argument("--monomial", default="1", help='Monomial such as "t1_2^2 t0_1" (default: 1)')

    p_verify = subparsers.add_parser("verify", parents=[common], help="Run a verification suite")
    p_verify.add_argument("--suite", default="all", help=f"One of {', '.join(SUITES)} or all (default: all)")
    p_verify.add_argument("--corrupt", action="store_true", help="Perturb the checks that support it")

    subparsers.add_parser("hurwitz", parents=[common], help="Connected weighted Hurwitz numbers (m = 0)")

    p_plan = subparsers.add_parser("plan", parents=[common], help="Chain matrix model of a spec or builder")
    p_plan.add_argument("builder", nargs="?", help=f"Builder name: {', '.join(PLAN_BUILDERS)}")
    p_plan.add_argument("--size", type=int, default=2, help="Matrix size for the builders (default: 2)")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """
    Resolve parsed arguments into a RunConfig.

    Raises:
        SpecParseError: A flag value does not parse.
    """
    command = Command.from_char(args.command)
    output_format = OutputFormat.from_char(args.output_format)
    if command is Command.HURWITZ:
        output_format = OutputFormat.CSV
    return RunConfig(
        command=command,
        spec_path=args.spec_path,
        caps=parse_caps(args.caps) if args.caps else None,
        out_path=args.out_path,
        output_format=output_format,
        suite=getattr(args, "suite", "all"),
        jobs=args.jobs,
        monomial=parse_monomial(getattr(args, "monomial", "1")),
        corrupt=getattr(args, "corrupt", False),
        plan_name=getattr(args, "builder", None),
        size=getattr(args, "size", 2),
    )


def main(argv: list[str] | None = None) -> int:
    """Entry point; returns the process exit code."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(asctime)s | %(levelname)s | %(name)s | %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )
    try:
        config = config_from_args(args)
    except SpecParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return int(ExitCode.PARSE_ERROR)
    return int(run(config))


if __name__ == "__main__":
    sys.exit(main())
