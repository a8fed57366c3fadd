"""
Tests for the command line front end: argument parsing, exit codes, the commands and the
verification suites.
"""
import csv
import io
import json
from fractions import Fraction

import pytest

from src.cli import (
    Check, Command, ExitCode, OutputFormat, RunConfig, SUITES, compare_series, hurwitz_rows,
    main, parse_caps, parse_monomial, random_specs, run_check, suite_checks
)
from src.errors import (
    BudgetError, DomainError, PoleAtContent, SpecParseError, TruncationError, UnsupportedError
)
from src.symfunc import cauchy_kernel, make_key
from src.tau import load_spec


class TestParsing:
    def test_monomial(self):
        assert parse_monomial("t1_2^2 t0_1") == make_key({"t1": {2: 2}, "t0": {1: 1}})
        assert parse_monomial("t1_1*t1_1") == make_key({"t1": {1: 2}})
        assert parse_monomial("1") == ()
        assert parse_monomial("  ") == ()

    @pytest.mark.parametrize("text", ["x_1", "t1", "t1_0", "t1_2^"])
    def test_bad_monomial(self, text):
        with pytest.raises(SpecParseError):
            parse_monomial(text)

    def test_caps(self):
        assert parse_caps("4, 4,3") == (4, 4, 3)
        assert parse_caps("0,2") == (0, 2)
        with pytest.raises(SpecParseError):
            parse_caps("2,x")
        with pytest.raises(SpecParseError):
            parse_caps("2,-1")

    def test_enums(self):
        assert Command.from_char("hurwitz") is Command.HURWITZ
        assert OutputFormat.from_char("csv") is OutputFormat.CSV
        with pytest.raises(SpecParseError):
            OutputFormat.from_char("xml")

    def test_run_config_limits(self):
        with pytest.raises(SpecParseError):
            RunConfig(Command.EXPAND, jobs=0)
        with pytest.raises(SpecParseError):
            RunConfig(Command.EXPAND, jobs=1000)
        with pytest.raises(SpecParseError):
            RunConfig(Command.PLAN, size=0)

    @pytest.mark.parametrize("error, code", [
        (SpecParseError("x"), ExitCode.PARSE_ERROR),
        (PoleAtContent(0, -1), ExitCode.POLE),
        (TruncationError("x"), ExitCode.CAP),
        (DomainError("x"), ExitCode.MODE),
        (UnsupportedError("x"), ExitCode.MODE),
        (BudgetError("x"), ExitCode.MODE),
        (ValueError("x"), ExitCode.PARSE_ERROR),
    ])
    def test_exit_codes(self, error, code):
        assert ExitCode.for_error(error) is code


class TestCommands:
    def test_coeff(self, capsys):
        assert main(["coeff", "--spec", "hypergeometric_m0", "--monomial", "t1_1 t0_1"]) == 0
        assert capsys.readouterr().out == "1\n"

    def test_coeff_with_cap_override(self, capsys):
        # sum of r_lam chi_lam(3)^2 with r = 3, 3/4, 0 on (3), (2,1), (1,1,1)
        argv = ["coeff", "--spec", "hypergeometric_m0", "--caps", "3,3", "--monomial", "t1_3 t0_3"]
        assert main(argv) == 0
        assert capsys.readouterr().out == "15/4\n"

    def test_coeff_above_cap(self, capsys):
        assert main(["coeff", "--spec", "hypergeometric_m0", "--monomial", "t1_3"]) == ExitCode.CAP
        assert "exceeds cap" in capsys.readouterr().err

    def test_pole(self):
        assert main(["expand", "--spec", "pole_m0"]) == ExitCode.POLE

    def test_missing_spec(self):
        assert main(["expand"]) == ExitCode.PARSE_ERROR
        assert main(["expand", "--spec", "no_such_spec"]) == ExitCode.PARSE_ERROR
        assert main(["expand", "--spec", "hypergeometric_m0", "--caps", "2,x"]) == ExitCode.PARSE_ERROR

    def test_expand_json(self, capsys):
        assert main(["expand", "--spec", "hypergeometric_m0"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["spec"]["caps"] == [2, 2]
        assert len(data["schur_view"]) == 4

    def test_expand_csv_to_file(self, tmp_path):
        out = tmp_path / "reports" / "tau.csv"
        argv = ["expand", "--spec", "hypergeometric_m0", "--format", "csv", "--out", str(out)]
        assert main(argv) == 0
        rows = list(csv.reader(io.StringIO(out.read_text(encoding="utf-8"))))
        assert rows[0] == ["monomial", "coefficient"]
        assert ["t0_1*t1_1", "1"] in rows
        assert ["1", "1"] in rows

    def test_hurwitz(self, capsys):
        assert main(["hurwitz", "--spec", "hypergeometric_m0"]) == 0
        rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
        assert rows[0] == ["degree", "end_profile", "start_profile", "hurwitz"]
        assert ["1", "1", "1", "1"] in rows
        assert ["2", "2", "2", "1/2"] in rows

    def test_hurwitz_rows_are_connected(self):
        rows = hurwitz_rows(load_spec("hypergeometric_m0"))
        # (t1_1 t0_1)^2 / 2 is disconnected and cancels in log tau
        assert not any(row[1] == "1 1" and row[2] == "1 1" for row in rows)

    def test_hurwitz_needs_m0(self):
        assert main(["hurwitz", "--spec", "nested_m2"]) == ExitCode.MODE

    def test_plan_builder(self, capsys, tmp_path):
        out = tmp_path / "plan.json"
        assert main(["plan", "simpfs", "--size", "2", "--out", str(out)]) == 0
        assert "U unitary N=2" in capsys.readouterr().out
        assert json.loads(out.read_text(encoding="utf-8"))["nodes"][1]["kind"] == "complex"

    def test_plan_from_spec(self, capsys):
        assert main(["plan", "--spec", "simpfs_n2"]) == 0
        assert "U1 unitary N=2" in capsys.readouterr().out

    def test_plan_errors(self):
        assert main(["plan", "sideways"]) == ExitCode.PARSE_ERROR
        assert main(["plan"]) == ExitCode.PARSE_ERROR

    def test_verify_weights(self, capsys):
        assert main(["verify", "--suite", "weights"]) == 0
        report = json.loads(capsys.readouterr().out)
        assert report["suite"] == "weights"
        assert report["passed"] is True
        assert [check["check"] for check in report["checks"]] == [
            "weights.schur_ratio", "weights.reciprocity", "weights.multiplicativity"
        ]

    @pytest.mark.slow
    def test_verify_corrupt_fails(self, capsys):
        assert main(["verify", "--suite", "hirota", "--corrupt", "--format", "csv"]) == ExitCode.VERIFY_FAILED
        rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
        passed = {row[0]: row[2] for row in rows[1:]}
        assert passed == {"hirota.vacuum": "true", "hirota.hypergeometric": "false", "hirota.nested": "false"}

    def test_verify_unknown_suite(self):
        assert main(["verify", "--suite", "nonsense"]) == ExitCode.PARSE_ERROR


class TestSuites:
    def test_compare_series(self):
        kernel = cauchy_kernel("t1", "t0", 2, 2)
        assert compare_series(kernel, kernel)[0]
        passed, detail = compare_series(kernel, kernel.scale_block("t1", 2))
        assert not passed
        assert detail == "coefficient of t0_1*t1_1: 1 != 2"

    def test_suite_checks(self):
        assert len(suite_checks("all")) == sum(len(checks) for checks in SUITES.values())
        assert [check.name for check in suite_checks("hirota")][0] == "hirota.vacuum"
        with pytest.raises(SpecParseError):
            suite_checks("nonsense")

    def test_random_specs(self):
        specs = random_specs(seed=3, count=6)
        assert specs == random_specs(seed=3, count=6)
        assert all(spec.m <= 2 and max(spec.caps) <= 3 for spec in specs)

    def test_run_check_reports_errors(self):
        def broken(corrupt: bool):
            raise DomainError("no such block")

        result = run_check(Check("demo.broken", "D=1", broken))
        assert not result.passed
        assert result.detail == "DomainError: no such block"
        assert result.to_row()[:3] == ["demo.broken", "D=1", "false"]

    def test_run_check_passes(self):
        result = run_check(Check("demo.ok", "D=0", lambda corrupt: (True, "fine")))
        assert result.passed
        assert result.to_json()["detail"] == "fine"
        assert Fraction(result.to_row()[3]) >= 0

    @pytest.mark.slow
    @pytest.mark.parametrize("check", suite_checks("all"), ids=lambda check: check.name)
    def test_every_check_passes(self, check):
        result = run_check(check)
        assert result.passed, result.detail
