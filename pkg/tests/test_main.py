"""
Tests for the command line entry point and report rendering.
"""

import io
import json
import sys

import pytest
import structlog

from src.config import get_settings
from src.main import (
    EXIT_COMPUTATION,
    EXIT_OK,
    EXIT_USAGE,
    build_parser,
    configure_logging,
    run,
)
from src.utils.helpers import dumps_report, format_cell, render_mapping, render_table


def _json_out(capsys) -> dict:
    return json.loads(capsys.readouterr().out)


class TestParser:
    """Tests for argument parsing."""

    def test_bounds_defaults(self):
        """Test the bounds subcommand defaults."""
        args = build_parser().parse_args(["bounds", "--n", "3"])
        assert args.command == "bounds"
        assert args.to is None
        assert args.cases is False
        assert args.format == "json"

    @pytest.mark.parametrize(
        "argv",
        [
            [],
            ["frobnicate"],
            ["bounds"],
            ["bounds", "--n", "three"],
            ["algorithm1"],
            ["algorithm1", "--group", "cyclic-3", "--file", "g.json"],
            ["algorithm1", "--group", "cyclic-3", "--order", "lex"],
            ["examples", "--name", "quaternion"],
        ],
    )
    def test_usage_errors(self, argv):
        """Test that malformed command lines exit with the usage code."""
        assert run(argv) == EXIT_USAGE

    def test_help(self, capsys):
        """Test that --help exits cleanly."""
        assert run(["--help"]) == EXIT_OK
        assert "toric-envelope" in capsys.readouterr().out


class TestBoundsCommand:
    """Tests for the bounds subcommand."""

    def test_single_n(self, capsys):
        """Test a single bound report on stdout."""
        assert run(["bounds", "--n", "2"]) == EXIT_OK
        report = _json_out(capsys)
        assert report["schur_J"] == 384064
        assert report["headline"] == 6

    def test_range_with_cases(self, capsys):
        """Test a range of reports with the GL3 cases."""
        assert run(["bounds", "--n", "1", "--to", "3", "--cases"]) == EXIT_OK
        report = _json_out(capsys)
        assert [r["n"] for r in report["reports"]] == [1, 2, 3]
        assert report["cases"]["maximum"] == 360

    def test_out_of_range(self, capsys):
        """Test that an invalid n is a computation error with a JSON report."""
        assert run(["bounds", "--n", "0"]) == EXIT_COMPUTATION
        assert _json_out(capsys)["kind"] == "ParameterError"

    def test_text_format(self, capsys):
        """Test the text rendering of a single report."""
        assert run(["--format", "text", "bounds", "--n", "3"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "headline" in out
        assert "360" in out

    def test_text_error_on_stderr(self, capsys):
        """Test that text-mode errors go to stderr."""
        assert run(["--format", "text", "bounds", "--n", "1", "--to", "0"]) == EXIT_COMPUTATION
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "error:" in captured.err
        assert "(field to)" in captured.err


class TestOtherCommands:
    """Tests for the remaining subcommands."""

    def test_algorithm1(self, capsys):
        """Test a degree search from a catalog tag."""
        assert run(["algorithm1", "--group", "cyclic-3"]) == EXIT_OK
        assert _json_out(capsys)["d"] == 3

    def test_algorithm1_non_sl2(self, capsys):
        """Test that a group outside SL2 fails with the computation code."""
        assert run(["algorithm1", "--group", "dihedral-example-2"]) == EXIT_COMPUTATION
        assert _json_out(capsys)["kind"] == "GroupShapeError"

    def test_degree(self, tmp_path, capsys):
        """Test measuring an ideal file."""
        path = tmp_path / "cubic.json"
        path.write_text(
            json.dumps({"vars": ["x", "y", "w"], "generators": ["y - x^2", "w - x^3"]}),
            encoding="utf-8",
        )
        assert run(["degree", "--ideal", str(path)]) == EXIT_OK
        report = _json_out(capsys)
        assert (report["dimension"], report["degree"]) == (1, 3)

    def test_degree_text(self, tmp_path, capsys):
        """Test that the text rendering lists the basis."""
        path = tmp_path / "line.json"
        path.write_text(json.dumps({"vars": ["x", "y"], "generators": ["x"]}), encoding="utf-8")
        assert run(["--format", "text", "degree", "--ideal", str(path)]) == EXIT_OK
        out = capsys.readouterr().out
        assert "dimension" in out
        assert out.rstrip().endswith("x")

    def test_examples(self, capsys):
        """Test one worked example."""
        assert run(["examples", "--name", "dihedral", "--param", "2"]) == EXIT_OK
        report = _json_out(capsys)
        assert report["all_match"] is True

    def test_examples_param_without_name(self, capsys):
        """Test that --param alone is a computation error."""
        assert run(["examples", "--param", "2"]) == EXIT_COMPUTATION

    def test_gl2_table_text(self, capsys):
        """Test the GL2 table in text form."""
        assert run(["--format", "text", "examples", "--name", "gl2-table"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "classified_as" in out
        assert "D0" in out

    @pytest.mark.slow
    def test_verify(self, capsys):
        """Test the full acceptance suite."""
        assert run(["verify"]) == EXIT_OK
        assert _json_out(capsys)["passed"] is True


class TestRendering:
    """Tests for report rendering helpers."""

    @pytest.mark.parametrize(
        "value,text",
        [
            (None, "-"),
            (True, "yes"),
            (False, "no"),
            ([], "-"),
            (["a", "b"], "a; b"),
            ({"b": 2, "a": 1}, "a=1, b=2"),
            (12, "12"),
        ],
    )
    def test_format_cell(self, value, text):
        """Test cell formatting."""
        assert format_cell(value) == text

    def test_render_table(self):
        """Test column alignment."""
        text = render_table([{"n": 1, "value": 12}, {"n": 10, "value": 3}])
        lines = text.splitlines()
        assert lines[0] == "n   value"
        assert lines[1] == "--  -----"
        assert lines[2] == "1   12"

    def test_render_empty_table(self):
        """Test the empty table placeholder."""
        assert render_table([]) == "(no rows)"

    def test_render_mapping(self):
        """Test key-value rendering in sorted order."""
        assert render_mapping({"b": None, "a": 1}) == "a  1\nb  -"

    def test_dumps_is_canonical(self):
        """Test that key order does not change the output."""
        assert dumps_report({"b": 1, "a": 2**200}) == dumps_report({"a": 2**200, "b": 1})
        assert str(2**200) in dumps_report({"a": 2**200})


class TestLogging:
    """Tests for the log configuration."""

    def test_logs_follow_current_stderr(self, monkeypatch):
        """Test that log records go to the stderr in place at emit time."""
        configure_logging(get_settings(), "WARNING")
        first, second = io.StringIO(), io.StringIO()
        monkeypatch.setattr(sys, "stderr", first)
        structlog.get_logger("tests.logging").warning("first record")
        first.close()
        monkeypatch.setattr(sys, "stderr", second)
        structlog.get_logger("tests.logging").warning("second record")
        assert "second record" in second.getvalue()
