"""Tests for the command-line interface."""
import json
import logging

import pytest

from prerad_lab.cli import build_parser, main
from prerad_lab.logger import setup_logger


def _exit_code(argv):
    with pytest.raises(SystemExit) as excinfo:
        main(argv)
    return excinfo.value.code


class TestParser:
    """Test suite for argument parsing."""

    def test_check_defaults(self):
        """Test that check runs the suites by default."""
        args = build_parser().parse_args(["check", "--ring", "zn:4"])
        assert args.target == "suites"
        assert args.family == "pr"
        assert args.suite is None

    def test_repeatable_options(self):
        """Test that suites and modules accumulate."""
        args = build_parser().parse_args(
            ["check", "coprime", "--ring", "zn:4", "--module", "Z4", "--module", "Z2+Z4"]
        )
        assert args.module == ["Z4", "Z2+Z4"]

    def test_no_command(self, capsys):
        """Test that a bare invocation prints help and fails."""
        assert _exit_code([]) == 1
        assert "usage: prerad-lab" in capsys.readouterr().out


class TestCheck:
    """Test suite for the check command."""

    def test_missing_ring(self, capsys):
        """Test that check needs a config or a ring."""
        assert _exit_code(["check"]) == 1
        assert "either --config or --ring is required" in capsys.readouterr().err

    def test_suite_report_file(self, tmp_path):
        """Test a suite run written to a JSON file."""
        out = tmp_path / "reports" / "zn4.json"
        assert _exit_code(["check", "--ring", "zn:4", "--suite", "section2", "--out", str(out)]) == 0
        data = json.loads(out.read_text(encoding="utf-8"))
        assert data["suites"] == ["section2"]
        assert data["summary"]["asserted_failures"] == []

    def test_suite_report_on_stdout(self, capsys):
        """Test that without output files the text report is printed."""
        assert _exit_code(["check", "--ring", "zn:2", "--suite", "section1"]) == 0
        assert "Ring: zn:2" in capsys.readouterr().out

    def test_config_file(self, write_config, tmp_path):
        """Test a run described by a config file."""
        path = write_config(json.dumps({
            "ring": "zn:2", "suites": ["section1"], "output": {"text": "report.txt"},
        }))
        assert _exit_code(["check", "--config", str(path)]) == 0
        assert (tmp_path / "report.txt").read_text(encoding="utf-8").startswith("prerad-lab report")

    def test_unknown_suite(self, capsys):
        """Test that an unknown suite is an error."""
        assert _exit_code(["check", "--ring", "zn:4", "--suite", "section7"]) == 1
        assert "$.suites" in capsys.readouterr().err

    def test_coprime(self, capsys):
        """Test the coprimeness verdicts of Z4."""
        assert _exit_code(["check", "coprime", "--ring", "zn:4", "--module", "Z4"]) == 0
        (record,) = json.loads(capsys.readouterr().out)
        assert record["module"] == "Z4"
        assert record["by_hom"] and record["by_comult"]
        assert not record["by_xi"] and not record["by_box"]

    def test_cofirst_with_sigma(self, capsys):
        """Test co-first verdicts relative to one preradical."""
        assert _exit_code(["check", "cofirst", "--ring", "zn:4", "--sigma", "rad", "--module", "Z4"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["regime"] is None
        assert data["modules"] == [{"module": "Z4", "co_first": "true", "fully_co_first": "true"}]

    def test_second_over_family(self, capsys):
        """Test second verdicts over the whole preradical family."""
        assert _exit_code(["check", "second", "--ring", "zn:2"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["family"] == "pr"
        assert data["regime"] == "exhaustive-universe"
        assert {m["second"] for m in data["modules"]} == {"true"}

    def test_dihollow(self, capsys):
        """Test the dihollow check."""
        assert _exit_code(["check", "dihollow", "--ring", "zn:6", "--module", "Z2+Z3", "--module", "Z2"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert [m["dihollow"] for m in data] == [False, True]

    def test_conat_with_dot(self, capsys, tmp_path):
        """Test the conatural classes and the DOT lattice."""
        dot = tmp_path / "conat.dot"
        assert _exit_code(["check", "conat", "--ring", "zn:4", "--dot", str(dot)]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "{0}"
        assert len(lines) == 2
        assert "c0 -> c1;" in dot.read_text(encoding="utf-8")


class TestCompute:
    """Test suite for the compute command."""

    def test_comultiplication(self, capsys):
        """Test (2:2) in Z4."""
        assert _exit_code(["compute", "comult", "zn:4", "Z4", "2", "2"]) == 0
        assert capsys.readouterr().out.strip() == "2"

    def test_box(self, capsys):
        """Test that 0 box 2 in Z4 is 2."""
        assert _exit_code(["compute", "box", "zn:4", "Z4", "0", "2"]) == 0
        assert capsys.readouterr().out.strip() == "2"

    def test_totalizer(self, capsys):
        """Test the totalizer of the Z2 summand of Z2+Z3."""
        assert _exit_code(["compute", "tot", "zn:6", "Z2+Z3", "1,0"]) == 0
        assert capsys.readouterr().out.strip() == "0,1"

    def test_bad_submodule(self, capsys):
        """Test that a malformed submodule spec is an error."""
        assert _exit_code(["compute", "box", "zn:4", "Z2+Z4", "1", "0"]) == 1
        assert capsys.readouterr().err.startswith("Error:")


class TestInspect:
    """Test suite for the inspect command."""

    def test_hom(self, capsys):
        """Test the hom-set from Z2 to Z6."""
        assert _exit_code(["inspect", "hom", "zn:6", "Z2", "Z6"]) == 0
        out = capsys.readouterr().out
        assert "2 morphisms" in out
        assert out.count("->") == 2

    def test_eval(self, capsys):
        """Test that the reject of Z6 vanishes on Z2."""
        assert _exit_code(["inspect", "eval", "zn:6", "reject(Z6)", "Z2"]) == 0
        assert capsys.readouterr().out.strip() == "0"

    def test_lattice(self, capsys):
        """Test the submodule chain of Z4."""
        assert _exit_code(["inspect", "lattice", "zn:4", "Z4"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0].endswith("3 submodules")
        assert lines[1:] == ["0 < 2", "2 < 1"]

    def test_ring(self, capsys):
        """Test the ring summary."""
        assert _exit_code(["inspect", "ring", "zn:4"]) == 0
        out = capsys.readouterr().out
        assert "Semisimple: False" in out
        assert "Two-sided ideals: 3" in out

    def test_bad_ring(self, capsys):
        """Test that an invalid ring spec is an error."""
        assert _exit_code(["inspect", "ring", "zn:1"]) == 1
        assert "n >= 2 required" in capsys.readouterr().err


class TestUniverseCommand:
    """Test suite for the universe command."""

    def test_json(self, capsys):
        """Test the universe summary of Z/2."""
        assert _exit_code(["universe", "--ring", "zn:2"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["names"] == ["0", "Z2", "Z2+Z2"]
        assert data["classes"] == 3

    def test_bound_too_small(self, capsys):
        """Test that a bound below the ring order is an error."""
        assert _exit_code(["universe", "--ring", "zn:4", "--max-order", "2"]) == 1
        assert "smaller than" in capsys.readouterr().err


class TestLogger:
    """Test suite for logger setup."""

    def test_file_logging(self, tmp_path):
        """Test that a log file receives DEBUG records even without --verbose."""
        log_file = tmp_path / "logs" / "run.log"
        logger = setup_logger("prerad_lab.test", log_file=log_file)
        logger.debug("universe built")
        for handler in logger.handlers:
            handler.flush()
        assert "universe built" in log_file.read_text(encoding="utf-8")
        assert len(logger.handlers) == 2
        console, file_handler = logger.handlers
        assert console.level == logging.INFO
        assert file_handler.level == logging.DEBUG

    def test_no_duplicate_handlers(self):
        """Test that repeated setup replaces handlers."""
        setup_logger("prerad_lab.test2")
        logger = setup_logger("prerad_lab.test2")
        assert len(logger.handlers) == 1

    def test_console_format(self, capsys):
        """Test the short console format and the detailed verbose format."""
        logger = setup_logger("prerad_lab.test3")
        logger.info("ran 10 propositions")
        logger.debug("hidden")
        assert capsys.readouterr().err == "INFO: ran 10 propositions\n"

        logger = setup_logger("prerad_lab.test3", verbose=True)
        logger.debug("S4.thm-CN: holds")
        err = capsys.readouterr().err
        assert "prerad_lab.test3 - DEBUG - S4.thm-CN: holds" in err

    def test_verbose_flag(self, capsys):
        """Test that --verbose shows per-proposition statuses on stderr."""
        assert _exit_code(["--verbose", "check", "--ring", "zn:2", "--suite", "section1"]) == 0
        captured = capsys.readouterr()
        assert "DEBUG - S1.additivity:" in captured.err
        assert "Ring: zn:2" in captured.out
