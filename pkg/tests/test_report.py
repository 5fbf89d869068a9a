"""Tests for suite reports."""
import json

import jsonschema
import pytest

from prerad_lab.calculus import Regime
from prerad_lab.config import WorkbenchConfig
from prerad_lab.report import (
    EXIT_ASSERTED_FAILURE,
    SCHEMA_VERSION,
    SuiteReport,
    render_text,
    run,
    universe_summary,
    validate_report,
    write_report,
)
from prerad_lab.suites import Mode, PropositionResult, Status


def _result(pid, mode=Mode.ASSERT, status=Status.HOLDS, **kwargs):
    return PropositionResult(
        proposition_id=pid, anchor=f"anchor of {pid}", mode=mode, status=status,
        witnesses=kwargs.get("witnesses", []), regime=kwargs.get("regime"),
        notes=kwargs.get("notes", {}), runtime_ms=kwargs.get("runtime_ms", 0.0),
    )


@pytest.fixture
def small_report(u_zn2):
    return SuiteReport(
        ring="zn:2",
        universe=universe_summary(u_zn2),
        suites=["section1"],
        results=[
            _result("S1.a", regime=Regime.EXHAUSTIVE, runtime_ms=12.4),
            _result("S1.b", status=Status.FAILS, witnesses=[{"module": "Z2"}]),
            _result("S1.c", mode=Mode.REPORT, status=Status.REPORTED, notes={"agrees": True}),
        ],
    )


class TestSuiteReport:
    """Test suite for the report record."""

    def test_summary(self, small_report):
        """Test counts and asserted failures."""
        data = small_report.as_dict()
        assert data["schema_version"] == SCHEMA_VERSION
        assert data["summary"] == {
            "total": 3,
            "counts": {"holds": 1, "fails": 1, "reported": 1},
            "asserted_failures": ["S1.b"],
        }
        assert small_report.exit_code == EXIT_ASSERTED_FAILURE

    def test_failed_report_is_not_an_asserted_failure(self, u_zn2):
        """Test that report-mode results never change the exit code."""
        report = SuiteReport("zn:2", universe_summary(u_zn2), ["section2"], [
            _result("S2.x", mode=Mode.REPORT, status=Status.REPORTED, notes={"agrees": False}),
        ])
        assert report.exit_code == 0

    def test_schema(self, small_report):
        """Test that reports validate and broken ones do not."""
        data = small_report.as_dict()
        validate_report(data)
        data["results"][0]["status"] = "maybe"
        with pytest.raises(jsonschema.ValidationError):
            validate_report(data)

    def test_canonical_json(self, small_report):
        """Test sorted keys and the trailing newline."""
        text = small_report.to_json()
        assert text.endswith("}\n")
        assert json.loads(text) == small_report.as_dict()
        assert text == json.dumps(json.loads(text), sort_keys=True, indent=2) + "\n"

    def test_timings_are_optional(self, small_report):
        """Test that runtime only appears when requested."""
        assert "runtime_ms" not in small_report.as_dict()["results"][0]
        small_report.timings = True
        assert small_report.as_dict()["results"][0]["runtime_ms"] == 12.4


class TestRenderText:
    """Test suite for the text projection."""

    def test_lines(self, small_report):
        """Test header, result and summary lines."""
        text = render_text(small_report.as_dict())
        assert "Ring: zn:2" in text
        assert "Universe: 3 classes, max_order=16, sum_arity=2" in text
        assert "HOLDS     S1.a [exhaustive-universe]" in text
        assert 'witness: {"module": "Z2"}' in text
        assert "agrees: true" in text
        assert "Total: 3 (fails=1, holds=1, reported=1)" in text
        assert text.rstrip().endswith("Asserted failures: S1.b")

    def test_empty_report(self, u_zn2):
        """Test the text of a run with no suites."""
        text = SuiteReport("zn:2", universe_summary(u_zn2), []).to_text()
        assert "Suites: -" in text
        assert "Total: 0 (none)" in text


class TestRun:
    """Test suite for end-to-end runs."""

    def test_run_and_write(self, tmp_path):
        """Test a run over Z/2 written to both formats."""
        report = run(WorkbenchConfig(ring="zn:2", suites=["section1"]))
        assert report.exit_code == 0
        assert {r.proposition_id[:2] for r in report.results} == {"S1"}
        json_path, text_path = tmp_path / "a" / "r.json", tmp_path / "b" / "r.txt"
        write_report(report, json_path, text_path)
        assert json.loads(json_path.read_text(encoding="utf-8"))["ring"] == "zn:2"
        assert text_path.read_text(encoding="utf-8").startswith("prerad-lab report")

    def test_deterministic(self):
        """Test that two runs give byte-identical JSON."""
        config = WorkbenchConfig(ring="zn:4", suites=["section2"])
        assert run(config).to_json() == run(config).to_json()

    def test_empty_suites(self):
        """Test that an empty selection is a valid report."""
        report = run(WorkbenchConfig(ring="zn:2", suites=[]))
        assert report.results == []
        assert report.exit_code == 0
