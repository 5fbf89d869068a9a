"""Tests for workbench configuration documents."""
import json
from pathlib import Path

import pytest

from prerad_lab.config import WorkbenchConfig, load_config, parse_config
from prerad_lab.errors import ConfigError
from prerad_lab.report import run
from prerad_lab.suites import SUITES


class TestParseConfig:
    """Test suite for config parsing and defaults."""

    def test_defaults(self):
        """Test the defaults of a minimal document."""
        config = parse_config('{"ring": "zn:4"}')
        assert config.max_order == 16
        assert config.sum_arity == 2
        assert config.seeds == ["R"]
        assert config.suites == list(SUITES)
        assert config.out is None
        assert not config.timings

    def test_preset_max_order(self):
        """Test that Z/6 gets the larger default bound unless overridden."""
        assert parse_config('{"ring": "zn:6"}').max_order == 36
        assert parse_config('{"ring": "zn:6", "universe": {"max_order": 12}}').max_order == 12
        assert WorkbenchConfig(ring="zn:6").max_order == 36

    def test_invalid_ring(self):
        """Test that a bad ring spec is reported at $.ring."""
        with pytest.raises(ConfigError) as excinfo:
            parse_config('{"ring": "zn:0"}')
        assert excinfo.value.path == "$.ring"

    def test_schema_violation_path(self):
        """Test that schema errors carry the JSON path of the field."""
        with pytest.raises(ConfigError) as excinfo:
            parse_config('{"ring": "zn:4", "universe": {"max_order": 0}}')
        assert excinfo.value.path == "$.universe.max_order"

    @pytest.mark.parametrize("text", ['{"suites": ["all"]}', '{"ring": "zn:4", "colour": 1}', "[]"])
    def test_schema_violations(self, text):
        """Test documents rejected by the schema."""
        with pytest.raises(ConfigError):
            parse_config(text)

    def test_invalid_json(self):
        """Test that malformed JSON is a config error."""
        with pytest.raises(ConfigError, match="invalid JSON"):
            parse_config('{"ring": ')

    def test_unknown_suite(self):
        """Test that suite names are checked."""
        with pytest.raises(ConfigError) as excinfo:
            parse_config('{"ring": "zn:4", "suites": ["section0"]}')
        assert excinfo.value.path == "$.suites"

    def test_suites_are_normalized(self):
        """Test that suites come back in section order without duplicates."""
        config = parse_config('{"ring": "zn:4", "suites": ["section2", "section1", "section2"]}')
        assert config.suites == ["section1", "section2"]


class TestLoadConfig:
    """Test suite for config files."""

    def test_relative_outputs(self, write_config, tmp_path):
        """Test that relative output paths resolve against the config directory."""
        document = {
            "ring": "zn:2",
            "output": {"json": "out/report.json", "text": "/abs/report.txt", "timings": True},
        }
        config = load_config(write_config(json.dumps(document)))
        assert config.out == tmp_path / "out" / "report.json"
        assert config.text_out == Path("/abs/report.txt")
        assert config.dot_out is None
        assert config.timings

    def test_missing_file(self, tmp_path):
        """Test that an unreadable file is a config error."""
        with pytest.raises(ConfigError, match="cannot read"):
            load_config(tmp_path / "missing.json")


F2_TABLES = {
    "elements": ["0", "1"],
    "add": [[0, 1], [1, 0]],
    "mul": [[0, 0], [0, 1]],
    "one": 1,
    "zero": 0,
    "tag": "f2",
}


class TestExplicitRingTables:
    """Test suite for rings given as explicit tables."""

    def test_tables_are_accepted(self):
        """Test that a table object is routed to the ring constructor."""
        config = parse_config(json.dumps({"ring": F2_TABLES, "suites": ["section1"]}))
        assert config.ring == F2_TABLES
        assert config.ring_label == "f2"
        assert config.max_order == 16

    def test_run_over_tables(self):
        """Test a run over the field with two elements given by tables."""
        report = run(parse_config(json.dumps({"ring": F2_TABLES, "suites": ["section1"]})))
        data = report.as_dict()
        assert data["ring"] == "f2"
        assert data["universe"]["ring"] == "f2"
        assert report.exit_code == 0

    def test_default_tag(self):
        """Test the label of tables without a tag."""
        tables = {key: value for key, value in F2_TABLES.items() if key != "tag"}
        assert parse_config(json.dumps({"ring": tables})).ring_label == "tables"

    @pytest.mark.parametrize("change", [
        {"mul": [[0, 1], [1, 1]]},
        {"add": [[0, 1]]},
        {"add": [[0, 2], [2, 0]]},
        {"elements": ["0", "1", "2"]},
    ])
    def test_invalid_tables(self, change):
        """Test that tables failing the axioms or of the wrong shape are reported at $.ring."""
        with pytest.raises(ConfigError) as excinfo:
            parse_config(json.dumps({"ring": {**F2_TABLES, **change}}))
        assert excinfo.value.path == "$.ring"

    @pytest.mark.parametrize("ring", [{"add": [[0]]}, {"add": "x", "mul": []}, {**F2_TABLES, "colour": 1}, ""])
    def test_schema_rejects_ring(self, ring):
        """Test ring values rejected by the schema."""
        with pytest.raises(ConfigError) as excinfo:
            parse_config(json.dumps({"ring": ring}))
        assert excinfo.value.path.startswith("$.ring")
