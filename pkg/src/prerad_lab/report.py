"""Suite reports: canonical JSON, schema validation and the text projection."""
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

import jsonschema

from .config import WorkbenchConfig, load_schema
from .ring import make_ring
from .suites import Mode, PropositionResult, Status, run_suites
from .universe import ModuleUniverse, build_universe

logger = logging.getLogger(__name__)

SCHEMA_VERSION = "1"
EXIT_ASSERTED_FAILURE = 2


@dataclass
class SuiteReport:
    """Results of one run, in registry order."""

    ring: str
    universe: Dict[str, Any]
    suites: List[str]
    results: List[PropositionResult] = field(default_factory=list)
    timings: bool = False
    schema_version: str = SCHEMA_VERSION

    @property
    def asserted_failures(self) -> List[str]:
        return [
            r.proposition_id for r in self.results
            if r.mode is Mode.ASSERT and r.status is Status.FAILS
        ]

    @property
    def exit_code(self) -> int:
        return EXIT_ASSERTED_FAILURE if self.asserted_failures else 0

    def as_dict(self) -> Dict[str, Any]:
        counts: Dict[str, int] = {}
        for r in self.results:
            counts[r.status.value] = counts.get(r.status.value, 0) + 1
        return {
            "schema_version": self.schema_version,
            "ring": self.ring,
            "universe": self.universe,
            "suites": self.suites,
            "summary": {
                "total": len(self.results),
                "counts": counts,
                "asserted_failures": self.asserted_failures,
            },
            "results": [r.as_dict(self.timings) for r in self.results],
        }

    def to_json(self) -> str:
        """Canonical JSON: sorted keys, two-space indent, trailing newline."""
        return json.dumps(self.as_dict(), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        return render_text(self.as_dict())


def validate_report(data: Dict[str, Any]) -> None:
    """
    Validate a report dictionary against the shipped schema.

    Raises:
        jsonschema.ValidationError: The report does not match the schema
    """
    jsonschema.validate(instance=data, schema=load_schema("report.schema.json"))


def render_text(data: Dict[str, Any]) -> str:
    """Human-readable projection of a report dictionary."""
    universe = data["universe"]
    lines = [
        f"prerad-lab report (schema {data['schema_version']})",
        f"Ring: {data['ring']}",
        f"Universe: {universe['classes']} classes, max_order={universe['max_order']}, "
        f"sum_arity={universe['sum_arity']}",
        f"Suites: {', '.join(data['suites']) or '-'}",
        "=" * 60,
    ]
    for result in data["results"]:
        regime = f" [{result['regime']}]" if result["regime"] else ""
        timing = f" ({result['runtime_ms']:.0f} ms)" if "runtime_ms" in result else ""
        lines.append(f"{result['status'].upper():9} {result['proposition_id']}{regime}{timing}")
        lines.append(f"          {result['paper_anchor']}")
        for witness in result["witnesses"]:
            lines.append(f"          witness: {json.dumps(witness, sort_keys=True)}")
        for key in sorted(result["notes"]):
            lines.append(f"          {key}: {json.dumps(result['notes'][key], sort_keys=True)}")
    summary = data["summary"]
    lines.append("=" * 60)
    counts = ", ".join(f"{k}={v}" for k, v in sorted(summary["counts"].items())) or "none"
    lines.append(f"Total: {summary['total']} ({counts})")
    if summary["asserted_failures"]:
        lines.append(f"Asserted failures: {', '.join(summary['asserted_failures'])}")
    return "\n".join(lines) + "\n"


def universe_summary(universe: ModuleUniverse) -> Dict[str, Any]:
    return {**universe.parameters, "names": [universe.name(i) for i in universe.indices]}


def run(config: WorkbenchConfig, log: Optional[logging.Logger] = None) -> SuiteReport:
    """
    Build the universe described by ``config`` and run its suites.

    Raises:
        PreradLabError: Invalid ring, universe or suite selection
    """
    log = log or logger
    ring = make_ring(config.ring)
    universe = build_universe(
        ring,
        seeds=config.seeds,
        max_order=config.max_order,
        sum_arity=config.sum_arity,
        max_classes=config.max_classes,
        submodule_closure=config.submodule_closure,
        log=log,
    )
    results = run_suites(universe, config.suites, config.max_assignments, config.max_down_sets, log)
    report = SuiteReport(
        ring=config.ring_label,
        universe=universe_summary(universe),
        suites=list(config.suites),
        results=results,
        timings=config.timings,
    )
    validate_report(report.as_dict())
    return report


def write_report(report: SuiteReport, json_path: Optional[Path], text_path: Optional[Path]) -> None:
    for path, content in ((json_path, report.to_json()), (text_path, report.to_text())):
        if path is None:
            continue
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(content, encoding="utf-8")
        logger.info(f"Report written: {path}")
