"""Workbench configuration documents."""
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import jsonschema

from .calculus import DEFAULT_MAX_ASSIGNMENTS
from .classes import DEFAULT_MAX_DOWN_SETS
from .errors import ConfigError, PreradLabError
from .ring import make_ring
from .suites import expand_suites
from .universe import DEFAULT_MAX_CLASSES, DEFAULT_MAX_ORDER, DEFAULT_SUM_ARITY

logger = logging.getLogger(__name__)

SCHEMA_DIR = Path(__file__).parent / "schemas"

# Presets whose interesting universe needs a larger bound
PRESET_MAX_ORDER = {"zn:6": 36}


def load_schema(name: str) -> Dict[str, Any]:
    with open(SCHEMA_DIR / name, "r", encoding="utf-8") as f:
        return json.load(f)


RingSpec = Union[str, Dict[str, Any]]


def label_of(ring: RingSpec) -> str:
    """Report label of a ring spec: the preset itself, or the tag of explicit tables."""
    if isinstance(ring, str):
        return ring.replace(" ", "")
    return str(ring.get("tag", "tables"))


def default_max_order(ring: RingSpec) -> int:
    if not isinstance(ring, str):
        return DEFAULT_MAX_ORDER
    return PRESET_MAX_ORDER.get(label_of(ring), DEFAULT_MAX_ORDER)


@dataclass
class WorkbenchConfig:
    """A validated run configuration with defaults applied."""

    ring: RingSpec
    seeds: List[str] = field(default_factory=lambda: ["R"])
    max_order: Optional[int] = None
    sum_arity: int = DEFAULT_SUM_ARITY
    max_classes: int = DEFAULT_MAX_CLASSES
    submodule_closure: bool = True
    max_assignments: int = DEFAULT_MAX_ASSIGNMENTS
    max_down_sets: int = DEFAULT_MAX_DOWN_SETS
    suites: List[str] = field(default_factory=lambda: ["all"])
    out: Optional[Path] = None
    text_out: Optional[Path] = None
    dot_out: Optional[Path] = None
    timings: bool = False

    def __post_init__(self):
        if self.max_order is None:
            self.max_order = default_max_order(self.ring)

    @property
    def ring_label(self) -> str:
        return label_of(self.ring)

    def validate(self) -> "WorkbenchConfig":
        """
        Check the ring spec, caps and suite names.

        Raises:
            ConfigError: Invalid field, with the JSON path of the field
        """
        try:
            make_ring(self.ring)
        except PreradLabError as e:
            raise ConfigError(str(e), "$.ring") from None
        caps = {
            "$.universe.max_order": self.max_order,
            "$.universe.sum_arity": self.sum_arity,
            "$.universe.max_classes": self.max_classes,
            "$.caps.max_assignments": self.max_assignments,
            "$.caps.max_down_sets": self.max_down_sets,
        }
        for path, value in caps.items():
            if value < 1:
                raise ConfigError(f"must be positive, got {value}", path)
        self.suites = expand_suites(self.suites)
        return self


def _json_path(error: jsonschema.ValidationError) -> str:
    path = "$"
    for part in error.absolute_path:
        path += f"[{part}]" if isinstance(part, int) else f".{part}"
    return path


def parse_config(text: str, base: Optional[Path] = None) -> WorkbenchConfig:
    """
    Parse and validate a JSON configuration document.

    Output paths are resolved against ``base`` when given.

    Raises:
        ConfigError: Malformed JSON or a schema violation
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"invalid JSON: {e}") from None

    try:
        jsonschema.validate(instance=data, schema=load_schema("config.schema.json"))
    except jsonschema.ValidationError as e:
        raise ConfigError(e.message, _json_path(e)) from None

    universe = data.get("universe", {})
    caps = data.get("caps", {})
    output = data.get("output", {})

    def out_path(key: str) -> Optional[Path]:
        if key not in output:
            return None
        path = Path(output[key])
        return base / path if base is not None and not path.is_absolute() else path

    config = WorkbenchConfig(
        ring=data["ring"],
        seeds=universe.get("seeds", ["R"]),
        max_order=universe.get("max_order"),
        sum_arity=universe.get("sum_arity", DEFAULT_SUM_ARITY),
        max_classes=universe.get("max_classes", DEFAULT_MAX_CLASSES),
        submodule_closure=universe.get("submodule_closure", True),
        max_assignments=caps.get("max_assignments", DEFAULT_MAX_ASSIGNMENTS),
        max_down_sets=caps.get("max_down_sets", DEFAULT_MAX_DOWN_SETS),
        suites=data.get("suites", ["all"]),
        out=out_path("json"),
        text_out=out_path("text"),
        dot_out=out_path("dot"),
        timings=output.get("timings", False),
    )
    config.validate()
    logger.debug(f"Loaded config for {config.ring_label}: suites {config.suites}")
    return config


def load_config(path: Path) -> WorkbenchConfig:
    """
    Read a configuration file.

    Raises:
        ConfigError: Unreadable file or invalid document
    """
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read {path}: {e}") from None
    return parse_config(text, base=path.parent)
