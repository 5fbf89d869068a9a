"""Proposition registry and the section suites.

Each proposition is a check over a universe. Checks return an :class:`Outcome`;
the runner turns it into a :class:`PropositionResult` with a status according
to the proposition's mode and the quantifier regime used.
"""
import logging
import time
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .calculus import (
    DEFAULT_MAX_ASSIGNMENTS,
    FAMILIES,
    Evaluable,
    Regime,
    UniversePreradical,
    assignment_of,
    generated_family,
    ideal_t_radicals,
    quantifier_family,
    surjections,
)
from .classes import DEFAULT_MAX_DOWN_SETS, ModuleClass, conatural_classes, quotient_closed_classes
from .cofirst import ClassTriple, class_triple, family_triple
from .errors import ConfigError, EnumerationCapError
from .module import Submodule, enumerate_submodules, fully_invariant_submodules
from .preradical import One, Preradical, Rad, Reject, Soc, Trace, Zero, to_text
from .products import CoprimeVerdict, coprime_verdict
from .universe import ModuleUniverse, format_submodule

logger = logging.getLogger(__name__)

SUITES = ("section1", "section2", "section3", "section4", "section5")
MAX_WITNESSES = 5


class Status(Enum):
    HOLDS = "holds"
    FAILS = "fails"
    REPORTED = "reported"
    VACUOUS = "vacuous"
    DEGRADED = "degraded"


class Mode(Enum):
    """How a proposition's outcome is turned into a status."""

    ASSERT = "assert"
    REPORT = "report"
    VACUOUS = "vacuous"


@dataclass
class Outcome:
    ok: bool = True
    witnesses: List[Dict[str, Any]] = field(default_factory=list)
    regime: Optional[Regime] = None
    notes: Dict[str, Any] = field(default_factory=dict)
    inconclusive: List[Dict[str, Any]] = field(default_factory=list)

    def fail(self, **witness) -> None:
        self.ok = False
        self.witness(**witness)

    def witness(self, **witness) -> None:
        if len(self.witnesses) < MAX_WITNESSES:
            self.witnesses.append(witness)

    def check(self, condition: bool, **witness) -> bool:
        if not condition:
            self.fail(**witness)
        return condition

    def use(self, regime: Optional[Regime]) -> None:
        """Record the weakest regime that fed the result."""
        if regime is None or self.regime is Regime.GENERATED:
            return
        self.regime = regime

    def partial(self, **witness) -> None:
        """Record a case the universe cannot decide; a result that otherwise holds is degraded."""
        if len(self.inconclusive) < MAX_WITNESSES:
            self.inconclusive.append(witness)
        self.notes["inconclusive_cases"] = self.notes.get("inconclusive_cases", 0) + 1


@dataclass(frozen=True)
class Proposition:
    proposition_id: str
    anchor: str
    mode: Mode
    check: Callable[["SuiteContext"], Outcome] = field(repr=False)

    @property
    def suite(self) -> str:
        return "section" + self.proposition_id[1]


REGISTRY: Dict[str, Proposition] = {}


def proposition(proposition_id: str, anchor: str, mode: Mode = Mode.ASSERT):
    """Register a check under ``proposition_id``."""
    def register(check: Callable[["SuiteContext"], Outcome]):
        if proposition_id in REGISTRY:
            raise ValueError(f"duplicate proposition {proposition_id}")
        REGISTRY[proposition_id] = Proposition(proposition_id, anchor, mode, check)
        return check
    return register


@dataclass
class PropositionResult:
    proposition_id: str
    anchor: str
    mode: Mode
    status: Status
    witnesses: List[Dict[str, Any]]
    regime: Optional[Regime]
    notes: Dict[str, Any]
    runtime_ms: float = 0.0

    def as_dict(self, timings: bool = False) -> Dict[str, Any]:
        data = {
            "proposition_id": self.proposition_id,
            "paper_anchor": self.anchor,
            "mode": self.mode.value,
            "status": self.status.value,
            "regime": self.regime.value if self.regime else None,
            "witnesses": self.witnesses,
            "notes": self.notes,
        }
        if timings:
            data["runtime_ms"] = round(self.runtime_ms, 3)
        return data


def describe(sigma: Evaluable) -> str:
    if isinstance(sigma, UniversePreradical):
        return str(sigma)
    return to_text(sigma)


class SuiteContext:
    """Shared, lazily computed data for the propositions of one run."""

    def __init__(
        self,
        universe: ModuleUniverse,
        max_assignments: int = DEFAULT_MAX_ASSIGNMENTS,
        max_down_sets: int = DEFAULT_MAX_DOWN_SETS,
        logger: Optional[logging.Logger] = None,
    ):
        self.universe = universe
        self.max_assignments = max_assignments
        self.max_down_sets = max_down_sets
        self.logger = logger or logging.getLogger(__name__)
        self._families: Dict[str, Tuple[List[Evaluable], Regime]] = {}
        self._triples: Dict[Any, ClassTriple] = {}
        self._family_triples: Dict[str, Tuple[ClassTriple, Regime]] = {}

    @property
    def ring(self):
        return self.universe.ring

    def name(self, i: int) -> str:
        return self.universe.name(i)

    @cached_property
    def nonzero(self) -> List[int]:
        return [i for i in self.universe.indices if i != self.universe.zero_index]

    @cached_property
    def fi_pairs(self) -> List[Tuple[int, Submodule]]:
        return [(i, n) for i in self.nonzero for n in fully_invariant_submodules(self.universe[i])]

    def family(self, kind: str) -> Tuple[List[Evaluable], Regime]:
        """
        Members of a preradical family for a universal quantifier.

        The unrestricted family is enumerated once; the others are read off
        it by flag, so each universe preradical is classified at most once.
        """
        if kind not in self._families:
            if kind == "pr":
                self._families[kind] = quantifier_family(self.universe, kind, self.max_assignments, self.logger)
            else:
                everything, regime = self.family("pr")
                if regime is Regime.EXHAUSTIVE:
                    required = FAMILIES[kind]
                    members = [rho for rho in everything if all(rho.flag(name) for name in required)]
                else:
                    members = generated_family(self.universe, kind)
                self._families[kind] = (members, regime)
        return self._families[kind]

    def family_triple(self, kind: str) -> Tuple[ClassTriple, Regime]:
        """Class triple of a whole family together with the regime that produced it."""
        if kind not in self._family_triples:
            members, regime = self.family(kind)
            self._family_triples[kind] = (family_triple(members, self.universe), regime)
        return self._family_triples[kind]

    @cached_property
    def trads(self) -> List[Preradical]:
        return list(ideal_t_radicals(self.universe))

    @cached_property
    def pool(self) -> List[Preradical]:
        """Expression preradicals used where a proposition ranges over a sample."""
        pool: List[Preradical] = [Zero(), One(), Rad(), Soc()] + self.trads
        for i in self.nonzero:
            pool += [Trace(self.universe[i]), Reject(self.universe[i])]
        return pool

    @cached_property
    def epis(self):
        return surjections(self.universe)

    def assignment(self, sigma: Evaluable):
        return assignment_of(sigma, self.universe)

    def triple(self, sigma: Evaluable) -> ClassTriple:
        if sigma not in self._triples:
            self._triples[sigma] = class_triple(sigma, self.universe)
        return self._triples[sigma]

    def verdict(self, i: int) -> CoprimeVerdict:
        return self._verdicts[i]

    @cached_property
    def _verdicts(self) -> Dict[int, CoprimeVerdict]:
        return {i: coprime_verdict(self.universe[i], self.universe) for i in self.nonzero}

    @cached_property
    def quotient_closed(self) -> Tuple[List[ModuleClass], bool]:
        """Quotient-closed classes, or a sample of torsion classes when the cap is hit."""
        try:
            return quotient_closed_classes(self.universe, self.max_down_sets), True
        except EnumerationCapError as e:
            self.logger.warning(f"Sampling quotient-closed classes: {e}")
            sample = {ModuleClass(self.universe, self.triple(s).T.members) for s in self.pool}
            return sorted(sample, key=lambda c: (len(c), sorted(c.members))), False

    @cached_property
    def conatural(self) -> List[ModuleClass]:
        return conatural_classes(self.universe, self.max_down_sets, self.logger)

    def small_members(self, bound: int = 16) -> List[int]:
        return [i for i in self.nonzero if self.universe[i].order <= bound]

    def subs(self, i: int) -> List[Submodule]:
        return enumerate_submodules(self.universe[i])

    def fmt(self, sub: Submodule) -> str:
        return format_submodule(sub)


def expand_suites(names: Sequence[str]) -> List[str]:
    """
    Resolve ``all`` and validate suite names.

    Raises:
        ConfigError: Unknown suite name
    """
    selected = []
    for name in names:
        if name == "all":
            targets = list(SUITES)
        elif name in SUITES:
            targets = [name]
        else:
            raise ConfigError(f"unknown suite '{name}'", "$.suites")
        selected += [t for t in targets if t not in selected]
    return [s for s in SUITES if s in selected]


def _status(prop: Proposition, outcome: Outcome) -> Status:
    if prop.mode is Mode.VACUOUS:
        return Status.VACUOUS
    if prop.mode is Mode.REPORT:
        return Status.REPORTED
    if not outcome.ok:
        return Status.FAILS
    if outcome.regime is Regime.GENERATED or outcome.inconclusive:
        return Status.DEGRADED
    return Status.HOLDS


def run_proposition(prop: Proposition, context: SuiteContext) -> PropositionResult:
    started = time.perf_counter()
    try:
        outcome = prop.check(context)
    except EnumerationCapError as e:
        context.logger.warning(f"{prop.proposition_id}: {e}")
        outcome = Outcome(regime=Regime.GENERATED, notes={"cap": str(e)})
    elapsed = (time.perf_counter() - started) * 1000
    status = _status(prop, outcome)
    notes = dict(outcome.notes)
    if status is Status.DEGRADED:
        notes["degraded"] = True
    if outcome.inconclusive:
        notes["inconclusive"] = outcome.inconclusive
    if prop.mode is Mode.REPORT:
        notes.setdefault("agrees", outcome.ok)
    result = PropositionResult(
        proposition_id=prop.proposition_id,
        anchor=prop.anchor,
        mode=prop.mode,
        status=status,
        witnesses=outcome.witnesses,
        regime=outcome.regime,
        notes=notes,
        runtime_ms=elapsed,
    )
    context.logger.debug(f"{prop.proposition_id}: {status.value} ({elapsed:.0f} ms)")
    return result


def run_suites(
    universe: ModuleUniverse,
    suites: Sequence[str] = ("all",),
    max_assignments: int = DEFAULT_MAX_ASSIGNMENTS,
    max_down_sets: int = DEFAULT_MAX_DOWN_SETS,
    log: Optional[logging.Logger] = None,
) -> List[PropositionResult]:
    """Run every registered proposition of the selected suites in registry order."""
    log = log or logger
    selected = expand_suites(suites)
    context = SuiteContext(universe, max_assignments, max_down_sets, log)
    results = [
        run_proposition(prop, context)
        for prop in REGISTRY.values() if prop.suite in selected
    ]
    counts: Dict[str, int] = {}
    for r in results:
        counts[r.status.value] = counts.get(r.status.value, 0) + 1
    log.info(f"Ran {len(results)} propositions over {universe.ring.preset_tag}: {counts}")
    return results


# Section checks register themselves on import
from . import propositions  # noqa: E402,F401
