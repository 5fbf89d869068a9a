"""Classification, comparison and enumeration of preradicals on a universe."""
import itertools
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from .classes import ModuleClass
from .errors import EnumerationCapError
from .module import (
    FiniteModule,
    ModuleMorphism,
    Submodule,
    direct_sum,
    hom_set,
    quotient,
    regular_element,
    regular_module,
    span,
    submodule_as_module,
    whole,
    zero_submodule,
)
from .preradical import (
    Alpha,
    Bar,
    Hat,
    IdealTRad,
    One,
    Omega,
    Preradical,
    Rad,
    Reject,
    Soc,
    Trace,
    Zero,
    evaluate,
)
from .universe import ModuleUniverse

logger = logging.getLogger(__name__)

DEFAULT_MAX_ASSIGNMENTS = 2_000_000

FLAG_NAMES = ("is_preradical", "idempotent", "radical", "t_radical", "left_exact")

# Preradical families by required flags
FAMILIES: Dict[str, Tuple[str, ...]] = {
    "pr": (),
    "pid": ("idempotent",),
    "rad": ("radical",),
    "idrad": ("idempotent", "radical"),
    "trad": ("t_radical",),
    "trid": ("t_radical", "idempotent"),
    "lep": ("left_exact",),
}


class Order(Enum):
    LESS = "<="
    GREATER = ">="
    EQUAL = "="
    INCOMPARABLE = "incomparable"


class Regime(Enum):
    """How a family-level quantifier was realized."""

    EXHAUSTIVE = "exhaustive-universe"
    GENERATED = "generated-family"


@dataclass(frozen=True)
class Flags:
    is_preradical: bool
    idempotent: bool
    radical: bool
    t_radical: bool
    left_exact: bool

    def as_dict(self) -> Dict[str, bool]:
        return {name: getattr(self, name) for name in FLAG_NAMES}


Assignment = Tuple[Submodule, ...]


@dataclass(eq=False)
class UniversePreradical:
    """A natural choice of fully invariant submodule for every universe class."""

    universe: ModuleUniverse = field(repr=False)
    assignment: Assignment

    def __eq__(self, other) -> bool:
        return isinstance(other, UniversePreradical) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    @cached_property
    def key(self) -> Tuple:
        return tuple(sub.elements for sub in self.assignment)

    @cached_property
    def flags(self) -> Flags:
        return classify(self, self.universe)

    def flag(self, name: str) -> bool:
        return _decide(name, self.assignment, self.universe, self._cache)

    @cached_property
    def _cache(self) -> Dict[str, bool]:
        return {}

    def __call__(self, module: FiniteModule) -> Submodule:
        return value_on(self.assignment, self.universe, module)

    def __str__(self) -> str:
        parts = [
            f"{self.universe.name(i)}:{sub.size}" for i, sub in enumerate(self.assignment)
        ]
        return "rho[" + ", ".join(parts) + "]"


Evaluable = Union[Preradical, UniversePreradical]


def assignment_of(sigma: Evaluable, universe: ModuleUniverse) -> Assignment:
    """``sigma`` evaluated on every class representative."""
    if isinstance(sigma, UniversePreradical):
        return sigma.assignment
    return tuple(evaluate(sigma, m) for m in universe.iso_classes)


def value_on(assignment: Assignment, universe: ModuleUniverse, module: FiniteModule) -> Submodule:
    """Transport the value at the class of ``module`` back along the isomorphism."""
    i, iso = universe.locate(module)
    return iso.preimage(assignment[i])


def _value_on_submodule(assignment: Assignment, universe: ModuleUniverse, sub: Submodule) -> Submodule:
    inner, inclusion = submodule_as_module(sub)
    return inclusion.image(value_on(assignment, universe, inner))


def _is_natural(assignment: Assignment, universe: ModuleUniverse) -> bool:
    for i, j in itertools.product(universe.indices, repeat=2):
        source, target = assignment[i], assignment[j]
        for f in universe.homs(i, j):
            if any(f(g) not in target.elements for g in source.generators):
                return False
    return True


def _is_idempotent(assignment: Assignment, universe: ModuleUniverse) -> bool:
    return all(
        _value_on_submodule(assignment, universe, sub) == sub for sub in assignment
    )


def _is_radical(assignment: Assignment, universe: ModuleUniverse) -> bool:
    return all(
        assignment[universe.quotient_index(i, sub)].is_zero
        for i, sub in enumerate(assignment)
    )


def _regular_value(assignment: Assignment, universe: ModuleUniverse) -> List[int]:
    """Ring elements lying in ``sigma(R)``."""
    ring = universe.ring
    value = value_on(assignment, universe, regular_module(ring))
    return [a for a in ring.elements if regular_element(ring, a) in value.elements]


def _t_defects(assignment: Assignment, universe: ModuleUniverse, members: Iterable[int]) -> List[int]:
    ideal = _regular_value(assignment, universe)
    defects = []
    for i in members:
        module = universe[i]
        expected = span(module, [module.act(a, g) for a in ideal for g in module.ring_generators])
        if expected != assignment[i]:
            defects.append(i)
    return defects


def _is_t_radical(assignment: Assignment, universe: ModuleUniverse) -> bool:
    return not _t_defects(assignment, universe, universe.indices)


def _is_left_exact(assignment: Assignment, universe: ModuleUniverse) -> bool:
    for i, module in enumerate(universe.iso_classes):
        for sub in universe.submodules(i):
            if _value_on_submodule(assignment, universe, sub) != (assignment[i] & sub):
                return False
    return True


_DECIDERS = {
    "is_preradical": _is_natural,
    "idempotent": _is_idempotent,
    "radical": _is_radical,
    "t_radical": _is_t_radical,
    "left_exact": _is_left_exact,
}


def _decide(name: str, assignment: Assignment, universe: ModuleUniverse, cache: Dict[str, bool]) -> bool:
    if name not in cache:
        cache[name] = _DECIDERS[name](assignment, universe)
    return cache[name]


def classify(sigma: Evaluable, universe: ModuleUniverse) -> Flags:
    """Decide every flag of ``sigma`` by exhaustive checks over ``universe``."""
    assignment = assignment_of(sigma, universe)
    cache = sigma._cache if isinstance(sigma, UniversePreradical) else {}
    return Flags(**{name: _decide(name, assignment, universe, cache) for name in FLAG_NAMES})


def surjections(universe: ModuleUniverse) -> List[Tuple[int, int, ModuleMorphism]]:
    """Every surjective map between universe members as ``(source, target, map)``."""
    return [
        (i, j, f)
        for i, j in itertools.product(universe.indices, repeat=2)
        for f in universe.homs(i, j) if f.is_surjective
    ]


def preserves_epimorphisms(
    sigma: Evaluable,
    universe: ModuleUniverse,
    epis: Optional[Sequence[Tuple[int, int, ModuleMorphism]]] = None,
) -> bool:
    """``f(sigma(U)) = sigma(V)`` for every surjection ``f: U -> V`` between members."""
    assignment = assignment_of(sigma, universe)
    if epis is None:
        epis = surjections(universe)
    return all(f.image(assignment[i]) == assignment[j] for i, j, f in epis)


def t_radical_defects(
    sigma: Evaluable, universe: ModuleUniverse, members: Optional[Iterable[int]] = None
) -> List[int]:
    """Members ``M`` with ``sigma(M) != sigma(R) M``."""
    members = universe.indices if members is None else members
    return _t_defects(assignment_of(sigma, universe), universe, members)


def free_members(universe: ModuleUniverse) -> List[int]:
    """Classes of ``R^k`` present in the universe, ``k <= sum_arity``."""
    ring_module = universe[universe.regular_index]
    found = []
    for k in range(1, universe.sum_arity + 1):
        if ring_module.order ** k > universe.max_order:
            break
        found.append(universe.index_of(direct_sum(*([ring_module] * k))))
    return found


def free_covered(
    universe: ModuleUniverse, epis: Optional[Sequence[Tuple[int, int, ModuleMorphism]]] = None
) -> FrozenSet[int]:
    """Members that are the image of a surjection from a free member."""
    free = set(free_members(universe))
    if epis is None:
        epis = surjections(universe)
    return frozenset(j for i, j, _ in epis if i in free)


def has_flag(sigma: Evaluable, universe: ModuleUniverse, name: str) -> bool:
    """Decide a single flag (see :data:`FLAG_NAMES`)."""
    cache = sigma._cache if isinstance(sigma, UniversePreradical) else {}
    return _decide(name, assignment_of(sigma, universe), universe, cache)


def universe_hat(sigma: Evaluable, universe: ModuleUniverse) -> UniversePreradical:
    """Largest idempotent below ``sigma`` on the universe, by descending iteration."""
    assignment = assignment_of(sigma, universe)
    result = []
    for sub in assignment:
        current = sub
        while True:
            smaller = _value_on_submodule(assignment, universe, current)
            if smaller == current:
                break
            current = smaller
        result.append(current)
    return UniversePreradical(universe, tuple(result))


def universe_bar(sigma: Evaluable, universe: ModuleUniverse) -> UniversePreradical:
    """Least radical above ``sigma`` on the universe, by ascending iteration."""
    assignment = assignment_of(sigma, universe)
    result = []
    for i, sub in enumerate(assignment):
        module, current = universe.iso_classes[i], sub
        while True:
            target, projection = quotient(module, current)
            larger = projection.preimage(value_on(assignment, universe, target))
            if larger == current:
                break
            current = larger
        result.append(current)
    return UniversePreradical(universe, tuple(result))


def compare(sigma: Evaluable, tau: Evaluable, universe: ModuleUniverse) -> Order:
    a, b = assignment_of(sigma, universe), assignment_of(tau, universe)
    below = all(x <= y for x, y in zip(a, b))
    above = all(y <= x for x, y in zip(a, b))
    if below and above:
        return Order.EQUAL
    if below:
        return Order.LESS
    if above:
        return Order.GREATER
    return Order.INCOMPARABLE


def precedes(sigma: Evaluable, tau: Evaluable, universe: ModuleUniverse) -> bool:
    return compare(sigma, tau, universe) in (Order.LESS, Order.EQUAL)


def torsion_class(sigma: Evaluable, universe: ModuleUniverse) -> ModuleClass:
    """Members with ``sigma(U) = U``."""
    assignment = assignment_of(sigma, universe)
    return ModuleClass(universe, frozenset(i for i, sub in enumerate(assignment) if sub.is_whole))


def torsion_free_class(sigma: Evaluable, universe: ModuleUniverse) -> ModuleClass:
    """Members with ``sigma(U) = 0``."""
    assignment = assignment_of(sigma, universe)
    return ModuleClass(universe, frozenset(i for i, sub in enumerate(assignment) if sub.is_zero))


def xi_contains(generator: FiniteModule, module: FiniteModule) -> bool:
    """Whether ``module`` is an epimorphic image of a finite sum of copies of ``generator``."""
    return evaluate(Trace(generator), module).is_whole


def xi_contains_by_epimorphism(generator: FiniteModule, module: FiniteModule) -> bool:
    """
    Search for an epimorphism ``generator^n -> module``.

    Such a map exists exactly when ``module`` is a sum of ``n`` images of
    ``generator``; ``n`` never needs to exceed the composition length.
    """
    if module.is_zero:
        return True
    if generator.is_zero:
        return False
    images = {f.image(whole(generator)) for f in hom_set(generator, module)}
    reached = {zero_submodule(module)}
    for _ in range(module.order.bit_length()):
        grown = {a + b for a in reached for b in images}
        if any(s.is_whole for s in grown):
            return True
        if grown == reached:
            break
        reached = grown
    return False


def _compatibility(
    universe: ModuleUniverse, choices: Sequence[Sequence[Submodule]], i: int, j: int,
) -> List[List[bool]]:
    homs = universe.homs(i, j)
    table = []
    for a in choices[i]:
        images = [f.image(a) for f in homs]
        table.append([all(img <= b for img in images) for b in choices[j]])
    return table


def _all_true(table: List[List[bool]]) -> bool:
    return all(all(row) for row in table)


def enumerate_universe_preradicals(
    universe: ModuleUniverse,
    required: Iterable[str] = (),
    max_assignments: int = DEFAULT_MAX_ASSIGNMENTS,
    log: Optional[logging.Logger] = None,
) -> List[UniversePreradical]:
    """
    Every natural assignment of fully invariant submodules, filtered by flags.

    Classes are assigned in index order and each choice is checked against
    the earlier ones through precomputed hom compatibility tables, so the
    result is in lexicographic order of fully-invariant-submodule indices.
    Pairs of classes whose tables allow every choice are never consulted.

    The cap bounds the partial assignments the search actually visits, not
    the raw product of the choice counts.

    Raises:
        EnumerationCapError: The search visits more than ``max_assignments`` nodes
    """
    log = log or logger
    required = tuple(required)
    choices = [universe.fully_invariant(i) for i in universe.indices]
    n = len(choices)
    log.debug(f"Raw assignment space {math.prod(len(c) for c in choices)}")
    compat = {
        (i, j): _compatibility(universe, choices, i, j)
        for i in range(n) for j in range(n) if i != j
    }
    constraints = [
        [j for j in range(i) if not (_all_true(compat[(i, j)]) and _all_true(compat[(j, i)]))]
        for i in range(n)
    ]
    results: List[UniversePreradical] = []
    picked: List[int] = []
    visited = 0

    def extend(i: int) -> None:
        nonlocal visited
        visited += 1
        if visited > max_assignments:
            log.warning(f"Preradical search visited more than {max_assignments} nodes")
            raise EnumerationCapError(f"preradical search exceeds the cap {max_assignments}")
        if i == n:
            rho = UniversePreradical(universe, tuple(choices[k][picked[k]] for k in range(n)))
            rho._cache["is_preradical"] = True
            if all(rho.flag(name) for name in required):
                results.append(rho)
            return
        for a in range(len(choices[i])):
            if all(compat[(i, j)][a][picked[j]] and compat[(j, i)][picked[j]][a] for j in constraints[i]):
                picked.append(a)
                extend(i + 1)
                picked.pop()

    extend(0)
    log.debug(f"{len(results)} universe preradicals with flags {required or 'none'} ({visited} nodes)")
    return results


def generated_family(universe: ModuleUniverse, kind: str = "pr") -> List[Preradical]:
    """
    Expression preradicals built from the universe, filtered by ``kind``.

    The pool is 0, 1, rad, soc, the ideal t-radicals, trace and reject of
    every member, alpha/omega on every fully invariant submodule, and the
    hat and bar closures of the leaves. Expressions with equal values on the
    universe are kept once.
    """
    ring = universe.ring
    leaves: List[Preradical] = [Zero(), One(), Rad(), Soc()]
    leaves += [IdealTRad(ring, ideal) for ideal in ring.two_sided_ideals]
    for i, module in enumerate(universe.iso_classes):
        if module.is_zero:
            continue
        leaves += [Trace(module), Reject(module)]
        for sub in universe.fully_invariant(i):
            leaves += [Alpha(sub), Omega(sub)]
    pool = leaves + [Hat(s) for s in leaves] + [Bar(s) for s in leaves]
    required = FAMILIES[kind]
    seen = set()
    family = []
    for sigma in pool:
        key = tuple(sub.elements for sub in assignment_of(sigma, universe))
        if key in seen:
            continue
        seen.add(key)
        cache: Dict[str, bool] = {}
        assignment = assignment_of(sigma, universe)
        if all(_decide(name, assignment, universe, cache) for name in required):
            family.append(sigma)
    return family


def ideal_t_radicals(universe: ModuleUniverse) -> List[IdealTRad]:
    """One t-radical per two-sided ideal; for a finite ring these are all the t-radicals."""
    ring = universe.ring
    return [IdealTRad(ring, ideal) for ideal in ring.two_sided_ideals]


def quantifier_family(
    universe: ModuleUniverse,
    kind: str,
    max_assignments: int = DEFAULT_MAX_ASSIGNMENTS,
    log: Optional[logging.Logger] = None,
) -> Tuple[List[Evaluable], Regime]:
    """
    Members of the family ``kind`` for a universal quantifier.

    Falls back to :func:`generated_family` when the exhaustive enumeration
    hits its cap.
    """
    log = log or logger
    try:
        return list(enumerate_universe_preradicals(universe, FAMILIES[kind], max_assignments, log)), Regime.EXHAUSTIVE
    except EnumerationCapError as e:
        log.warning(f"Falling back to the generated {kind} family: {e}")
        return list(generated_family(universe, kind)), Regime.GENERATED
