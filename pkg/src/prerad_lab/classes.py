"""Classes of modules inside a universe: pseudocomplements and conatural classes."""
import logging
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence

from .errors import EnumerationCapError, NotQuotientClosedError
from .universe import ModuleUniverse

logger = logging.getLogger(__name__)

DEFAULT_MAX_DOWN_SETS = 200_000


@dataclass(frozen=True)
class ModuleClass:
    """A set of universe iso-classes, closed under isomorphism by construction."""

    universe: ModuleUniverse = field(compare=False, repr=False)
    members: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))

    def __contains__(self, i: int) -> bool:
        return i in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __le__(self, other: "ModuleClass") -> bool:
        return self.members <= other.members

    def __lt__(self, other: "ModuleClass") -> bool:
        return self.members < other.members

    def meet(self, other: "ModuleClass") -> "ModuleClass":
        return ModuleClass(self.universe, self.members & other.members)

    def join(self, other: "ModuleClass") -> "ModuleClass":
        """Join inside the conatural lattice: the double pseudocomplement of the union."""
        union = ModuleClass(self.universe, self.members | other.members)
        return perp(perp(union))

    def union(self, other: "ModuleClass") -> "ModuleClass":
        return ModuleClass(self.universe, self.members | other.members)

    def complement(self) -> "ModuleClass":
        return perp(self)

    __and__ = meet
    __or__ = union

    @property
    def is_trivial(self) -> bool:
        """Only the zero module."""
        return self.members <= {self.universe.zero_index}

    @property
    def is_whole(self) -> bool:
        return len(self.members) == len(self.universe)

    @property
    def is_quotient_closed(self) -> bool:
        return all(self.universe.quotient_classes(i) <= self.members for i in self.members)

    def names(self) -> List[str]:
        return [self.universe.name(i) for i in self]

    def __str__(self) -> str:
        return "{" + ", ".join(self.names()) + "}"


def make_class(universe: ModuleUniverse, members: Iterable[int]) -> ModuleClass:
    return ModuleClass(universe, frozenset(members))


def zero_class(universe: ModuleUniverse) -> ModuleClass:
    return ModuleClass(universe, frozenset({universe.zero_index}))


def whole_class(universe: ModuleUniverse) -> ModuleClass:
    return ModuleClass(universe, frozenset(universe.indices))


def quotient_closure(cls: ModuleClass) -> ModuleClass:
    universe = cls.universe
    members = set()
    for i in cls.members:
        members |= universe.quotient_classes(i)
    return ModuleClass(universe, frozenset(members))


def perp(cls: ModuleClass) -> ModuleClass:
    """
    Pseudocomplement in the lattice of quotient-closed classes.

    Members with no nonzero quotient in ``cls``.

    Raises:
        NotQuotientClosedError: ``cls`` is not closed under quotients
    """
    if not cls.is_quotient_closed:
        raise NotQuotientClosedError(f"perp of a class that is not quotient closed: {cls}")
    universe = cls.universe
    nonzero = cls.members - {universe.zero_index}
    return ModuleClass(universe, frozenset(
        i for i in universe.indices if not (universe.quotient_classes(i) & nonzero)
    ))


def is_conatural(cls: ModuleClass) -> bool:
    """Quotient closed and equal to its double pseudocomplement."""
    return cls.is_quotient_closed and perp(perp(cls)) == cls


def satisfies_cn(cls: ModuleClass) -> bool:
    """
    Condition (CN): a member all of whose nonzero quotients share a nonzero
    quotient with some module of ``cls`` belongs to ``cls``.
    """
    universe = cls.universe
    zero = universe.zero_index
    reachable = set()
    for c in cls.members:
        reachable |= universe.quotient_classes(c)
    reachable.discard(zero)
    for m in universe.indices:
        if m in cls.members:
            continue
        shares = all(
            universe.quotient_classes(n) & reachable
            for n in universe.quotient_classes(m) if n != zero
        )
        if shares:
            return False
    return True


def pseudocomplement_violations(cls: ModuleClass, quotient_closed: Sequence[ModuleClass]) -> List[str]:
    """Check that ``perp(cls)`` meets ``cls`` trivially and is the largest such class."""
    complement = perp(cls)
    problems = []
    if not cls.meet(complement).is_trivial:
        problems.append(f"{cls} meets its pseudocomplement in {cls.meet(complement)}")
    for other in quotient_closed:
        if cls.meet(other).is_trivial and not other <= complement:
            problems.append(f"{other} meets {cls} trivially but is not inside {complement}")
    return problems


def quotient_closed_classes(
    universe: ModuleUniverse,
    max_down_sets: int = DEFAULT_MAX_DOWN_SETS,
) -> List[ModuleClass]:
    """
    All quotient-closed classes containing 0 (down-sets of the quotient order).

    Classes are decided in index order; a class may join only when its proper
    quotients are already in.

    Raises:
        EnumerationCapError: More than ``max_down_sets`` classes
    """
    n = len(universe)
    below = [universe.quotient_classes(i) - {i} for i in universe.indices]
    found: List[FrozenSet[int]] = []

    def extend(i: int, chosen: FrozenSet[int]) -> None:
        if i == n:
            if len(found) >= max_down_sets:
                raise EnumerationCapError(f"more than {max_down_sets} quotient-closed classes")
            found.append(chosen)
            return
        if i == universe.zero_index:
            extend(i + 1, chosen | {i})
            return
        extend(i + 1, chosen)
        if below[i] <= chosen:
            extend(i + 1, chosen | {i})

    extend(0, frozenset())
    classes = [ModuleClass(universe, members) for members in found]
    return sorted(classes, key=lambda c: (len(c), sorted(c.members)))


def conatural_classes(
    universe: ModuleUniverse,
    max_down_sets: int = DEFAULT_MAX_DOWN_SETS,
    log: Optional[logging.Logger] = None,
) -> List[ModuleClass]:
    """
    The universe-conatural classes, ordered by size and then members.

    Raises:
        EnumerationCapError: Too many quotient-closed classes to scan
    """
    log = log or logger
    candidates = quotient_closed_classes(universe, max_down_sets)
    result = [c for c in candidates if perp(perp(c)) == c]
    log.debug(f"{len(result)} conatural classes among {len(candidates)} quotient-closed classes")
    return result


def boolean_lattice_violations(classes: Sequence[ModuleClass]) -> List[str]:
    """
    Check that the conatural classes form a Boolean lattice with complement
    ``perp``, meet ``&`` and join ``perp(perp(C | D))``.
    """
    if not classes:
        return ["no classes"]
    universe = classes[0].universe
    members = set(classes)
    problems = []
    for required in (zero_class(universe), whole_class(universe)):
        if required not in members:
            problems.append(f"missing {required}")
    for c in classes:
        complement = c.complement()
        if complement not in members:
            problems.append(f"complement of {c} is not conatural")
        if not c.meet(complement).is_trivial or not c.join(complement).is_whole:
            problems.append(f"{c} and {complement} are not complementary")
        for d in classes:
            if c.meet(d) not in members:
                problems.append(f"{c} & {d} is not conatural")
            if c.join(d) not in members:
                problems.append(f"{c} v {d} is not conatural")
    for a in classes:
        for b in classes:
            for c in classes:
                if a.meet(b.join(c)) != a.meet(b).join(a.meet(c)):
                    problems.append(f"distributivity fails at {a}, {b}, {c}")
    return problems


def to_dot(classes: Sequence[ModuleClass], name: str = "conat") -> str:
    """Hasse diagram of ``classes`` under inclusion in Graphviz DOT."""
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for k, c in enumerate(classes):
        label = str(c).replace('"', '\\"')
        lines.append(f'  c{k} [label="{label}"];')
    for k, c in enumerate(classes):
        for m, d in enumerate(classes):
            if c < d and not any(c < e < d for e in classes):
                lines.append(f"  c{k} -> c{m};")
    lines.append("}")
    return "\n".join(lines) + "\n"
