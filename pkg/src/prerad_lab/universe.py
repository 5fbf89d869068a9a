"""Bounded, quotient-closed universes of finite modules."""
import itertools
import logging
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from .errors import SpecParseError, UniverseError
from .module import (
    Element,
    FiniteModule,
    ModuleMorphism,
    Submodule,
    are_isomorphic,
    direct_sum,
    enumerate_submodules,
    span,
    whole,
    zero_submodule,
    fully_invariant_submodules,
    hom_set,
    indecomposable_projectives,
    left_ideal_module,
    quotient,
    regular_module,
    simple_modules,
    submodule_as_module,
    zero_module,
)
from .ring import FiniteRing

logger = logging.getLogger(__name__)

DEFAULT_MAX_ORDER = 16
DEFAULT_SUM_ARITY = 2
DEFAULT_MAX_CLASSES = 40

_TERM = re.compile(r"^(R|0|Z(\d+)|S(\d+)|P(\d+))(\^(\d+))?$")


def cyclic_module(ring: FiniteRing, d: int) -> FiniteModule:
    """``R / dR``; for ``zn:n`` with ``d | n`` this is ``Z/d``."""
    if d < 2 or ring.characteristic % d:
        raise SpecParseError(f"Z{d}: d must be >= 2 and divide the characteristic {ring.characteristic}")
    ideal = left_ideal_module(ring, {ring.multiple(d, r) for r in ring.elements})
    module, _ = quotient(ideal.parent, ideal)
    return module


def _term(ring: FiniteRing, text: str) -> FiniteModule:
    match = _TERM.match(text)
    if not match:
        raise SpecParseError(f"invalid module spec term '{text}'")
    base, d, s, p, _, power = match.groups()
    if base == "R":
        module = regular_module(ring)
    elif base == "0":
        module = zero_module(ring)
    elif d is not None:
        module = cyclic_module(ring, int(d))
    else:
        projectives = indecomposable_projectives(ring)
        i = int(s if s is not None else p)
        if i >= len(projectives):
            raise SpecParseError(f"'{text}': ring has only {len(projectives)} simple modules")
        module = projectives[i][1] if s is not None else projectives[i][0]
    if power is not None:
        k = int(power)
        if k < 1:
            raise SpecParseError(f"'{text}': exponent must be positive")
        return direct_sum(*([module] * k), name=text)
    return module


def parse_module(ring: FiniteRing, spec: Union[str, FiniteModule]) -> FiniteModule:
    """
    Build a module from a spec such as ``R``, ``Z4``, ``S0``, ``P1``, ``Z2+Z4`` or ``Z2^3``.

    Raises:
        SpecParseError: Malformed spec
    """
    if isinstance(spec, FiniteModule):
        return spec
    terms = [t.strip() for t in str(spec).replace(" ", "").split("+")]
    if not terms or any(not t for t in terms):
        raise SpecParseError(f"invalid module spec '{spec}'")
    modules = [_term(ring, t) for t in terms]
    if len(modules) == 1:
        return modules[0]
    return direct_sum(*modules, name=str(spec).replace(" ", ""))


def parse_submodule(module: FiniteModule, text: str) -> Submodule:
    """
    Parse a submodule given by generators, e.g. ``2`` or ``1,0;0,2``.

    ``0`` (or an empty string) is the zero submodule and ``*`` the whole module.

    Raises:
        SpecParseError: Malformed generator list or wrong coordinate count
    """
    text = text.replace(" ", "")
    if text in ("", "0"):
        return zero_submodule(module)
    if text == "*":
        return whole(module)
    generators = []
    for chunk in text.split(";"):
        try:
            coords = tuple(int(c) for c in chunk.split(","))
        except ValueError:
            raise SpecParseError(f"invalid generator '{chunk}'") from None
        if len(coords) != module.rank:
            raise SpecParseError(
                f"generator '{chunk}' needs {module.rank} coordinates for {module.label}"
            )
        generators.append(tuple(c % d for c, d in zip(coords, module.cyclic_orders)))
    return span(module, generators)


def format_element(x: Element) -> str:
    return ",".join(str(a) for a in x) if x else "0"


def format_submodule(sub: Submodule) -> str:
    """Inverse of :func:`parse_submodule` on generators."""
    if sub.is_zero:
        return "0"
    return ";".join(format_element(g) for g in sub.generators)


@dataclass
class ModuleUniverse:
    """A finite set of pairwise non-isomorphic modules closed under quotients.

    Hom-sets are stored in a write-once cache keyed by ordered index pairs.
    """

    ring: FiniteRing
    iso_classes: Tuple[FiniteModule, ...]
    max_order: int
    sum_arity: int
    closure_flags: Dict[str, object]
    names: Tuple[str, ...] = ()
    hom_cache: Dict[Tuple[int, int], Tuple[ModuleMorphism, ...]] = field(default_factory=dict, repr=False)
    _located: Dict[FiniteModule, Tuple[int, ModuleMorphism]] = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return len(self.iso_classes)

    def __getitem__(self, i: int) -> FiniteModule:
        return self.iso_classes[i]

    @property
    def indices(self) -> range:
        return range(len(self.iso_classes))

    def name(self, i: int) -> str:
        return self.names[i] if self.names else self.iso_classes[i].label

    @cached_property
    def zero_index(self) -> int:
        return next(i for i, m in enumerate(self.iso_classes) if m.is_zero)

    @cached_property
    def regular_index(self) -> int:
        return self.locate(regular_module(self.ring))[0]

    @property
    def parameters(self) -> Dict[str, object]:
        return {
            "ring": self.ring.preset_tag,
            "max_order": self.max_order,
            "sum_arity": self.sum_arity,
            "classes": len(self),
            **{k: v for k, v in sorted(self.closure_flags.items())},
        }

    def homs(self, i: int, j: int) -> Tuple[ModuleMorphism, ...]:
        key = (i, j)
        if key not in self.hom_cache:
            self.hom_cache[key] = tuple(hom_set(self.iso_classes[i], self.iso_classes[j]))
        return self.hom_cache[key]

    def submodules(self, i: int) -> List[Submodule]:
        return enumerate_submodules(self.iso_classes[i])

    def fully_invariant(self, i: int) -> List[Submodule]:
        return fully_invariant_submodules(self.iso_classes[i])

    def locate(self, module: FiniteModule) -> Tuple[int, ModuleMorphism]:
        """
        Find the class of ``module`` together with an isomorphism onto its representative.

        Raises:
            UniverseError: No member is isomorphic to ``module``
        """
        hit = self._located.get(module)
        if hit is not None:
            return hit
        if module.ring is not self.ring:
            raise UniverseError("module over a different ring")
        for i, rep in enumerate(self.iso_classes):
            if rep.order != module.order:
                continue
            iso, witness = are_isomorphic(module, rep)
            if iso:
                self._located[module] = (i, witness)
                return i, witness
        raise UniverseError(f"{module.label} is not isomorphic to any universe member")

    def index_of(self, module: FiniteModule) -> int:
        return self.locate(module)[0]

    @cached_property
    def _quotient_table(self) -> Dict[Tuple[int, FrozenSet[Element]], int]:
        table = {}
        for i, rep in enumerate(self.iso_classes):
            for sub in self.submodules(i):
                table[(i, sub.elements)] = self.index_of(quotient(rep, sub)[0])
        return table

    def quotient_index(self, i: int, sub: Submodule) -> int:
        """Class of ``M_i / sub``."""
        return self._quotient_table[(i, sub.elements)]

    def quotient_classes(self, i: int) -> FrozenSet[int]:
        """Classes of all quotients of ``M_i`` (itself and 0 included)."""
        return self._quotient_sets[i]

    @cached_property
    def _quotient_sets(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(
            frozenset(self._quotient_table[(i, s.elements)] for s in self.submodules(i))
            for i in self.indices
        )

    def proper_quotients(self, i: int) -> FrozenSet[int]:
        """Classes of ``M_i / K`` for nonzero ``K``."""
        return frozenset(
            self._quotient_table[(i, s.elements)] for s in self.submodules(i) if not s.is_zero
        )

    def verify(self) -> None:
        """
        Assert the closure invariants.

        Raises:
            UniverseError: A quotient is missing or 0 / R are absent
        """
        if not any(m.is_zero for m in self.iso_classes):
            raise UniverseError("universe does not contain the zero module")
        self.regular_index
        self._quotient_table


def _class_names(ring: FiniteRing, classes: Sequence[FiniteModule]) -> Tuple[str, ...]:
    cyclic = ring.characteristic == ring.order
    simples = simple_modules(ring)
    names = []
    for i, m in enumerate(classes):
        if m.is_zero:
            names.append("0")
        elif cyclic:
            names.append("+".join(f"Z{d}" for d in m.cyclic_orders))
        elif are_isomorphic(m, regular_module(ring))[0]:
            names.append("R")
        else:
            simple = next((k for k, s in enumerate(simples) if are_isomorphic(m, s)[0]), None)
            names.append(f"S{simple}" if simple is not None else f"M{i}[{m.label}]")
    return tuple(names)


def build_universe(
    ring: FiniteRing,
    seeds: Iterable[Union[str, FiniteModule]] = ("R",),
    max_order: int = DEFAULT_MAX_ORDER,
    sum_arity: int = DEFAULT_SUM_ARITY,
    max_classes: int = DEFAULT_MAX_CLASSES,
    submodule_closure: bool = True,
    log: Optional[logging.Logger] = None,
) -> ModuleUniverse:
    """
    Close the seeds under quotients (and submodules) and bounded direct sums.

    Direct sums of up to ``sum_arity`` members of the seed closure are added
    when their order is at most ``max_order``; the result is closed again and
    deduplicated up to isomorphism.

    Raises:
        UniverseError: Missing regular seed, bound below |R| or class cap exceeded
    """
    log = log or logger
    regular = regular_module(ring)
    if max_order < ring.order:
        raise UniverseError(f"max_order {max_order} is smaller than |R| = {ring.order}")
    seed_modules = [parse_module(ring, s) for s in seeds]
    if not any(are_isomorphic(m, regular)[0] for m in seed_modules):
        raise UniverseError("seeds must include the regular module R")

    members: List[FiniteModule] = []

    def add(module: FiniteModule) -> bool:
        for rep in members:
            if rep.order == module.order and are_isomorphic(module, rep)[0]:
                return False
        if len(members) >= max_classes:
            raise UniverseError(f"universe closure exceeds the cap of {max_classes} classes")
        members.append(module)
        return True

    def close(start: int) -> None:
        position = start
        while position < len(members):
            module = members[position]
            for sub in enumerate_submodules(module):
                add(quotient(module, sub)[0])
                if submodule_closure:
                    add(submodule_as_module(sub)[0])
            position += 1

    add(zero_module(ring))
    for m in seed_modules:
        add(m)
    close(0)
    base = [m for m in members if not m.is_zero]
    mark = len(members)
    for arity in range(2, sum_arity + 1):
        for combo in itertools.combinations_with_replacement(range(len(base)), arity):
            order = 1
            for k in combo:
                order *= base[k].order
            if order <= max_order:
                add(direct_sum(*(base[k] for k in combo)))
    close(mark)

    members.sort(key=lambda m: (m.order, m.cyclic_orders, m.action))
    universe = ModuleUniverse(
        ring=ring,
        iso_classes=tuple(members),
        max_order=max_order,
        sum_arity=sum_arity,
        closure_flags={"quotients": True, "submodules": submodule_closure},
        names=_class_names(ring, members),
    )
    universe.verify()
    log.info(f"Universe over {ring.preset_tag}: {len(universe)} classes (max_order={max_order}, sum_arity={sum_arity})")
    return universe
