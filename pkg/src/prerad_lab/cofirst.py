"""Co-first, fully co-first and second modules relative to preradicals."""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Union

from .calculus import Evaluable, UniversePreradical, assignment_of, torsion_class, torsion_free_class
from .classes import ModuleClass
from .module import FiniteModule, Submodule, enumerate_submodules, fully_invariant_submodules, quotient, superfluous
from .preradical import evaluate
from .universe import ModuleUniverse

logger = logging.getLogger(__name__)


class Verdict(Enum):
    """Answer of a module predicate; the zero module gets its own answer."""

    TRUE = "true"
    FALSE = "false"
    ZERO = "zero"

    @classmethod
    def of(cls, value: bool) -> "Verdict":
        return cls.TRUE if value else cls.FALSE

    def __bool__(self) -> bool:
        return self is Verdict.TRUE


def _value(sigma: Evaluable, module: FiniteModule) -> Submodule:
    if isinstance(sigma, UniversePreradical):
        return sigma(module)
    return evaluate(sigma, module)


def _is_torsion(sigma: Evaluable, module: FiniteModule) -> bool:
    if isinstance(sigma, UniversePreradical):
        return sigma.assignment[sigma.universe.index_of(module)].is_whole
    return evaluate(sigma, module).is_whole


def has_torsion_quotient(module: FiniteModule, sigma: Evaluable) -> bool:
    """Whether some nonzero quotient ``M/K`` satisfies ``sigma(M/K) = M/K``."""
    return any(
        _is_torsion(sigma, quotient(module, k)[0])
        for k in enumerate_submodules(module) if not k.is_whole
    )


def is_fully_co_first(module: FiniteModule, sigma: Evaluable) -> Verdict:
    """No nonzero quotient of ``module`` is ``sigma``-torsion."""
    if module.is_zero:
        return Verdict.ZERO
    return Verdict.of(not has_torsion_quotient(module, sigma))


def is_co_first(module: FiniteModule, sigma: Evaluable) -> Verdict:
    """``module`` is ``sigma``-torsion or has no nonzero ``sigma``-torsion quotient."""
    if module.is_zero:
        return Verdict.ZERO
    return Verdict.of(_is_torsion(sigma, module) or not has_torsion_quotient(module, sigma))


def is_second(module: FiniteModule, sigma: Evaluable) -> Verdict:
    """``sigma(M)`` is ``0`` or ``M``."""
    if module.is_zero:
        return Verdict.ZERO
    value = _value(sigma, module)
    return Verdict.of(value.is_zero or value.is_whole)


def _for_all(predicate, module: FiniteModule, family: Sequence[Evaluable]) -> Verdict:
    if module.is_zero:
        return Verdict.ZERO
    return Verdict.of(all(predicate(module, sigma) for sigma in family))


def is_family_co_first(module: FiniteModule, family: Sequence[Evaluable]) -> Verdict:
    return _for_all(is_co_first, module, family)


def is_family_fully_co_first(module: FiniteModule, family: Sequence[Evaluable]) -> Verdict:
    return _for_all(is_fully_co_first, module, family)


def is_family_second(module: FiniteModule, family: Sequence[Evaluable]) -> Verdict:
    return _for_all(is_second, module, family)


def co_first_witness(module: FiniteModule, family: Sequence[Evaluable]) -> Optional[Evaluable]:
    """First member of ``family`` for which ``module`` is not co-first."""
    return next((s for s in family if is_co_first(module, s) is Verdict.FALSE), None)


def is_dihollow(module: FiniteModule) -> bool:
    """Every proper fully invariant submodule is superfluous."""
    return all(superfluous(n) for n in fully_invariant_submodules(module) if not n.is_whole)


@dataclass(frozen=True)
class ClassTriple:
    """Per-preradical classes of a universe: P, P-bar and S with T and F."""

    sigma: Union[Evaluable, tuple]
    P: ModuleClass
    P_bar: ModuleClass
    S: ModuleClass
    T: ModuleClass
    F: ModuleClass

    def identity_violations(self) -> List[str]:
        problems = []
        if self.P_bar != self.P.union(self.T):
            problems.append(f"P-bar {self.P_bar} != P | T = {self.P.union(self.T)}")
        if self.S != self.T.union(self.F):
            problems.append(f"S {self.S} != T | F = {self.T.union(self.F)}")
        return problems


def class_triple(sigma: Evaluable, universe: ModuleUniverse) -> ClassTriple:
    """
    Compute P, P-bar and S member by member; 0 belongs to all three.

    Quotients are read off the universe quotient table, so only the values of
    ``sigma`` on class representatives are needed.
    """
    zero = universe.zero_index
    assignment = assignment_of(sigma, universe)
    torsion = {i for i, sub in enumerate(assignment) if sub.is_whole}
    p, p_bar, s = {zero}, {zero}, {zero}
    for i in universe.indices:
        if i == zero:
            continue
        fully = not (universe.quotient_classes(i) - {zero}) & torsion
        if fully:
            p.add(i)
        if fully or i in torsion:
            p_bar.add(i)
        if assignment[i].is_zero or assignment[i].is_whole:
            s.add(i)
    return ClassTriple(
        sigma=sigma,
        P=ModuleClass(universe, frozenset(p)),
        P_bar=ModuleClass(universe, frozenset(p_bar)),
        S=ModuleClass(universe, frozenset(s)),
        T=torsion_class(sigma, universe),
        F=torsion_free_class(sigma, universe),
    )


def family_triple(family: Sequence[Evaluable], universe: ModuleUniverse) -> ClassTriple:
    """Classes of a family: intersections of P and P-bar, S, T and F over its members."""
    triples = [class_triple(sigma, universe) for sigma in family]
    everything = frozenset(universe.indices)

    def meet(name: str) -> ModuleClass:
        members = everything
        for t in triples:
            members = members & getattr(t, name).members
        return ModuleClass(universe, members)

    return ClassTriple(
        sigma=tuple(family),
        P=meet("P"),
        P_bar=meet("P_bar"),
        S=meet("S"),
        T=meet("T"),
        F=meet("F"),
    )
