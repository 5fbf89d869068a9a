"""Box product, comultiplication, totalizer and coprimeness criteria."""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .calculus import xi_contains
from .errors import NotASubmoduleError
from .module import FiniteModule, Submodule, enumerate_submodules, hom_set, quotient, whole
from .preradical import Gamma, Reject, evaluate
from .universe import ModuleUniverse, format_submodule

logger = logging.getLogger(__name__)

CRITERIA = ("by_xi", "by_box", "by_comult", "by_hom")


def _parent(a: Submodule, b: Submodule, module: Optional[FiniteModule]) -> FiniteModule:
    module = module or a.parent
    if a.parent != module or b.parent != module:
        raise NotASubmoduleError("operands are not submodules of the same module")
    return module


def box_product(a: Submodule, b: Submodule, module: Optional[FiniteModule] = None) -> Submodule:
    """
    ``A box_M B``: the preimage in ``M`` of ``gamma_A^M(M/B)``.

    Raises:
        NotASubmoduleError: ``a`` and ``b`` have different parents
    """
    module = _parent(a, b, module)
    target, projection = quotient(module, b)
    return projection.preimage(evaluate(Gamma(a), target))


def comultiplication(a: Submodule, b: Submodule, module: Optional[FiniteModule] = None) -> Submodule:
    """
    ``(A : B)``: the preimage in ``M`` of the rejection of ``M/A`` in ``M/B``.

    Raises:
        NotASubmoduleError: ``a`` and ``b`` have different parents
    """
    module = _parent(a, b, module)
    target, projection = quotient(module, b)
    return projection.preimage(evaluate(Reject(quotient(module, a)[0]), target))


def _has_nonzero_hom(source: FiniteModule, target: FiniteModule) -> bool:
    return any(not f.is_zero for f in hom_set(source, target))


def totalizer(n: Submodule, module: Optional[FiniteModule] = None) -> Submodule:
    """Intersection of the ``B`` with ``Hom(M/N, M/B) = 0``: the least ``U`` with ``(U : N) = M``."""
    module = module or n.parent
    if n.parent != module:
        raise NotASubmoduleError("totalizer of a submodule of another module")
    top = quotient(module, n)[0]
    result = whole(module)
    for b in enumerate_submodules(module):
        if not _has_nonzero_hom(top, quotient(module, b)[0]):
            result = result & b
    return result


def totalizer_violations(n: Submodule) -> List[str]:
    """Re-check ``(Tot : N) = M`` and that every ``B`` with ``(B : N) = M`` contains ``Tot``."""
    module = n.parent
    tot = totalizer(n)
    problems = []
    if not comultiplication(tot, n).is_whole:
        problems.append(f"(Tot : N) != M for N = {format_submodule(n)}")
    for b in enumerate_submodules(module):
        if comultiplication(b, n).is_whole and not tot <= b:
            problems.append(f"B = {format_submodule(b)} has (B : N) = M but does not contain Tot")
    return problems


@dataclass(frozen=True)
class CoprimeVerdict:
    """Four independently computed coprimeness criteria for one module."""

    module: FiniteModule
    by_xi: bool
    by_box: bool
    by_comult: bool
    by_hom: bool
    witnesses: Dict[str, Tuple[Submodule, ...]] = field(default_factory=dict, compare=False)

    def criterion(self, name: str) -> bool:
        return getattr(self, name)

    @property
    def unanimous(self) -> bool:
        return len({self.by_xi, self.by_box, self.by_comult, self.by_hom}) == 1

    def as_dict(self) -> Dict[str, object]:
        return {
            "module": self.module.label,
            **{name: self.criterion(name) for name in CRITERIA},
            "witnesses": {
                name: [format_submodule(s) for s in subs]
                for name, subs in sorted(self.witnesses.items())
            },
        }


def _proper(module: FiniteModule) -> List[Submodule]:
    return [s for s in enumerate_submodules(module) if not s.is_whole]


def _first_pair(proper: List[Submodule], fails) -> Optional[Tuple[Submodule, Submodule]]:
    for l in proper:
        for n in proper:
            if fails(l, n):
                return l, n
    return None


def coprime_verdict(module: FiniteModule, universe: Optional[ModuleUniverse] = None) -> CoprimeVerdict:
    """
    Decide coprimeness of ``module`` by four criteria, none inferred from another.

    ``by_xi``: every nonzero quotient generates ``module``; ``by_box``: no
    proper pair has box product ``M``; ``by_comult``: no proper pair has
    comultiplication ``M``; ``by_hom``: ``Hom(M/L, M/N)`` is nonzero for
    every proper pair. Witnesses are the first failing submodule (pair) in
    submodule order.

    Raises:
        UniverseError: A quotient of ``module`` is missing from ``universe``
    """
    proper = _proper(module)
    if universe is not None:
        for s in proper:
            universe.locate(quotient(module, s)[0])
    witnesses: Dict[str, Tuple[Submodule, ...]] = {}

    xi_witness = next((n for n in proper if not xi_contains(quotient(module, n)[0], module)), None)
    if xi_witness is not None:
        witnesses["by_xi"] = (xi_witness,)

    checks = {
        "by_box": lambda l, n: box_product(l, n).is_whole,
        "by_comult": lambda l, n: comultiplication(l, n).is_whole,
        "by_hom": lambda l, n: not _has_nonzero_hom(quotient(module, l)[0], quotient(module, n)[0]),
    }
    for name, fails in checks.items():
        pair = _first_pair(proper, fails)
        if pair is not None:
            witnesses[name] = pair

    verdict = CoprimeVerdict(
        module=module,
        by_xi="by_xi" not in witnesses,
        by_box="by_box" not in witnesses,
        by_comult="by_comult" not in witnesses,
        by_hom="by_hom" not in witnesses,
        witnesses=witnesses,
    )
    logger.debug(f"Coprime verdict for {module.label}: {verdict.as_dict()}")
    return verdict


def witness_holds(verdict: CoprimeVerdict, name: str) -> bool:
    """Re-verify that the recorded witness for ``name`` really violates the criterion."""
    subs = verdict.witnesses.get(name)
    if subs is None:
        return False
    module = verdict.module
    if name == "by_xi":
        return not xi_contains(quotient(module, subs[0])[0], module)
    l, n = subs
    if name == "by_box":
        return box_product(l, n).is_whole
    if name == "by_comult":
        return comultiplication(l, n).is_whole
    return not _has_nonzero_hom(quotient(module, l)[0], quotient(module, n)[0])
