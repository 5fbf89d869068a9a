"""Preradical expressions and their evaluation on finite modules.

A preradical is an immutable expression tree. ``evaluate(sigma, U)`` returns
the submodule ``sigma(U)`` of ``U``; results are memoized per (expression,
module) pair.
"""
import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, Optional, Tuple, Union

from .errors import NotFullyInvariantError, RingMismatchError, SpecParseError
from .module import (
    FiniteModule,
    Submodule,
    hom_set,
    is_fully_invariant,
    quotient,
    radical,
    socle,
    span,
    submodule_as_module,
    whole,
    zero_submodule,
)
from .ring import FiniteRing, _split_top_level
from .universe import format_submodule, parse_module, parse_submodule

logger = logging.getLogger(__name__)


class Preradical:
    """Base class of the expression nodes."""

    tag = ""

    @property
    def ring(self) -> Optional[FiniteRing]:
        """The ring of the leaves, ``None`` for ring-free expressions."""
        for child in self.children:
            if child.ring is not None:
                return child.ring
        return None

    @property
    def children(self) -> Tuple["Preradical", ...]:
        return ()

    def __call__(self, module: FiniteModule) -> Submodule:
        return evaluate(self, module)

    def _eval(self, module: FiniteModule) -> Submodule:
        raise NotImplementedError

    def __str__(self) -> str:
        return to_text(self)


@dataclass(frozen=True)
class Zero(Preradical):
    tag = "zero"

    def _eval(self, module):
        return zero_submodule(module)


@dataclass(frozen=True)
class One(Preradical):
    tag = "one"

    def _eval(self, module):
        return whole(module)


@dataclass(frozen=True)
class _Leaf(Preradical):
    sub: Submodule

    @property
    def ring(self):
        return self.sub.parent.ring

    @property
    def source(self) -> FiniteModule:
        return self.sub.parent


@dataclass(frozen=True)
class Alpha(_Leaf):
    """``U -> sum f(N)`` over ``f: M -> U``; ``N`` must be fully invariant in ``M``."""

    tag = "alpha"

    def __post_init__(self):
        if not is_fully_invariant(self.sub):
            raise NotFullyInvariantError(f"alpha: {self.sub} is not fully invariant")

    def _eval(self, module):
        return span(module, [f(g) for f in hom_set(self.source, module) for g in self.sub.generators])


def _intersect_preimages(sub: Submodule, module: FiniteModule) -> Submodule:
    result = whole(module)
    for f in hom_set(module, sub.parent):
        result = result & f.preimage(sub)
    return result


@dataclass(frozen=True)
class Gamma(_Leaf):
    """``U -> intersection of f^-1(N)`` over ``f: U -> M``; ``N`` may be any submodule."""

    tag = "gamma"

    def _eval(self, module):
        return _intersect_preimages(self.sub, module)


@dataclass(frozen=True)
class Omega(_Leaf):
    """Same formula as :class:`Gamma`, restricted to fully invariant ``N``."""

    tag = "omega"

    def __post_init__(self):
        if not is_fully_invariant(self.sub):
            raise NotFullyInvariantError(f"omega: {self.sub} is not fully invariant")

    def _eval(self, module):
        return _intersect_preimages(self.sub, module)


@dataclass(frozen=True)
class Trace(Preradical):
    """``tr_M``, the sum of the images of all maps ``M -> U``."""

    module: FiniteModule
    tag = "trace"

    @property
    def ring(self):
        return self.module.ring

    def _eval(self, module):
        return span(module, [f(g) for f in hom_set(self.module, module) for g in self.module.ring_generators])


@dataclass(frozen=True)
class Reject(Preradical):
    """Rejection of ``M``: the intersection of the kernels of all maps ``U -> M``."""

    module: FiniteModule
    tag = "reject"

    @property
    def ring(self):
        return self.module.ring

    def _eval(self, module):
        return _intersect_preimages(zero_submodule(self.module), module)


@dataclass(frozen=True)
class IdealTRad(Preradical):
    """``U -> I U`` for a two-sided ideal ``I``."""

    ideal_ring: FiniteRing
    ideal: frozenset
    tag = "ideal"

    def __post_init__(self):
        closed = self.ideal_ring.ideal_closure(self.ideal)
        if frozenset(closed) != frozenset(self.ideal):
            raise NotFullyInvariantError(f"{sorted(self.ideal)} is not a two-sided ideal")
        object.__setattr__(self, "ideal", frozenset(self.ideal))

    @property
    def ring(self):
        return self.ideal_ring

    def _eval(self, module):
        return span(module, [module.act(i, g) for i in sorted(self.ideal) for g in module.ring_generators])


@dataclass(frozen=True)
class Rad(Preradical):
    tag = "rad"

    def _eval(self, module):
        return radical(module)


@dataclass(frozen=True)
class Soc(Preradical):
    tag = "soc"

    def _eval(self, module):
        return socle(module)


@dataclass(frozen=True)
class Meet(Preradical):
    """Finite meet; the empty meet is :class:`One`."""

    args: Tuple[Preradical, ...]
    tag = "meet"

    @property
    def children(self):
        return self.args

    def _eval(self, module):
        result = whole(module)
        for arg in self.args:
            result = result & evaluate(arg, module)
        return result


@dataclass(frozen=True)
class Join(Preradical):
    """Finite join; the empty join is :class:`Zero`."""

    args: Tuple[Preradical, ...]
    tag = "join"

    @property
    def children(self):
        return self.args

    def _eval(self, module):
        result = zero_submodule(module)
        for arg in self.args:
            result = result + evaluate(arg, module)
        return result


def evaluate_on_submodule(sigma: Preradical, sub: Submodule) -> Submodule:
    """``sigma(sub)`` as a submodule of ``sub.parent``."""
    inner, inclusion = submodule_as_module(sub)
    return inclusion.image(evaluate(sigma, inner))


@dataclass(frozen=True)
class Compose(Preradical):
    """``U -> outer(inner(U))``."""

    outer: Preradical
    inner: Preradical
    tag = "compose"

    @property
    def children(self):
        return (self.outer, self.inner)

    def _eval(self, module):
        return evaluate_on_submodule(self.outer, evaluate(self.inner, module))


@dataclass(frozen=True)
class Colon(Preradical):
    """``(sigma : tau)(U)``, the preimage in ``U`` of ``sigma(U / tau(U))``."""

    outer: Preradical
    inner: Preradical
    tag = "colon"

    @property
    def children(self):
        return (self.outer, self.inner)

    def _eval(self, module):
        target, projection = quotient(module, evaluate(self.inner, module))
        return projection.preimage(evaluate(self.outer, target))


@dataclass(frozen=True)
class Hat(Preradical):
    """Largest idempotent preradical below ``arg``: iterate ``arg`` down to a fixed point."""

    arg: Preradical
    tag = "hat"

    @property
    def children(self):
        return (self.arg,)

    def _eval(self, module):
        current = evaluate(self.arg, module)
        while True:
            smaller = evaluate_on_submodule(self.arg, current)
            if smaller == current:
                return current
            current = smaller


@dataclass(frozen=True)
class Bar(Preradical):
    """Least radical above ``arg``: iterate ``(arg : .)`` up to a fixed point."""

    arg: Preradical
    tag = "bar"

    @property
    def children(self):
        return (self.arg,)

    def _eval(self, module):
        current = evaluate(self.arg, module)
        while True:
            target, projection = quotient(module, current)
            larger = projection.preimage(evaluate(self.arg, target))
            if larger == current:
                return current
            current = larger


def evaluate(sigma: Preradical, module: FiniteModule) -> Submodule:
    """
    Evaluate ``sigma`` on ``module``.

    Raises:
        RingMismatchError: The expression leaves live over another ring
    """
    ring = sigma.ring
    if ring is not None and ring is not module.ring:
        raise RingMismatchError(f"{to_text(sigma)} is defined over {ring.preset_tag}, not {module.ring.preset_tag}")
    return _evaluate(sigma, module)


@lru_cache(maxsize=None)
def _evaluate(sigma: Preradical, module: FiniteModule) -> Submodule:
    if module.is_zero:
        return zero_submodule(module)
    return sigma._eval(module)


def ideal_t_radical(ring: FiniteRing, generators) -> IdealTRad:
    """The t-radical of the two-sided ideal generated by ``generators``."""
    return IdealTRad(ring, frozenset(ring.ideal_closure(generators)))


def trace(module: FiniteModule) -> Trace:
    return Trace(module)


def reject(module: FiniteModule) -> Reject:
    return Reject(module)


# Text form, e.g. "meet(trace(Z2),ideal(2))" or "alpha(Z2+Z4:0,2)"

_NULLARY = {"zero": Zero, "one": One, "rad": Rad, "soc": Soc}


def _module_text(module: FiniteModule) -> str:
    name = module.name or module.label
    try:
        if parse_module(module.ring, name) == module:
            return name
    except SpecParseError:
        pass
    raise SpecParseError(f"module {module.label} has no spec text; use the JSON form")


def to_text(sigma: Preradical) -> str:
    if isinstance(sigma, (Zero, One, Rad, Soc)):
        return sigma.tag
    if isinstance(sigma, _Leaf):
        try:
            module = _module_text(sigma.source)
        except SpecParseError:
            module = sigma.source.label
        return f"{sigma.tag}({module}:{format_submodule(sigma.sub)})"
    if isinstance(sigma, (Trace, Reject)):
        try:
            module = _module_text(sigma.module)
        except SpecParseError:
            module = sigma.module.label
        return f"{sigma.tag}({module})"
    if isinstance(sigma, IdealTRad):
        return f"ideal({','.join(str(i) for i in sorted(sigma.ideal))})"
    return f"{sigma.tag}({','.join(to_text(c) for c in sigma.children)})"


def parse_preradical(ring: FiniteRing, text: str) -> Preradical:
    """
    Parse the text form of a preradical expression.

    Raises:
        SpecParseError: Malformed expression
        NotFullyInvariantError: alpha/omega on a submodule that is not fully invariant
    """
    text = text.replace(" ", "")
    if text in _NULLARY:
        return _NULLARY[text]()
    head, _, rest = text.partition("(")
    if not rest.endswith(")"):
        raise SpecParseError(f"invalid preradical '{text}'")
    body = rest[:-1]
    if head in ("alpha", "omega", "gamma"):
        module_spec, _, generators = body.partition(":")
        module = parse_module(ring, module_spec)
        return {"alpha": Alpha, "omega": Omega, "gamma": Gamma}[head](parse_submodule(module, generators))
    if head in ("trace", "reject"):
        module = parse_module(ring, body)
        return Trace(module) if head == "trace" else Reject(module)
    if head == "ideal":
        try:
            generators = [int(g) for g in body.split(",") if g]
        except ValueError:
            raise SpecParseError(f"invalid ideal generators '{body}'") from None
        if any(not 0 <= g < ring.order for g in generators):
            raise SpecParseError(f"ideal generators out of range in '{text}'")
        return ideal_t_radical(ring, generators)
    args = tuple(parse_preradical(ring, a) for a in _split_top_level(body) if a)
    if head in ("meet", "join"):
        return Meet(args) if head == "meet" else Join(args)
    if head in ("compose", "colon") and len(args) == 2:
        return Compose(*args) if head == "compose" else Colon(*args)
    if head in ("hat", "bar") and len(args) == 1:
        return Hat(args[0]) if head == "hat" else Bar(args[0])
    raise SpecParseError(f"invalid preradical '{text}'")


# Constructor-tagged JSON form

def _module_json(module: FiniteModule) -> Union[str, Dict[str, Any]]:
    try:
        return _module_text(module)
    except SpecParseError:
        return {
            "cyclic_orders": list(module.cyclic_orders),
            "action": [[list(row) for row in matrix] for matrix in module.action],
        }


def _module_from_json(ring: FiniteRing, data) -> FiniteModule:
    if isinstance(data, str):
        return parse_module(ring, data)
    try:
        return FiniteModule(ring, tuple(data["cyclic_orders"]), tuple(
            tuple(tuple(row) for row in matrix) for matrix in data["action"]
        ))
    except (KeyError, TypeError) as e:
        raise SpecParseError(f"invalid module object: {e}") from None


def to_json(sigma: Preradical) -> Dict[str, Any]:
    if isinstance(sigma, (Zero, One, Rad, Soc)):
        return {"op": sigma.tag}
    if isinstance(sigma, _Leaf):
        return {
            "op": sigma.tag,
            "module": _module_json(sigma.source),
            "generators": [list(g) for g in sigma.sub.generators],
        }
    if isinstance(sigma, (Trace, Reject)):
        return {"op": sigma.tag, "module": _module_json(sigma.module)}
    if isinstance(sigma, IdealTRad):
        return {"op": "ideal", "ideal": sorted(sigma.ideal)}
    return {"op": sigma.tag, "args": [to_json(c) for c in sigma.children]}


def from_json(ring: FiniteRing, data: Union[str, Dict[str, Any]]) -> Preradical:
    """
    Rebuild an expression from :func:`to_json` output (or its JSON text).

    Raises:
        SpecParseError: Unknown constructor or malformed node
    """
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as e:
            raise SpecParseError(f"invalid preradical JSON: {e}") from None
    if not isinstance(data, dict) or "op" not in data:
        raise SpecParseError(f"preradical node without 'op': {data!r}")
    op = data["op"]
    if op in _NULLARY:
        return _NULLARY[op]()
    if op in ("alpha", "omega", "gamma"):
        module = _module_from_json(ring, data.get("module"))
        sub = span(module, [tuple(g) for g in data.get("generators", [])])
        return {"alpha": Alpha, "omega": Omega, "gamma": Gamma}[op](sub)
    if op in ("trace", "reject"):
        module = _module_from_json(ring, data.get("module"))
        return Trace(module) if op == "trace" else Reject(module)
    if op == "ideal":
        return ideal_t_radical(ring, data.get("ideal", []))
    args = tuple(from_json(ring, a) for a in data.get("args", []))
    if op in ("meet", "join"):
        return Meet(args) if op == "meet" else Join(args)
    if op in ("compose", "colon") and len(args) == 2:
        return Compose(*args) if op == "compose" else Colon(*args)
    if op in ("hat", "bar") and len(args) == 1:
        return Hat(args[0]) if op == "hat" else Bar(args[0])
    raise SpecParseError(f"unknown preradical constructor '{op}'")
