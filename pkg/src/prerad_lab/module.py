"""Finite left modules, submodules and module morphisms.

A module is presented as a direct sum of cyclic groups ``Z/d_1 + ... + Z/d_k``
with, for each ring element ``r``, the images ``r * e_i`` of the generators.
Elements are coordinate tuples.
"""
import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Callable, Dict, FrozenSet, Hashable, Iterable, List, Optional, Sequence, Tuple

from .errors import (
    ModuleActionError,
    NotASubmoduleError,
    PreradLabError,
    RingMismatchError,
    SizeBoundError,
)
from .ring import FiniteRing
from .snf import smith_normal_form

logger = logging.getLogger(__name__)

MAX_MODULE_ORDER = 256

Element = Tuple[int, ...]
ActionMatrix = Tuple[Element, ...]


@dataclass(frozen=True)
class FiniteModule:
    """A finite left module over ``ring``.

    ``action[r][i]`` is the element ``r * e_i``. Entries are reduced modulo
    the orders of the target coordinates on construction.
    """

    ring: FiniteRing
    cyclic_orders: Tuple[int, ...]
    action: Tuple[ActionMatrix, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        orders = tuple(int(d) for d in self.cyclic_orders)
        if any(d < 2 for d in orders):
            raise ModuleActionError(f"cyclic orders must be >= 2, got {orders}")
        if len(self.action) != self.ring.order:
            raise ModuleActionError(
                f"action needs one matrix per ring element ({self.ring.order}), got {len(self.action)}"
            )
        k = len(orders)
        reduced = []
        for r, matrix in enumerate(self.action):
            if len(matrix) != k or any(len(row) != k for row in matrix):
                raise ModuleActionError(f"action matrix of ring element {r} is not {k}x{k}")
            reduced.append(tuple(
                tuple(int(x) % d for x, d in zip(row, orders)) for row in matrix
            ))
        object.__setattr__(self, "cyclic_orders", orders)
        object.__setattr__(self, "action", tuple(reduced))
        self._check_action()

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((id(self.ring), self.cyclic_orders, self.action))

    def __repr__(self) -> str:
        return f"FiniteModule({self.label} over {self.ring.preset_tag})"

    def _check_action(self) -> None:
        ring, k = self.ring, self.rank
        for i in range(k):
            unit = self.unit(i)
            if self.action[ring.one][i] != unit:
                raise ModuleActionError(f"1 does not act as the identity on generator {i}")
            for r in ring.elements:
                image = self.action[r][i]
                if self.scale(self.cyclic_orders[i], image) != self.zero:
                    raise ModuleActionError(
                        f"action of {ring.label(r)} on generator {i} is not well defined"
                    )
                for s in ring.elements:
                    if self.action[ring.add(r, s)][i] != self.add(image, self.action[s][i]):
                        raise ModuleActionError(
                            f"action does not respect addition at ({ring.label(r)}, {ring.label(s)})"
                        )
                    if self.action[ring.mul(r, s)][i] != self.act(r, self.action[s][i]):
                        raise ModuleActionError(
                            f"action does not respect multiplication at ({ring.label(r)}, {ring.label(s)})"
                        )

    @property
    def rank(self) -> int:
        """Number of cyclic generators."""
        return len(self.cyclic_orders)

    @property
    def order(self) -> int:
        return math.prod(self.cyclic_orders)

    @property
    def is_zero(self) -> bool:
        return self.rank == 0

    @property
    def zero(self) -> Element:
        return (0,) * self.rank

    @property
    def label(self) -> str:
        if self.name:
            return self.name
        if self.is_zero:
            return "0"
        return "+".join(f"Z{d}" for d in self.cyclic_orders)

    def unit(self, i: int) -> Element:
        return tuple(1 if j == i else 0 for j in range(self.rank))

    @cached_property
    def elements(self) -> Tuple[Element, ...]:
        if self.order > MAX_MODULE_ORDER:
            raise SizeBoundError(f"module of order {self.order} exceeds the bound {MAX_MODULE_ORDER}")
        return tuple(itertools.product(*(range(d) for d in self.cyclic_orders)))

    def add(self, x: Element, y: Element) -> Element:
        return tuple((a + b) % d for a, b, d in zip(x, y, self.cyclic_orders))

    def neg(self, x: Element) -> Element:
        return tuple((-a) % d for a, d in zip(x, self.cyclic_orders))

    def scale(self, n: int, x: Element) -> Element:
        return tuple((n * a) % d for a, d in zip(x, self.cyclic_orders))

    def combine(self, coefficients: Sequence[int], vectors: Sequence[Element]) -> Element:
        """The element ``sum(c_i * v_i)``."""
        total = [0] * self.rank
        for c, v in zip(coefficients, vectors):
            if c:
                for j, a in enumerate(v):
                    total[j] += c * a
        return tuple(a % d for a, d in zip(total, self.cyclic_orders))

    @cached_property
    def _act_cache(self) -> Dict[Tuple[int, Element], Element]:
        return {}

    def act(self, r: int, x: Element) -> Element:
        """The element ``r * x``."""
        key = (r, x)
        cached = self._act_cache.get(key)
        if cached is None:
            cached = self.combine(x, self.action[r])
            self._act_cache[key] = cached
        return cached

    def additive_order(self, x: Element) -> int:
        return math.lcm(1, *(d // math.gcd(a, d) for a, d in zip(x, self.cyclic_orders)))

    def cyclic_submodule(self, x: Element) -> FrozenSet[Element]:
        """The set ``R x``."""
        return frozenset(self.act(r, x) for r in self.ring.elements)

    @cached_property
    def ring_generators(self) -> Tuple[Element, ...]:
        """A short list of elements generating the module over the ring."""
        ranked = sorted(self.elements, key=lambda x: (-len(self.cyclic_submodule(x)), x))
        span: FrozenSet[Element] = frozenset({self.zero})
        generators: List[Element] = []
        for x in ranked:
            if len(span) == self.order:
                break
            if x in span:
                continue
            generators.append(x)
            span = _sum_sets(self, span, self.cyclic_submodule(x))
        return tuple(generators)

    @cached_property
    def _units_in_ring_generators(self) -> Tuple[Tuple[int, ...], ...]:
        """For each cyclic generator e_i, ring coefficients c with e_i = sum c_l g_l."""
        gens = self.ring_generators
        wanted = {self.unit(i): i for i in range(self.rank)}
        found: Dict[int, Tuple[int, ...]] = {}
        for coefficients in itertools.product(self.ring.elements, repeat=len(gens)):
            x = self.zero
            for r, g in zip(coefficients, gens):
                x = self.add(x, self.act(r, g))
            i = wanted.get(x)
            if i is not None and i not in found:
                found[i] = coefficients
                if len(found) == self.rank:
                    break
        return tuple(found[i] for i in range(self.rank))

    def annihilator(self, x: Element) -> Tuple[int, ...]:
        return tuple(r for r in self.ring.elements if self.act(r, x) == self.zero)

    @cached_property
    def profile(self) -> Tuple:
        """Isomorphism invariant: element orders and per-ring-element kernel sizes."""
        orders = tuple(sorted(Counter(self.additive_order(x) for x in self.elements).items()))
        kernels = tuple(
            sum(1 for x in self.elements if self.act(r, x) == self.zero)
            for r in self.ring.elements
        )
        return (self.order, orders, kernels)


def _sum_sets(module: FiniteModule, a: Iterable[Element], b: Iterable[Element]) -> FrozenSet[Element]:
    b = list(b)
    return frozenset(module.add(x, y) for x in a for y in b)


@dataclass(frozen=True)
class Submodule:
    """A subset of ``parent`` closed under addition and the ring action."""

    parent: FiniteModule
    elements: FrozenSet[Element]
    generators: Tuple[Element, ...] = field(default=(), compare=False)

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators) or "0"
        return f"Submodule(<{gens}> of size {self.size} in {self.parent.label})"

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def is_zero(self) -> bool:
        return self.size == 1

    @property
    def is_whole(self) -> bool:
        return self.size == self.parent.order

    @property
    def sort_key(self) -> Tuple:
        return (self.size, tuple(sorted(self.elements)))

    def __contains__(self, x: Element) -> bool:
        return x in self.elements

    def __le__(self, other: "Submodule") -> bool:
        _same_parent(self, other)
        return self.elements <= other.elements

    def __lt__(self, other: "Submodule") -> bool:
        _same_parent(self, other)
        return self.elements < other.elements

    def __add__(self, other: "Submodule") -> "Submodule":
        _same_parent(self, other)
        return span(self.parent, self.generators + other.generators)

    def __and__(self, other: "Submodule") -> "Submodule":
        _same_parent(self, other)
        return _wrap(self.parent, self.elements & other.elements)


def _same_parent(a: Submodule, b: Submodule) -> None:
    if a.parent != b.parent:
        raise NotASubmoduleError("submodules of different modules")


def _greedy_generators(module: FiniteModule, elements: Iterable[Element]) -> Tuple[Element, ...]:
    target = frozenset(elements)
    ranked = sorted(target, key=lambda x: (-len(module.cyclic_submodule(x)), x))
    current: FrozenSet[Element] = frozenset({module.zero})
    generators: List[Element] = []
    for x in ranked:
        if len(current) == len(target):
            break
        if x not in current:
            generators.append(x)
            current = _sum_sets(module, current, module.cyclic_submodule(x))
    return tuple(generators)


def _wrap(module: FiniteModule, elements: Iterable[Element]) -> Submodule:
    elements = frozenset(elements)
    return Submodule(module, elements, _greedy_generators(module, elements))


def span(module: FiniteModule, generators: Iterable[Element]) -> Submodule:
    """Submodule generated by ``generators``."""
    elements: FrozenSet[Element] = frozenset({module.zero})
    for g in generators:
        if g not in elements:
            elements = _sum_sets(module, elements, module.cyclic_submodule(g))
    return Submodule(module, elements, _greedy_generators(module, elements))


def submodule_from_elements(module: FiniteModule, elements: Iterable[Element]) -> Submodule:
    """
    Wrap a set of elements as a submodule, validating closure.

    Raises:
        NotASubmoduleError: The set is not closed under addition and the action
    """
    elements = frozenset(elements)
    if module.zero not in elements:
        raise NotASubmoduleError("subset does not contain zero")
    for x in elements:
        if any(module.act(r, x) not in elements for r in module.ring.elements):
            raise NotASubmoduleError(f"subset is not closed under the ring action at {x}")
        if any(module.add(x, y) not in elements for y in elements):
            raise NotASubmoduleError(f"subset is not closed under addition at {x}")
    return Submodule(module, elements, _greedy_generators(module, elements))


def zero_submodule(module: FiniteModule) -> Submodule:
    return Submodule(module, frozenset({module.zero}), ())


def whole(module: FiniteModule) -> Submodule:
    return span(module, module.ring_generators)


@dataclass(frozen=True)
class ModuleMorphism:
    """An R-linear map given by the images of the cyclic generators of ``source``."""

    source: FiniteModule
    target: FiniteModule
    generator_images: Tuple[Element, ...]
    validate: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        if self.source.ring is not self.target.ring:
            raise RingMismatchError("morphism between modules over different rings")
        images = tuple(tuple(int(a) % d for a, d in zip(img, self.target.cyclic_orders))
                       for img in self.generator_images)
        object.__setattr__(self, "generator_images", images)
        if self.validate and not _is_linear(self.source, self.target, images):
            raise ModuleActionError("generator images do not define an R-linear map")

    def __call__(self, x: Element) -> Element:
        return self.target.combine(x, self.generator_images)

    @cached_property
    def table(self) -> Dict[Element, Element]:
        return {x: self(x) for x in self.source.elements}

    @property
    def is_zero(self) -> bool:
        return all(img == self.target.zero for img in self.generator_images)

    def image(self, sub: Optional[Submodule] = None) -> Submodule:
        generators = sub.generators if sub is not None else self.source.ring_generators
        return span(self.target, [self(g) for g in generators])

    def preimage(self, sub: Submodule) -> Submodule:
        if sub.parent != self.target:
            raise NotASubmoduleError("preimage of a submodule of another module")
        table = self.table
        return _wrap(self.source, [x for x in self.source.elements if table[x] in sub.elements])

    def kernel(self) -> Submodule:
        return self.preimage(zero_submodule(self.target))

    @property
    def is_surjective(self) -> bool:
        return self.image().is_whole

    @property
    def is_injective(self) -> bool:
        return self.kernel().is_zero

    def then(self, other: "ModuleMorphism") -> "ModuleMorphism":
        """Composite ``other . self``."""
        if other.source != self.target:
            raise RingMismatchError("morphisms are not composable")
        return ModuleMorphism(
            self.source, other.target,
            tuple(other(img) for img in self.generator_images), validate=False,
        )


def identity(module: FiniteModule) -> ModuleMorphism:
    return ModuleMorphism(module, module, tuple(module.unit(i) for i in range(module.rank)), validate=False)


def zero_morphism(source: FiniteModule, target: FiniteModule) -> ModuleMorphism:
    return ModuleMorphism(source, target, (target.zero,) * source.rank, validate=False)


def _is_linear(source: FiniteModule, target: FiniteModule, images: Sequence[Element]) -> bool:
    if len(images) != source.rank:
        return False
    for d, img in zip(source.cyclic_orders, images):
        if target.scale(d, img) != target.zero:
            return False
    for r in source.ring.elements:
        for i, img in enumerate(images):
            if target.combine(source.action[r][i], images) != target.act(r, img):
                return False
    return True


@lru_cache(maxsize=None)
def _hom_images(source: FiniteModule, target: FiniteModule) -> Tuple[Tuple[Element, ...], ...]:
    if source.is_zero:
        return ((),)
    gens = source.ring_generators
    candidates = []
    for g in gens:
        ann = source.annihilator(g)
        candidates.append([
            y for y in target.elements
            if all(target.act(r, y) == target.zero for r in ann)
        ])
    expressions = source._units_in_ring_generators
    found = set()
    for ys in itertools.product(*candidates):
        images = []
        for coefficients in expressions:
            z = target.zero
            for r, y in zip(coefficients, ys):
                z = target.add(z, target.act(r, y))
            images.append(z)
        images = tuple(images)
        if images not in found and _is_linear(source, target, images):
            found.add(images)
    return tuple(sorted(found))


def hom_set(source: FiniteModule, target: FiniteModule) -> List[ModuleMorphism]:
    """
    All R-linear maps ``source -> target``.

    Maps are found by choosing images of a set of ring generators of the
    source, restricted by their annihilators, and checked for linearity on
    the cyclic generators.

    Returns:
        Duplicate-free list ordered lexicographically by generator images

    Raises:
        RingMismatchError: The modules live over different rings
    """
    if source.ring is not target.ring:
        raise RingMismatchError("hom_set between modules over different rings")
    return [
        ModuleMorphism(source, target, images, validate=False)
        for images in _hom_images(source, target)
    ]


@lru_cache(maxsize=None)
def _submodules(module: FiniteModule) -> Tuple[Submodule, ...]:
    cyclics = sorted({module.cyclic_submodule(x) for x in module.elements}, key=lambda c: (len(c), sorted(c)))
    start = frozenset({module.zero})
    found = {start}
    queue = [start]
    while queue:
        current = queue.pop()
        for c in cyclics:
            if c <= current:
                continue
            bigger = _sum_sets(module, current, c)
            if bigger not in found:
                found.add(bigger)
                queue.append(bigger)
    subs = [Submodule(module, s, _greedy_generators(module, s)) for s in found]
    return tuple(sorted(subs, key=lambda s: s.sort_key))


def enumerate_submodules(module: FiniteModule) -> List[Submodule]:
    """
    All submodules of ``module`` ordered by size, then elements.

    Raises:
        SizeBoundError: The module is larger than the supported bound
    """
    if module.order > MAX_MODULE_ORDER:
        raise SizeBoundError(f"module of order {module.order} exceeds the bound {MAX_MODULE_ORDER}")
    return list(_submodules(module))


def is_fully_invariant(sub: Submodule) -> bool:
    return all(
        all(f(g) in sub.elements for g in sub.generators)
        for f in hom_set(sub.parent, sub.parent)
    )


@lru_cache(maxsize=None)
def _fully_invariant(module: FiniteModule) -> Tuple[Submodule, ...]:
    return tuple(s for s in _submodules(module) if is_fully_invariant(s))


def fully_invariant_submodules(module: FiniteModule) -> List[Submodule]:
    return list(_fully_invariant(module))


def maximal_submodules(module: FiniteModule) -> List[Submodule]:
    proper = [s for s in enumerate_submodules(module) if not s.is_whole]
    return [s for s in proper if not any(s < t for t in proper)]


def minimal_submodules(module: FiniteModule) -> List[Submodule]:
    nonzero = [s for s in enumerate_submodules(module) if not s.is_zero]
    return [s for s in nonzero if not any(t < s for t in nonzero)]


def radical(module: FiniteModule) -> Submodule:
    """Intersection of the maximal submodules (the whole module when there are none)."""
    result = whole(module)
    for m in maximal_submodules(module):
        result = result & m
    return result


def socle(module: FiniteModule) -> Submodule:
    """Sum of the simple submodules."""
    result = zero_submodule(module)
    for m in minimal_submodules(module):
        result = result + m
    return result


def is_simple(module: FiniteModule) -> bool:
    return not module.is_zero and len(enumerate_submodules(module)) == 2


def is_semisimple(module: FiniteModule) -> bool:
    return socle(module).is_whole


def superfluous(sub: Submodule, module: Optional[FiniteModule] = None) -> bool:
    """
    Whether ``sub + K`` is proper for every proper submodule ``K``.

    Raises:
        NotASubmoduleError: ``sub`` does not belong to ``module``
    """
    module = module or sub.parent
    if sub.parent != module:
        raise NotASubmoduleError("superfluous: submodule of another module")
    return not any(
        not k.is_whole and (sub + k).is_whole for k in enumerate_submodules(module)
    )


def _canonical(
    ring: FiniteRing,
    elements: Sequence[Hashable],
    zero: Hashable,
    add: Callable,
    act: Callable,
    name: str = "",
) -> Tuple[FiniteModule, Dict, Dict]:
    """
    Canonical cyclic presentation of a finite module given element-wise.

    Builds a polycyclic presentation from greedily chosen generators, then
    diagonalizes the relation matrix.

    Returns:
        (module, to_coordinates, from_coordinates)
    """
    def order_of(x):
        n, y = 1, x
        while y != zero:
            y = add(y, x)
            n += 1
        return n

    ranked = sorted(elements, key=lambda x: (-order_of(x), x))
    coords: Dict[Hashable, Tuple[int, ...]] = {zero: ()}
    generators: List[Hashable] = []
    relations: List[Tuple[Tuple[int, ...], int]] = []
    for x in ranked:
        if len(coords) == len(elements):
            break
        if x in coords:
            continue
        n, y = 1, x
        while y not in coords:
            y = add(y, x)
            n += 1
        relations.append((coords[y], n))
        generators.append(x)
        layer = dict(coords)
        multiple = x
        for a in range(1, n):
            for h, c in coords.items():
                layer[add(h, multiple)] = c + (0,) * (len(generators) - 1 - len(c)) + (a,)
            multiple = add(multiple, x)
        coords = layer

    m = len(generators)
    rows = []
    for j, (c, n) in enumerate(relations):
        row = [-v for v in c] + [0] * (m - len(c))
        row[j] += n
        rows.append(row)
    form = smith_normal_form(rows, m)
    kept = [j for j in range(m) if form.diagonal[j] != 1]
    orders = tuple(form.diagonal[j] for j in kept)

    to_new: Dict[Hashable, Tuple[int, ...]] = {}
    for x, c in coords.items():
        c = c + (0,) * (m - len(c))
        to_new[x] = tuple(
            sum(c[i] * form.transform[i][j] for i in range(m)) % form.diagonal[j] for j in kept
        )
    from_new = {v: k for k, v in to_new.items()}

    units = [tuple(1 if i == j else 0 for i in range(len(kept))) for j in range(len(kept))]
    action = tuple(
        tuple(to_new[act(r, from_new[u])] for u in units)
        for r in ring.elements
    )
    module = FiniteModule(ring, orders, action, name=name)
    return module, to_new, from_new


def quotient(module: FiniteModule, sub: Submodule) -> Tuple[FiniteModule, ModuleMorphism]:
    """
    The quotient ``module / sub`` in canonical form with its projection.

    Raises:
        NotASubmoduleError: ``sub`` is not a submodule of ``module``
    """
    if sub.parent != module:
        raise NotASubmoduleError("quotient by a submodule of another module")
    return _quotient(module, sub.elements)


@lru_cache(maxsize=None)
def _quotient(module: FiniteModule, sub_elements: FrozenSet[Element]) -> Tuple[FiniteModule, ModuleMorphism]:
    members = sorted(sub_elements)
    rep = {x: min(module.add(x, n) for n in members) for x in module.elements}
    reps = sorted(set(rep.values()))
    target, to_new, _ = _canonical(
        module.ring, reps, module.zero,
        lambda a, b: rep[module.add(a, b)],
        lambda r, a: rep[module.act(r, a)],
    )
    projection = ModuleMorphism(
        module, target,
        tuple(to_new[rep[module.unit(i)]] for i in range(module.rank)),
        validate=False,
    )
    return target, projection


def submodule_as_module(sub: Submodule) -> Tuple[FiniteModule, ModuleMorphism]:
    """The submodule as a module in canonical form, with its inclusion map."""
    return _as_module(sub.parent, sub.elements)


@lru_cache(maxsize=None)
def _as_module(parent: FiniteModule, elements: FrozenSet[Element]) -> Tuple[FiniteModule, ModuleMorphism]:
    source, _, from_new = _canonical(
        parent.ring, sorted(elements), parent.zero, parent.add, parent.act,
    )
    inclusion = ModuleMorphism(
        source, parent,
        tuple(from_new[source.unit(i)] for i in range(source.rank)),
        validate=False,
    )
    return source, inclusion


def regular_module(ring: FiniteRing) -> FiniteModule:
    """The ring as a left module over itself."""
    return _regular(ring)[0]


@lru_cache(maxsize=None)
def _regular(ring: FiniteRing) -> Tuple[FiniteModule, Dict, Dict]:
    return _canonical(ring, list(ring.elements), ring.zero, ring.add, ring.mul, name="R")


def regular_element(ring: FiniteRing, r: int) -> Element:
    """Coordinates of the ring element ``r`` in the regular module."""
    return _regular(ring)[1][r]


def left_ideal_module(ring: FiniteRing, elements: Iterable[int]) -> Submodule:
    """A left ideal (given by ring elements) as a submodule of the regular module."""
    regular, to_new, _ = _regular(ring)
    return submodule_from_elements(regular, [to_new[r] for r in elements])


def zero_module(ring: FiniteRing) -> FiniteModule:
    return FiniteModule(ring, (), tuple(() for _ in ring.elements), name="0")


def direct_sum(*modules: FiniteModule, name: str = "") -> FiniteModule:
    """External direct sum with block-diagonal action."""
    if not modules:
        raise ModuleActionError("direct sum of no modules")
    ring = modules[0].ring
    if any(m.ring is not ring for m in modules):
        raise RingMismatchError("direct sum of modules over different rings")
    orders = tuple(d for m in modules for d in m.cyclic_orders)
    action = []
    for r in ring.elements:
        rows = []
        offset = 0
        for m in modules:
            for row in m.action[r]:
                rows.append((0,) * offset + row + (0,) * (len(orders) - offset - m.rank))
            offset += m.rank
        action.append(tuple(rows))
    label = name or "+".join(m.label for m in modules if not m.is_zero) or "0"
    return FiniteModule(ring, orders, tuple(action), name=label)


def injection(modules: Sequence[FiniteModule], index: int, total: FiniteModule) -> ModuleMorphism:
    """Inclusion of the ``index``-th summand into ``total = direct_sum(*modules)``."""
    offset = sum(m.rank for m in modules[:index])
    return ModuleMorphism(
        modules[index], total,
        tuple(total.unit(offset + i) for i in range(modules[index].rank)),
        validate=False,
    )


def are_isomorphic(a: FiniteModule, b: FiniteModule) -> Tuple[bool, Optional[ModuleMorphism]]:
    """
    Decide isomorphism, returning a witness ``a -> b`` when one exists.

    A cheap invariant profile rejects most pairs before the bijective-hom search.
    """
    if a.ring is not b.ring or a.order != b.order:
        return False, None
    if a == b:
        return True, identity(a)
    if a.profile != b.profile:
        return False, None
    for f in hom_set(a, b):
        if len(set(f.table.values())) == a.order:
            return True, f
    return False, None


def inverse(iso: ModuleMorphism) -> ModuleMorphism:
    back = {y: x for x, y in iso.table.items()}
    target = iso.target
    return ModuleMorphism(
        target, iso.source, tuple(back[target.unit(i)] for i in range(target.rank)), validate=False,
    )


def top(module: FiniteModule) -> FiniteModule:
    """``module / rad(module)``."""
    return quotient(module, radical(module))[0]


@lru_cache(maxsize=None)
def indecomposable_projectives(ring: FiniteRing) -> Tuple[Tuple[FiniteModule, FiniteModule], ...]:
    """
    Representatives ``(Re, Re/rad(Re))`` for the primitive idempotents ``e``.

    Isomorphic principal modules are listed once; the tops run through the
    simple modules of the ring.
    """
    found: List[Tuple[FiniteModule, FiniteModule]] = []
    for e in ring.primitive_idempotents:
        ideal = left_ideal_module(ring, {ring.mul(r, e) for r in ring.elements})
        principal, _ = submodule_as_module(ideal)
        if any(are_isomorphic(principal, p)[0] for p, _ in found):
            continue
        found.append((principal, top(principal)))
    found.sort(key=lambda pair: (pair[1].order, pair[0].order, pair[0].cyclic_orders))
    return tuple(found)


def simple_modules(ring: FiniteRing) -> List[FiniteModule]:
    """One representative per isomorphism class of simple modules."""
    return [s for _, s in indecomposable_projectives(ring)]


def _multiplicity(semisimple: FiniteModule, simple: FiniteModule) -> int:
    homs = len(hom_set(semisimple, simple))
    ends = len(hom_set(simple, simple))
    k = 0
    while ends ** k < homs:
        k += 1
    return k


def projective_cover(module: FiniteModule) -> Tuple[FiniteModule, ModuleMorphism]:
    """
    Projective cover ``P -> module`` built from principal indecomposables.

    The multiplicity of ``Re`` in ``P`` is the multiplicity of its top in
    ``module / rad(module)``; any epimorphism from such a ``P`` has a
    superfluous kernel, which is re-verified.

    Raises:
        SizeBoundError: The cover exceeds the supported module size
    """
    ring = module.ring
    if module.is_zero:
        z = zero_module(ring)
        return z, zero_morphism(z, module)
    head = top(module)
    summands: List[FiniteModule] = []
    for principal, simple in indecomposable_projectives(ring):
        summands.extend([principal] * _multiplicity(head, simple))
    cover = direct_sum(*summands)
    if cover.order > MAX_MODULE_ORDER:
        raise SizeBoundError(f"projective cover of order {cover.order} exceeds the bound")
    epi = next((f for f in hom_set(cover, module) if f.is_surjective), None)
    if epi is None or not superfluous(epi.kernel()):
        raise PreradLabError(f"no projective cover found for {module.label}")
    return cover, epi
