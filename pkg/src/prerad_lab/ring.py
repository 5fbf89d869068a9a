"""Finite unital rings given by addition and multiplication tables."""
import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, Iterable, List, Mapping, Sequence, Tuple, Union

from .errors import RingAxiomError, SizeBoundError, SpecParseError

logger = logging.getLogger(__name__)

MAX_RING_ORDER = 64

Table = Tuple[Tuple[int, ...], ...]
Ideal = FrozenSet[int]


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """A finite unital ring on the element indices ``0..n-1``.

    Rings compare by identity; ``make_ring`` caches presets so that equal
    specs give the same object.
    """

    add_table: Table
    mul_table: Table
    one: int
    zero: int
    preset_tag: str = "tables"
    labels: Tuple[str, ...] = field(default=())

    def __post_init__(self):
        n = len(self.add_table)
        if n == 0:
            raise RingAxiomError(["ring has no elements"])
        if n > MAX_RING_ORDER:
            raise SizeBoundError(f"ring of order {n} exceeds the bound {MAX_RING_ORDER}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(n)))
        violations = self.axiom_violations()
        if violations:
            raise RingAxiomError(violations)

    def __repr__(self) -> str:
        return f"FiniteRing({self.preset_tag}, order={self.order})"

    @property
    def order(self) -> int:
        return len(self.add_table)

    @property
    def elements(self) -> range:
        return range(self.order)

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    def neg(self, a: int) -> int:
        return self._negatives[a]

    @cached_property
    def _negatives(self) -> Tuple[int, ...]:
        return tuple(
            next(b for b in self.elements if self.add(a, b) == self.zero)
            for a in self.elements
        )

    def label(self, a: int) -> str:
        return self.labels[a]

    def axiom_violations(self) -> List[str]:
        """
        Check every ring axiom on every element triple.

        Returns:
            Human-readable descriptions of the violated axioms (empty when valid)
        """
        n = len(self.add_table)
        violations: List[str] = []
        for name, table in (("addition", self.add_table), ("multiplication", self.mul_table)):
            if len(table) != n or any(len(row) != n for row in table):
                violations.append(f"{name} table is not {n}x{n}")
            elif any(not 0 <= x < n for row in table for x in row):
                violations.append(f"{name} table has entries outside 0..{n - 1}")
        if violations:
            return violations
        if not (0 <= self.zero < n and 0 <= self.one < n):
            return ["zero/one index out of range"]

        add, mul = self.add_table, self.mul_table
        for a in range(n):
            if add[a][self.zero] != a or add[self.zero][a] != a:
                violations.append(f"{a} + 0 != {a}")
            if mul[a][self.one] != a or mul[self.one][a] != a:
                violations.append(f"missing unity: 1*{a} or {a}*1 != {a}")
            if all(add[a][b] != self.zero for b in range(n)):
                violations.append(f"{a} has no additive inverse")
            for b in range(n):
                if add[a][b] != add[b][a]:
                    violations.append(f"{a} + {b} != {b} + {a}")
        for a, b, c in itertools.product(range(n), repeat=3):
            if add[add[a][b]][c] != add[a][add[b][c]]:
                violations.append(f"addition not associative at ({a},{b},{c})")
            if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                violations.append(f"non-associative multiplication at ({a},{b},{c})")
            if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                violations.append(f"non-distributive (left) at ({a},{b},{c})")
            if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]:
                violations.append(f"non-distributive (right) at ({a},{b},{c})")
            if len(violations) > 50:
                break
        return violations

    @cached_property
    def characteristic(self) -> int:
        """Additive order of the unity."""
        k, x = 1, self.one
        while x != self.zero:
            x = self.add(x, self.one)
            k += 1
        return k

    def multiple(self, k: int, a: int) -> int:
        """The element ``k * a`` for a non-negative integer ``k``."""
        x = self.zero
        for _ in range(k):
            x = self.add(x, a)
        return x

    @cached_property
    def is_commutative(self) -> bool:
        return all(
            self.mul(a, b) == self.mul(b, a)
            for a in self.elements for b in self.elements
        )

    def additive_closure(self, elements: Iterable[int]) -> Ideal:
        """Smallest additive subgroup containing ``elements``."""
        span = {self.zero}
        for g in elements:
            if g in span:
                continue
            multiples, x = [self.zero], g
            while x != self.zero:
                multiples.append(x)
                x = self.add(x, g)
            span = {self.add(s, m) for s in span for m in multiples}
        return frozenset(span)

    def ideal_closure(self, generators: Iterable[int]) -> Ideal:
        """Two-sided ideal generated by ``generators``."""
        products = {
            self.mul(self.mul(r, g), s)
            for g in generators for r in self.elements for s in self.elements
        }
        return self.additive_closure(sorted(products))

    @cached_property
    def two_sided_ideals(self) -> Tuple[Ideal, ...]:
        """All two-sided ideals, ordered by size and then by elements."""
        found = {frozenset({self.zero})}
        queue = [frozenset({self.zero})]
        while queue:
            ideal = queue.pop()
            for x in self.elements:
                if x in ideal:
                    continue
                bigger = self.additive_closure(ideal | self.ideal_closure([x]))
                if bigger not in found:
                    found.add(bigger)
                    queue.append(bigger)
        return tuple(sorted(found, key=lambda i: (len(i), sorted(i))))

    def ideal_product(self, left: Ideal, right: Ideal) -> Ideal:
        return self.additive_closure(sorted({self.mul(a, b) for a in left for b in right}))

    def is_nilpotent(self, ideal: Ideal) -> bool:
        power = ideal
        while True:
            if power == {self.zero}:
                return True
            nxt = self.ideal_product(power, ideal)
            if nxt == power:
                return False
            power = nxt

    @cached_property
    def jacobson_radical(self) -> Ideal:
        """Largest nilpotent two-sided ideal (the Jacobson radical of a finite ring)."""
        nilpotent = [i for i in self.two_sided_ideals if self.is_nilpotent(i)]
        return max(nilpotent, key=len)

    @property
    def is_semisimple(self) -> bool:
        return self.jacobson_radical == {self.zero}

    @cached_property
    def idempotents(self) -> Tuple[int, ...]:
        return tuple(e for e in self.elements if self.mul(e, e) == e)

    @cached_property
    def primitive_idempotents(self) -> Tuple[int, ...]:
        """Nonzero idempotents e whose corner ring eRe has no idempotents besides 0 and e."""
        primitive = []
        for e in self.idempotents:
            if e == self.zero:
                continue
            corner = [f for f in self.idempotents if self.mul(self.mul(e, f), e) == f]
            if set(corner) <= {self.zero, e}:
                primitive.append(e)
        return tuple(primitive)


def _tables_from(
    elements: Sequence,
    add,
    mul,
    one,
    zero,
    tag: str,
    label=str,
) -> FiniteRing:
    index: Dict = {x: i for i, x in enumerate(elements)}
    add_table = tuple(tuple(index[add(a, b)] for b in elements) for a in elements)
    mul_table = tuple(tuple(index[mul(a, b)] for b in elements) for a in elements)
    return FiniteRing(
        add_table=add_table,
        mul_table=mul_table,
        one=index[one],
        zero=index[zero],
        preset_tag=tag,
        labels=tuple(label(x) for x in elements),
    )


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))


def _zn(n: int) -> FiniteRing:
    if n < 2:
        raise SpecParseError(f"zn:{n}: n >= 2 required")
    return _tables_from(
        list(range(n)),
        lambda a, b: (a + b) % n,
        lambda a, b: (a * b) % n,
        1 % n, 0, f"zn:{n}",
    )


def _product(left: FiniteRing, right: FiniteRing) -> FiniteRing:
    elements = list(itertools.product(left.elements, right.elements))
    return _tables_from(
        elements,
        lambda a, b: (left.add(a[0], b[0]), right.add(a[1], b[1])),
        lambda a, b: (left.mul(a[0], b[0]), right.mul(a[1], b[1])),
        (left.one, right.one), (left.zero, right.zero),
        f"product({left.preset_tag},{right.preset_tag})",
        lambda x: f"({left.label(x[0])},{right.label(x[1])})",
    )


def _matmul(a, b, p):
    return (
        (a[0] * b[0] + a[1] * b[2]) % p, (a[0] * b[1] + a[1] * b[3]) % p,
        (a[2] * b[0] + a[3] * b[2]) % p, (a[2] * b[1] + a[3] * b[3]) % p,
    )


def _matrix_ring(size: int, p: int, triangular: bool) -> FiniteRing:
    kind = "triangular" if triangular else "matrix"
    if size != 2:
        raise SpecParseError(f"{kind}:{size}:{p}: only size 2 is supported")
    if not _is_prime(p):
        raise SpecParseError(f"{kind}:{size}:{p}: p must be prime")
    elements = [
        m for m in itertools.product(range(p), repeat=4)
        if not triangular or m[2] == 0
    ]
    return _tables_from(
        elements,
        lambda a, b: tuple((x + y) % p for x, y in zip(a, b)),
        lambda a, b: _matmul(a, b, p),
        (1, 0, 0, 1), (0, 0, 0, 0),
        f"{kind}:{size}:{p}",
        lambda m: f"[[{m[0]},{m[1]}],[{m[2]},{m[3]}]]",
    )


def _split_top_level(text: str) -> List[str]:
    parts, depth, current = [], 0, []
    for ch in text:
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
            continue
        depth += ch == "("
        depth -= ch == ")"
        current.append(ch)
    parts.append("".join(current))
    return [p.strip() for p in parts]


def _parse_int(text: str, spec: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise SpecParseError(f"invalid ring spec '{spec}': '{text}' is not an integer") from None


@lru_cache(maxsize=None)
def _make_preset(spec: str) -> FiniteRing:
    spec = spec.replace(" ", "")
    if spec.startswith("product(") and spec.endswith(")"):
        factors = _split_top_level(spec[len("product("):-1])
        if len(factors) < 2:
            raise SpecParseError(f"invalid ring spec '{spec}': product needs two factors")
        ring = _make_preset(factors[0])
        for factor in factors[1:]:
            ring = _product(ring, _make_preset(factor))
        return ring
    parts = spec.split(":")
    if parts[0] == "zn" and len(parts) == 2:
        return _zn(_parse_int(parts[1], spec))
    if parts[0] in ("triangular", "matrix") and len(parts) == 3:
        return _matrix_ring(
            _parse_int(parts[1], spec), _parse_int(parts[2], spec),
            triangular=parts[0] == "triangular",
        )
    raise SpecParseError(f"unknown ring spec '{spec}'")


def make_ring(spec: Union[str, Mapping]) -> FiniteRing:
    """
    Build a validated ring from a preset name or explicit tables.

    Presets: ``zn:n``, ``product(A,B)``, ``triangular:2:p``, ``matrix:2:p``.
    Explicit tables are given as ``{"add": [[..]], "mul": [[..]],
    "one": i, "zero": j}`` with optional ``"elements"`` labels and a ``"tag"``.

    Raises:
        SpecParseError: Unknown or malformed preset, or tables of the wrong shape
        RingAxiomError: Explicit tables that are not a unital ring
    """
    if isinstance(spec, str):
        ring = _make_preset(spec.replace(" ", ""))
        logger.debug(f"Ring {spec}: order {ring.order}")
        return ring
    try:
        add = tuple(tuple(int(x) for x in row) for row in spec["add"])
        mul = tuple(tuple(int(x) for x in row) for row in spec["mul"])
        one, zero = int(spec.get("one", 1)), int(spec.get("zero", 0))
        labels = tuple(str(x) for x in spec.get("elements", ()))
    except (KeyError, TypeError, ValueError) as e:
        raise SpecParseError(f"invalid explicit ring tables: {e}") from None
    n = len(add)
    if len(mul) != n or any(len(row) != n for row in add + mul):
        raise SpecParseError(f"invalid explicit ring tables: add and mul must both be {n}x{n}")
    if any(not 0 <= x < n for row in add + mul for x in row) or not (0 <= one < n and 0 <= zero < n):
        raise SpecParseError(f"invalid explicit ring tables: entries must lie in 0..{n - 1}")
    if labels and len(labels) != n:
        raise SpecParseError(f"invalid explicit ring tables: {len(labels)} element labels for {n} elements")
    ring = FiniteRing(add, mul, one, zero, preset_tag=str(spec.get("tag", "tables")), labels=labels)
    logger.debug(f"Ring from tables: order {ring.order}")
    return ring
