"""Submodule products: gamma, box product, comultiplication, totalizer and coprimeness."""
import itertools
from typing import Dict, FrozenSet, Tuple

from ..calculus import xi_contains, xi_contains_by_epimorphism
from ..module import Element, FiniteModule, whole
from ..preradical import Reject, evaluate
from ..products import CRITERIA, comultiplication, totalizer_violations, witness_holds
from ..suites import Mode, Outcome, SuiteContext, proposition

Elements = FrozenSet[Element]


def _comult_table(module: FiniteModule, subs) -> Dict[Tuple[Elements, Elements], Elements]:
    return {
        (a.elements, b.elements): comultiplication(a, b, module).elements
        for a in subs for b in subs
    }


@proposition("S2.example-reject-z6", "since Z2 is embedded in Z6, omega_0^Z6(Z2) = 0")
def reject_of_embedded(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    universe = ctx.universe
    embeddings = 0
    for a, b in itertools.product(ctx.nonzero, repeat=2):
        if not any(f.is_injective for f in universe.homs(a, b)):
            continue
        embeddings += 1
        value = evaluate(Reject(universe[b]), universe[a])
        out.check(value.is_zero, reason="reject of an embedded module is nonzero",
                  module=ctx.name(a), ambient=ctx.name(b), value=ctx.fmt(value))
    out.notes["embeddings"] = embeddings
    return out


@proposition("S2.prop-comult-monotone", "if B <= C, then (A:B) <= (A:C)")
def comult_monotone(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    checked = 0
    for i in ctx.small_members(16):
        module, subs = ctx.universe[i], ctx.subs(i)
        table = _comult_table(module, subs)
        for a in subs:
            for b, c in itertools.product(subs, repeat=2):
                if not b.elements <= c.elements:
                    continue
                checked += 1
                out.check(
                    table[(a.elements, b.elements)] <= table[(a.elements, c.elements)],
                    reason="comultiplication not monotone", module=ctx.name(i),
                    A=ctx.fmt(a), B=ctx.fmt(b), C=ctx.fmt(c),
                )
    out.notes["triples"] = checked
    return out


@proposition("S2.remark-comult-whole", "(M:N) = M for every submodule N of M")
def comult_whole(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    for i in ctx.nonzero:
        module = ctx.universe[i]
        for n in ctx.subs(i):
            out.check(comultiplication(whole(module), n).is_whole,
                      reason="(M:N) != M", module=ctx.name(i), N=ctx.fmt(n))
    return out


@proposition("S2.cor-comult-intersection", "(A : meet of N_i) <= meet of (A : N_i)")
def comult_intersection(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    families = 0
    for i in ctx.small_members(16):
        module, subs = ctx.universe[i], ctx.subs(i)
        table = _comult_table(module, subs)
        keys = [s.elements for s in subs]
        for a in keys:
            for size in (2, 3):
                for family in itertools.combinations(keys, size):
                    families += 1
                    meet = frozenset.intersection(*family)
                    bound = frozenset.intersection(*(table[(a, n)] for n in family))
                    if not table[(a, meet)] <= bound:
                        out.fail(reason="comultiplication exceeds the intersection bound", module=ctx.name(i),
                                 A=sorted(a), family=[sorted(n) for n in family])
    out.notes["families"] = families
    return out


@proposition("S2.lemma-tot", "Tot(N) is the smallest submodule U of M such that U:N = M")
def totalizer_property(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    for i in ctx.small_members(16):
        for n in ctx.subs(i):
            for problem in totalizer_violations(n):
                out.fail(reason=problem, module=ctx.name(i))
    return out


@proposition("S2.lemma-BJKNco.1v3", "M is coprime iff A:B != M for proper A, B iff Hom(M/A, M/B) != 0")
def comult_vs_hom(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    for i in ctx.nonzero:
        verdict = ctx.verdict(i)
        out.check(verdict.by_comult == verdict.by_hom, reason="comultiplication and hom criteria disagree",
                  **verdict.as_dict())
    return out


@proposition(
    "S2.lemma-BJKNco.2v3",
    "M is coprime iff Hom(M/A, M/B) != 0 for proper A, B, read against the xi definition",
    mode=Mode.REPORT,
)
def hom_vs_xi(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    matrix = {f"hom={h}/xi={x}": 0 for h in (True, False) for x in (True, False)}
    for i in ctx.nonzero:
        verdict = ctx.verdict(i)
        matrix[f"hom={verdict.by_hom}/xi={verdict.by_xi}"] += 1
        if verdict.by_hom != verdict.by_xi:
            data = verdict.as_dict()
            out.fail(module=ctx.name(i), by_hom=verdict.by_hom, by_xi=verdict.by_xi, witnesses=data["witnesses"])
    out.notes["matrix"] = matrix
    return out


@proposition("S2.box-xi", "M is coprime iff A box B != M for all proper A, B")
def box_vs_xi(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    for i in ctx.nonzero:
        verdict = ctx.verdict(i)
        out.check(verdict.by_xi == verdict.by_box, reason="box and xi criteria disagree", **verdict.as_dict())
    return out


@proposition("S2.xi-trace-lemma", "M is generated by N iff the trace of N in M is M iff some N^k maps onto M")
def xi_trace(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    small = ctx.small_members(8)
    for g, m in itertools.product(small, repeat=2):
        by_trace = xi_contains(ctx.universe[g], ctx.universe[m])
        out.check(by_trace == xi_contains_by_epimorphism(ctx.universe[g], ctx.universe[m]),
                  reason="trace and epimorphism tests disagree",
                  generator=ctx.name(g), module=ctx.name(m), by_trace=by_trace)
    return out


@proposition("S2.witness-recheck", "every recorded coprimeness witness violates its criterion")
def witness_recheck(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    for i in ctx.nonzero:
        verdict = ctx.verdict(i)
        for name in CRITERIA:
            if not verdict.criterion(name):
                out.check(witness_holds(verdict, name), reason="witness does not re-check",
                          module=ctx.name(i), criterion=name)
    return out
