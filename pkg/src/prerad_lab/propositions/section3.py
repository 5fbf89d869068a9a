"""Co-first modules: implications, the coprime characterizations, simple, semisimple and dihollow."""
from typing import List

from ..cofirst import (
    Verdict,
    co_first_witness,
    is_co_first,
    is_dihollow,
    is_family_co_first,
    is_fully_co_first,
    is_second,
)
from ..module import is_semisimple, is_simple, maximal_submodules
from ..preradical import Trace
from ..suites import Mode, Outcome, SuiteContext, describe, proposition


def _simple_members(ctx: SuiteContext) -> List[int]:
    return [i for i in ctx.nonzero if is_simple(ctx.universe[i])]


@proposition(
    "S3.cofirst-implies",
    "every fully A-co-first module is A-co-first; P-bar = P | T, S = T | F, T <= P-bar and F <= S",
)
def cofirst_implications(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    universe = ctx.universe
    for sigma in ctx.pool:
        triple = ctx.triple(sigma)
        where = {"sigma": describe(sigma)}
        out.check(triple.P <= triple.P_bar, reason="P not inside P-bar", **where)
        out.check(triple.T <= triple.P_bar, reason="T not inside P-bar", **where)
        out.check(triple.F <= triple.S, reason="F not inside S", **where)
        for problem in triple.identity_violations():
            out.fail(reason=problem, **where)
        for i in ctx.nonzero:
            module = universe[i]
            direct = (
                bool(is_fully_co_first(module, sigma)),
                bool(is_co_first(module, sigma)),
                bool(is_second(module, sigma)),
            )
            tabled = (i in triple.P, i in triple.P_bar, i in triple.S)
            out.check(direct == tabled, reason="predicates disagree with the class triple",
                      module=ctx.name(i), **where)
    return out


@proposition(
    "S3.P-rad-cofirst",
    "M is R-rad-co-first if and only if M is coprime",
    mode=Mode.REPORT,
)
def rad_cofirst_vs_coprime(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    triple, regime = ctx.family_triple("rad")
    out.use(regime)
    for i in ctx.nonzero:
        rad_cofirst = i in triple.P_bar
        by_xi = ctx.verdict(i).by_xi
        if rad_cofirst != by_xi:
            out.fail(module=ctx.name(i), rad_co_first=rad_cofirst, by_xi=by_xi)
    return out


@proposition(
    "S3.example-trad-cofirst",
    "a module with a unique maximal submodule, such as Z_{p^2}, is R-trad-co-first without being coprime",
)
def trad_cofirst_example(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    local = [i for i in ctx.nonzero if len(maximal_submodules(ctx.universe[i])) == 1]
    for i in local:
        module = ctx.universe[i]
        sigma = co_first_witness(module, ctx.trads)
        out.check(sigma is None, reason="not trad-co-first", module=ctx.name(i),
                  sigma=describe(sigma) if sigma is not None else None)
    out.notes["members"] = [ctx.name(i) for i in local]
    out.notes["not_coprime"] = [ctx.name(i) for i in local if not ctx.verdict(i).by_xi]
    return out


@proposition("S3.lemma-simple", "every simple module S is R-pr-co-first")
def simple_cofirst(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    triple, regime = ctx.family_triple("pr")
    out.use(regime)
    for i in _simple_members(ctx):
        out.check(i in triple.P_bar, reason="simple module not pr-co-first", module=ctx.name(i))
        out.check(i in triple.S, reason="simple module not pr-second", module=ctx.name(i))
    return out


@proposition(
    "S3.lemma-semisimple",
    "a semisimple module M is R-pr-co-first if and only if M is isomorphic to S^(I) for a simple S",
)
def semisimple_cofirst(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    triple, regime = ctx.family_triple("pr")
    out.use(regime)
    universe = ctx.universe
    simples = _simple_members(ctx)
    for i in ctx.nonzero:
        module = universe[i]
        if not is_semisimple(module):
            continue
        types = [s for s in simples if any(not f.is_zero for f in universe.homs(s, i))]
        isotypic = len(types) == 1
        where = {"module": ctx.name(i), "isotypic": isotypic}
        out.check((i in triple.P_bar) == isotypic, reason="co-first does not match isotypic", **where)
        if not isotypic:
            witness = next((s for s in types if is_co_first(module, Trace(universe[s])) is Verdict.FALSE), None)
            out.check(witness is not None, reason="no trace witness", **where)
            if witness is not None:
                out.notes.setdefault("trace_witnesses", {})[ctx.name(i)] = describe(Trace(universe[witness]))
    return out


@proposition("S3.prop-dihollow", "if M is R-pr-co-first, then M is dihollow")
def cofirst_dihollow(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    triple, regime = ctx.family_triple("pr")
    out.use(regime)
    converse = []
    for i in ctx.nonzero:
        dihollow = is_dihollow(ctx.universe[i])
        if i in triple.P_bar:
            out.check(dihollow, reason="pr-co-first but not dihollow", module=ctx.name(i))
        elif dihollow:
            converse.append(ctx.name(i))
    out.notes["dihollow_not_co_first"] = converse
    return out


@proposition("S3.prop-pf", "M is R-pr-co-first if and only if M is coprime")
def pr_cofirst_coprime(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    triple, regime = ctx.family_triple("pr")
    out.use(regime)
    for i in ctx.nonzero:
        by_xi = ctx.verdict(i).by_xi
        out.check((i in triple.P_bar) == by_xi, reason="pr-co-first differs from coprime",
                  module=ctx.name(i), by_xi=by_xi)
    # Family membership agrees with the direct predicate on a sample
    family, _ = ctx.family("pr")
    for i in ctx.small_members(4):
        direct = is_family_co_first(ctx.universe[i], family)
        out.check(bool(direct) == (i in triple.P_bar), reason="family predicate disagrees", module=ctx.name(i))
    return out
