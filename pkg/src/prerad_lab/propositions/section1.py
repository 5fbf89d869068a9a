"""Preradical basics: alpha/omega intervals, trace and reject, closures, additivity."""
from typing import List

from ..calculus import (
    Order,
    compare,
    free_covered,
    has_flag,
    precedes,
    preserves_epimorphisms,
    t_radical_defects,
    torsion_class,
)
from ..module import (
    direct_sum,
    enumerate_submodules,
    fully_invariant_submodules,
    injection,
    span,
    whole,
    zero_submodule,
)
from ..preradical import (
    Alpha,
    Bar,
    Colon,
    Compose,
    Gamma,
    Hat,
    Join,
    Meet,
    Omega,
    Preradical,
    Rad,
    Reject,
    Soc,
    Trace,
    evaluate,
)
from ..suites import Outcome, SuiteContext, describe, proposition


@proposition(
    "S1.remark-alpha-omega-interval",
    "alpha_N^M is the least and omega_N^M the largest preradical rho such that rho(M) = N",
)
def alpha_omega_interval(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    family, regime = ctx.family("pr")
    out.use(regime)
    assignments = [ctx.assignment(rho) for rho in family]
    for i, n in ctx.fi_pairs:
        alpha, omega = Alpha(n), Omega(n)
        low, high = ctx.assignment(alpha), ctx.assignment(omega)
        where = {"module": ctx.name(i), "N": ctx.fmt(n)}
        out.check(low[i] == n and high[i] == n, reason="alpha or omega does not take the value N at M", **where)
        out.check(
            has_flag(alpha, ctx.universe, "is_preradical") and has_flag(omega, ctx.universe, "is_preradical"),
            reason="alpha or omega is not natural", **where,
        )
        for rho, values in zip(family, assignments):
            if values[i].elements != n.elements:
                continue
            inside = all(a <= v <= b for a, v, b in zip(low, values, high))
            out.check(inside, reason="preradical outside [alpha, omega]", rho=describe(rho), **where)
    out.notes["pairs"] = len(ctx.fi_pairs)
    out.notes["family_size"] = len(family)
    return out


@proposition(
    "S1.remark-trace-reject",
    "alpha_M^M is the trace of M and is idempotent; (omega_0^M : omega_0^M) = omega_0^M, so omega_0^M is a radical",
)
def trace_and_reject(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    universe = ctx.universe
    for i in ctx.nonzero:
        module = universe[i]
        trace, reject = Trace(module), Reject(module)
        where = {"module": ctx.name(i)}
        out.check(compare(trace, Alpha(whole(module)), universe) is Order.EQUAL, reason="trace != alpha_M^M", **where)
        out.check(has_flag(trace, universe, "idempotent"), reason="trace is not idempotent", **where)
        out.check(
            compare(reject, Omega(zero_submodule(module)), universe) is Order.EQUAL,
            reason="reject != omega_0^M", **where,
        )
        out.check(
            compare(Colon(reject, reject), reject, universe) is Order.EQUAL,
            reason="(reject : reject) != reject", **where,
        )
        out.check(has_flag(reject, universe, "radical"), reason="reject is not a radical", **where)
    return out


@proposition(
    "S1.hat-bar-closures",
    "hat sigma is the largest idempotent preradical below sigma and bar sigma the least radical above sigma",
)
def hat_bar_closures(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    universe = ctx.universe
    idempotents, idem_regime = ctx.family("pid")
    radicals, rad_regime = ctx.family("rad")
    out.use(idem_regime)
    out.use(rad_regime)
    for sigma in ctx.pool:
        hat, bar = Hat(sigma), Bar(sigma)
        where = {"sigma": describe(sigma)}
        out.check(has_flag(hat, universe, "idempotent"), reason="hat is not idempotent", **where)
        out.check(precedes(hat, sigma, universe), reason="hat is not below sigma", **where)
        out.check(
            torsion_class(hat, universe) == torsion_class(sigma, universe),
            reason="hat changes the torsion class", **where,
        )
        out.check(has_flag(bar, universe, "radical"), reason="bar is not a radical", **where)
        out.check(precedes(sigma, bar, universe), reason="bar is not above sigma", **where)
        for rho in idempotents:
            if precedes(rho, sigma, universe):
                out.check(precedes(rho, hat, universe), reason="idempotent below sigma not below hat",
                          rho=describe(rho), **where)
        for rho in radicals:
            if precedes(sigma, rho, universe):
                out.check(precedes(bar, rho, universe), reason="radical above sigma not above bar",
                          rho=describe(rho), **where)
    return out


def _constructor_sample(ctx: SuiteContext) -> List[Preradical]:
    universe = ctx.universe
    simple = universe[ctx.nonzero[0]]
    sample: List[Preradical] = [Rad(), Soc(), Trace(simple), Reject(simple)] + ctx.trads
    fi = next(((i, n) for i, n in ctx.fi_pairs if not n.is_zero and not n.is_whole), ctx.fi_pairs[0])
    sample += [Alpha(fi[1]), Omega(fi[1])]
    plain = next(
        (s for i in ctx.nonzero for s in enumerate_submodules(universe[i])
         if s not in fully_invariant_submodules(universe[i])),
        fi[1],
    )
    sample += [
        Gamma(plain),
        Meet((Rad(), Soc())),
        Join((Rad(), Soc())),
        Compose(Rad(), Soc()),
        Colon(Soc(), Soc()),
        Hat(Rad()),
        Bar(Soc()),
    ]
    return sample


@proposition("S1.additivity", "beta(direct sum of M_i) = direct sum of beta(M_i)")
def additivity(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    universe = ctx.universe
    if not ctx.nonzero:
        return out
    pairs = [
        (a, b) for a in ctx.nonzero for b in ctx.nonzero
        if a <= b and universe[a].order * universe[b].order <= universe.max_order
    ]
    sample = _constructor_sample(ctx)
    for a, b in pairs:
        parts = (universe[a], universe[b])
        total = direct_sum(*parts)
        for sigma in sample:
            images = []
            for k, part in enumerate(parts):
                inject = injection(parts, k, total)
                images += [inject(g) for g in evaluate(sigma, part).generators]
            out.check(
                evaluate(sigma, total) == span(total, images),
                reason="not additive", sigma=describe(sigma), modules=[ctx.name(a), ctx.name(b)],
            )
    out.notes["pairs"] = len(pairs)
    out.notes["constructors"] = len(sample)
    return out


@proposition("S1.t-radical-epi", "sigma is a t-radical if and only if sigma preserves epimorphisms")
def t_radical_epimorphisms(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    family, regime = ctx.family("pr")
    out.use(regime)
    covered = free_covered(ctx.universe, ctx.epis)
    covered_epis = [(i, j, f) for i, j, f in ctx.epis if i in covered and j in covered]
    uncovered = [ctx.name(i) for i in ctx.universe.indices if i not in covered]
    if uncovered:
        out.notes["uncovered"] = uncovered
    for sigma in list(ctx.pool) + list(family):
        t_radical = has_flag(sigma, ctx.universe, "t_radical")
        if t_radical == preserves_epimorphisms(sigma, ctx.universe, ctx.epis):
            continue
        where = {"sigma": describe(sigma), "t_radical": t_radical}
        covered_t_radical = not t_radical_defects(sigma, ctx.universe, sorted(covered))
        if covered_t_radical != preserves_epimorphisms(sigma, ctx.universe, covered_epis):
            out.fail(reason="t-radical flag disagrees with epimorphism preservation on members with a free cover",
                     **where)
        else:
            out.partial(reason="disagreement only involves members without a free cover", **where)
    return out
