"""Second modules against co-first modules."""
from ..calculus import free_covered, has_flag, t_radical_defects
from ..cofirst import family_triple, is_family_second
from ..module import radical
from ..preradical import Rad
from ..suites import Mode, Outcome, SuiteContext, describe, proposition


@proposition(
    "S5.remark-8s",
    "S_A is the intersection of the S_r, S_sigma = T_sigma | F_sigma, and T_A, F_A are inside S_A",
)
def second_classes(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    universe = ctx.universe
    for sigma in ctx.pool:
        triple = ctx.triple(sigma)
        out.check(triple.S == triple.T.union(triple.F), reason="S != T | F", sigma=describe(sigma))
    family = ctx.trads
    joint = family_triple(family, universe)
    out.check(joint.T <= joint.S and joint.F <= joint.S, reason="T_A or F_A not inside S_A")
    for i in ctx.nonzero:
        direct = bool(is_family_second(universe[i], family))
        out.check(direct == (i in joint.S), reason="S_A differs from the intersection", module=ctx.name(i))
    return out


@proposition("S5.tsvc1", "for A a class of t-radicals, every A-second module is A-co-first")
def second_is_cofirst(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    strict = {}
    for sigma in ctx.trads:
        triple = ctx.triple(sigma)
        out.check(triple.S <= triple.P_bar, reason="S not inside P-bar", sigma=describe(sigma))
        extra = sorted(triple.P_bar.members - triple.S.members)
        if extra:
            strict[describe(sigma)] = [ctx.name(i) for i in extra]
    joint = family_triple(ctx.trads, ctx.universe)
    out.check(joint.S <= joint.P_bar, reason="S_A not inside P-bar_A for the t-radical family")
    out.notes["strict"] = strict
    return out


@proposition(
    "S5.example-ejemsvc",
    "Z_{p^2} is R-trad-co-first but not R-trad-second",
    mode=Mode.REPORT,
)
def cofirst_not_second(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    joint = family_triple(ctx.trads, ctx.universe)
    for i in sorted(joint.P_bar.members - joint.S.members):
        out.fail(module=ctx.name(i), co_first=True, second=False)
    return out


@proposition(
    "S5.example-ejem4.17",
    "for sigma = p * _ and M = Z_{p^2}: M is in P-bar_sigma but not in L_sigma",
    mode=Mode.REPORT,
)
def cofirst_not_torsion_free(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    for sigma in ctx.trads:
        triple = ctx.triple(sigma)
        for i in sorted(triple.P_bar.members - triple.F.members):
            out.fail(sigma=describe(sigma), module=ctx.name(i))
    out.notes["substitution"] = "L_sigma is read as the torsion-free class F_sigma"
    return out


@proposition("S5.psvc1", "for sigma in R-rad, if P-bar_sigma = S_sigma then sigma is a t-radical")
def second_equals_cofirst_radical(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    family, regime = ctx.family("rad")
    out.use(regime)
    covered = free_covered(ctx.universe, ctx.epis)
    equal = 0
    for sigma in family:
        triple = ctx.triple(sigma)
        if triple.P_bar != triple.S:
            continue
        equal += 1
        where = {"sigma": describe(sigma)}
        out.check(triple.F.is_quotient_closed, reason="F is not closed under quotients", **where)
        if has_flag(sigma, ctx.universe, "t_radical"):
            continue
        defects = t_radical_defects(sigma, ctx.universe)
        decided = [ctx.name(i) for i in defects if i in covered]
        if decided:
            out.fail(reason="sigma(M) != sigma(R) M on a member covered by a free module",
                     modules=decided, **where)
        else:
            out.partial(reason="sigma(M) != sigma(R) M only on members without a free cover",
                        modules=[ctx.name(i) for i in defects], **where)
    out.notes["instances"] = equal
    return out


def _v_ring(ctx: SuiteContext) -> bool:
    return all(radical(ctx.universe[i]).is_zero for i in ctx.universe.indices)


@proposition("S5.prop-rad-vring", "P-bar_rad = S_rad iff R is a left V-ring")
def radical_second_vring(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    triple = ctx.triple(Rad())
    v_ring = _v_ring(ctx)
    out.check((triple.P_bar == triple.S) == v_ring, reason="P-bar_rad = S_rad does not match the V-ring test",
              v_ring=v_ring, outside_S=[ctx.name(i) for i in sorted(triple.P_bar.members - triple.S.members)])
    return out


@proposition(
    "S5.final-prop",
    "P-bar_sigma = S_sigma for every sigma in R-pr iff R is a semisimple ring",
)
def second_equals_cofirst_semisimple(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    family, regime = ctx.family("pr")
    out.use(regime)
    violating = next((s for s in family if ctx.triple(s).P_bar != ctx.triple(s).S), None)
    semisimple = ctx.ring.is_semisimple
    out.check((violating is None) == semisimple, reason="equality for all sigma does not match semisimplicity",
              semisimple=semisimple, sigma=describe(violating) if violating is not None else None)
    if violating is not None:
        out.notes["violating_sigma"] = describe(violating)
    return out
