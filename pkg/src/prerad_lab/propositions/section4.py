"""Classes of co-first modules, pseudocomplements and conatural classes."""
import itertools
from typing import List, Tuple

from ..calculus import (
    Evaluable,
    Regime,
    UniversePreradical,
    assignment_of,
    has_flag,
    precedes,
    universe_hat,
)
from ..classes import (
    ModuleClass,
    boolean_lattice_violations,
    is_conatural,
    perp,
    pseudocomplement_violations,
    satisfies_cn,
    whole_class,
    zero_class,
)
from ..cofirst import family_triple, is_family_fully_co_first
from ..errors import SizeBoundError, UniverseError
from ..module import direct_sum, projective_cover, radical, superfluous
from ..preradical import Alpha, Hat
from ..suites import Mode, Outcome, SuiteContext, describe, proposition

SAMPLE_CLASSES = 128


def _sample(classes: List[ModuleClass]) -> List[ModuleClass]:
    if len(classes) <= SAMPLE_CLASSES:
        return classes
    step = -(-len(classes) // SAMPLE_CLASSES)
    return classes[::step]


def _with_family(ctx: SuiteContext, kind: str, out: Outcome) -> List[Evaluable]:
    family, regime = ctx.family(kind)
    out.use(regime)
    return list(ctx.pool) + list(family)


def _hat(sigma: Evaluable, ctx: SuiteContext) -> Evaluable:
    if isinstance(sigma, UniversePreradical):
        return universe_hat(sigma, ctx.universe)
    return Hat(sigma)


def _class_of(ctx: SuiteContext, members) -> ModuleClass:
    return ModuleClass(ctx.universe, frozenset(members))


@proposition(
    "S4.prop-pseudocomplement",
    "every Q in R-quot has a unique pseudocomplement: all modules with no nonzero quotients in Q",
)
def pseudocomplements(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    classes, exhaustive = ctx.quotient_closed
    if not exhaustive:
        out.use(Regime.GENERATED)
    sample = _sample(classes)
    for c in sample:
        for problem in pseudocomplement_violations(c, classes):
            out.fail(reason=problem)
        once = perp(c)
        out.check(perp(perp(once)) == once, reason="perp^3 != perp", cls=str(c))
        out.check(once.is_quotient_closed, reason="perp is not quotient closed", cls=str(c))
    for c, d in itertools.product(sample, repeat=2):
        if c <= d:
            out.check(perp(d) <= perp(c), reason="perp is not antitone", smaller=str(c), larger=str(d))
    out.notes["classes"] = len(classes)
    out.notes["sampled"] = len(sample)
    out.notes["exhaustive"] = exhaustive
    return out


@proposition(
    "S4.thm-CN",
    "for Q in R-quot: Q is conatural iff Q satisfies (CN) iff Q is the pseudocomplement of a class",
)
def conatural_cn(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    classes, exhaustive = ctx.quotient_closed
    if not exhaustive:
        out.use(Regime.GENERATED)
    perps = {perp(c) for c in classes}
    for c in classes:
        conatural = is_conatural(c)
        out.check(conatural == satisfies_cn(c), reason="conatural and (CN) disagree",
                  cls=str(c), conatural=conatural)
        out.check(conatural == (c in perps), reason="conatural but not a pseudocomplement", cls=str(c))
    out.notes["exhaustive"] = exhaustive
    return out


@proposition("S4.remark-conat-boolean", "R-conat is a Boolean lattice and {0}, R-Mod are conatural classes")
def conatural_boolean(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    classes = ctx.conatural
    for problem in boolean_lattice_violations(classes):
        out.fail(reason=problem)
    out.notes["conatural"] = [str(c) for c in classes]
    return out


@proposition("S4.remark-cop8", "if sigma <= beta then P_beta <= P_sigma, and P_A is the intersection of the P_r")
def cofirst_classes_antitone(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    universe = ctx.universe
    for sigma, tau in itertools.product(ctx.pool, repeat=2):
        if precedes(sigma, tau, universe):
            out.check(ctx.triple(tau).P <= ctx.triple(sigma).P, reason="P is not antitone",
                      sigma=describe(sigma), tau=describe(tau))
    family = ctx.trads
    meet = family_triple(family, universe).P
    for i in universe.indices:
        if i == universe.zero_index:
            continue
        direct = bool(is_family_fully_co_first(universe[i], family))
        out.check(direct == (i in meet), reason="P_A differs from the intersection", module=ctx.name(i))
    return out


@proposition("S4.prop-P-perp", "P_sigma = (T_sigma)^perp")
def cofirst_class_is_perp(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    for sigma in _with_family(ctx, "pr", out):
        triple = ctx.triple(sigma)
        where = {"sigma": describe(sigma)}
        out.check(triple.P == perp(triple.T), reason="P != perp(T)", **where)
        out.check(triple.P == ctx.triple(_hat(sigma, ctx)).P, reason="P_sigma != P_hat", **where)
    return out


@proposition("S4.cor-P-conatural", "P_sigma is a conatural class")
def cofirst_class_conatural(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    for sigma in _with_family(ctx, "pr", out):
        out.check(is_conatural(ctx.triple(sigma).P), reason="P is not conatural", sigma=describe(sigma))
    return out


@proposition(
    "S4.prop-P-alpha-superfluous",
    "if N is a proper fully invariant submodule of M and M is fully alpha_N^M-co-first, then N is superfluous in M",
)
def alpha_superfluous(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    hits = 0
    for i, n in ctx.fi_pairs:
        if n.is_whole or i not in ctx.triple(Alpha(n)).P:
            continue
        hits += 1
        out.check(superfluous(n), reason="N is not superfluous", module=ctx.name(i), N=ctx.fmt(n))
    out.notes["instances"] = hits
    return out


def _hat_is_zero(sigma: Evaluable, ctx: SuiteContext) -> bool:
    return all(sub.is_zero for sub in assignment_of(_hat(sigma, ctx), ctx.universe))


@proposition("S4.cor-24", "P_sigma = R-Mod iff hat sigma = 0 iff T_sigma = {0}")
def cofirst_everything(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    for sigma in _with_family(ctx, "pr", out):
        triple = ctx.triple(sigma)
        answers = (triple.P.is_whole, _hat_is_zero(sigma, ctx), triple.T.is_trivial)
        out.check(len(set(answers)) == 1, reason="the three conditions disagree",
                  sigma=describe(sigma), answers=list(answers))
    return out


@proposition(
    "S4.prop-vring-CN",
    "R-Mod is not P_sigma for a nonzero sigma iff T_sigma != {0} for every nonzero sigma iff R is a left V-ring",
)
def vring_classes(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    family, regime = ctx.family("pr")
    out.use(regime)
    nonzero = [s for s in family if not all(sub.is_zero for sub in assignment_of(s, ctx.universe))]
    first = not any(ctx.triple(s).P.is_whole for s in nonzero)
    second = all(not ctx.triple(s).T.is_trivial for s in nonzero)
    v_ring = all(radical(ctx.universe[i]).is_zero for i in ctx.universe.indices)
    out.check(first == second == v_ring, reason="the three conditions disagree",
              not_cofirst_everything=first, torsion_nontrivial=second, v_ring=v_ring)
    out.check(v_ring == ctx.ring.is_semisimple, reason="V-ring test disagrees with semisimplicity",
              v_ring=v_ring)
    out.notes["v_ring"] = v_ring
    return out


@proposition("S4.prop-8.3", "for sigma in R-trad, P_sigma = {M | sigma(M) << M}")
def trad_superfluous(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    for sigma in ctx.trads:
        values = assignment_of(sigma, ctx.universe)
        expected = _class_of(ctx, (i for i, sub in enumerate(values) if superfluous(sub)))
        out.check(ctx.triple(sigma).P == expected, reason="P differs from the superfluous class",
                  sigma=describe(sigma))
    return out


@proposition("S4.prop-cftrad", "for sigma in R-trad, (P_sigma)^perp = T_sigma, so T_sigma is conatural")
def trad_torsion_conatural(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    for sigma in ctx.trads:
        triple = ctx.triple(sigma)
        out.check(perp(triple.P) == triple.T, reason="perp(P) != T", sigma=describe(sigma))
        out.check(is_conatural(triple.T), reason="T is not conatural", sigma=describe(sigma))
    return out


@proposition("S4.lemma-coroL", "for sigma in R-trad, F_sigma <= P_sigma")
def trad_free_inside(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    strict = {}
    for sigma in ctx.trads:
        triple = ctx.triple(sigma)
        out.check(triple.F <= triple.P, reason="F not inside P", sigma=describe(sigma))
        extra = sorted(triple.P.members - triple.F.members)
        if extra:
            strict[describe(sigma)] = [ctx.name(i) for i in extra]
    out.notes["strict"] = strict
    return out


@proposition("S4.prop-rid-trad", "an idempotent radical sigma is a t-radical iff F_sigma <= P_sigma")
def idempotent_radical_trad(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    family, regime = ctx.family("idrad")
    out.use(regime)
    for sigma in family:
        triple = ctx.triple(sigma)
        inside = triple.F <= triple.P
        t_radical = has_flag(sigma, ctx.universe, "t_radical")
        where = {"sigma": describe(sigma), "inside": inside, "t_radical": t_radical}
        out.check(inside == t_radical, reason="t-radical flag differs from F inside P", **where)
        out.check(inside == triple.F.is_quotient_closed,
                  reason="F inside P does not match F closed under quotients", **where)
    out.notes["family_size"] = len(family)
    return out


def _closed_under_sums(ctx: SuiteContext, cls: ModuleClass) -> Tuple[bool, int]:
    universe = ctx.universe
    checked = 0
    members = [i for i in cls if i != universe.zero_index]
    for a, b in itertools.combinations_with_replacement(members, 2):
        if universe[a].order * universe[b].order > universe.max_order:
            continue
        try:
            total = universe.index_of(direct_sum(universe[a], universe[b]))
        except UniverseError:
            continue
        checked += 1
        if total not in cls:
            return False, checked
    return True, checked


@proposition(
    "S4.prop-propseudo",
    "if C is conatural and perp(C) = P_sigma for an idempotent t-radical sigma, then C is closed under coproducts",
)
def conatural_coproducts(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    idempotent = [s for s in ctx.trads if has_flag(s, ctx.universe, "idempotent")]
    cofirst = {ctx.triple(s).P for s in idempotent}
    sums = 0
    for c in ctx.conatural:
        if perp(c) not in cofirst:
            continue
        closed, checked = _closed_under_sums(ctx, c)
        sums += checked
        out.check(closed, reason="not closed under direct sums", cls=str(c))
    out.notes["scope"] = "bounded-coproduct"
    out.notes["sums_checked"] = sums
    return out


def _vacuous(reason: str) -> Outcome:
    return Outcome(notes={"reason": reason})


@proposition(
    "S4.thm-ECNCUC",
    "R-conat <= R-TORS iff R is a left MAX ring",
    mode=Mode.VACUOUS,
)
def conat_tors(ctx: SuiteContext) -> Outcome:
    return _vacuous("every finite ring is a left MAX ring")


@proposition("S4.thm-MAXRing", "if CN_{R-trad} = R-conat then R is a left MAX ring", mode=Mode.VACUOUS)
def max_ring(ctx: SuiteContext) -> Outcome:
    return _vacuous("every finite ring is a left MAX ring")


@proposition(
    "S4.cor-semilocal",
    "for a semilocal ring R: R is left perfect iff CN_{R-trad} = R-conat",
    mode=Mode.VACUOUS,
)
def semilocal_perfect(ctx: SuiteContext) -> Outcome:
    return _vacuous("every finite ring is semilocal and left perfect")


@proposition(
    "S4.lemma-tpcfq",
    "for an idempotent radical sigma over a perfect ring: T_sigma is closed under projective covers "
    "iff F_sigma is closed under quotients",
)
def projective_cover_closure(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    universe = ctx.universe
    covers = {}
    for i in ctx.nonzero:
        try:
            covers[i] = universe.index_of(projective_cover(universe[i])[0])
        except (UniverseError, SizeBoundError):
            pass
    family, regime = ctx.family("idrad")
    out.use(regime)
    for sigma in family:
        triple = ctx.triple(sigma)
        unknown = [i for i in triple.T if i != universe.zero_index and i not in covers]
        cover_closed = all(covers[i] in triple.T for i in triple.T if i in covers)
        where = {"sigma": describe(sigma), "cover_closed": cover_closed}
        if not cover_closed or not unknown:
            out.check(cover_closed == triple.F.is_quotient_closed,
                      reason="projective-cover closure differs from quotient closure of F", **where)
        else:
            out.partial(reason="projective covers of torsion members lie outside the universe",
                        modules=[ctx.name(i) for i in unknown], **where)
    out.notes["covers_outside_universe"] = [ctx.name(i) for i in ctx.nonzero if i not in covers]
    return out


@proposition("S4.thm-conatperfect1", "for a left perfect ring, R-conat = {T_sigma | sigma in R-trad}")
def conatural_are_trad_torsion(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    conatural = set(ctx.conatural)
    torsion = {ctx.triple(s).T for s in ctx.trads}
    out.check(conatural == torsion, reason="conatural classes differ from t-radical torsion classes",
              only_conatural=sorted(str(c) for c in conatural - torsion),
              only_torsion=sorted(str(c) for c in torsion - conatural))
    return out


@proposition("S4.cor-conatforleftperfect", "for a left perfect ring, CN_{R-trad} = R-conat")
def conatural_are_trad_cofirst(ctx: SuiteContext) -> Outcome:
    out = Outcome()
    conatural = set(ctx.conatural)
    cofirst = {ctx.triple(s).P for s in ctx.trads}
    out.check(conatural == cofirst, reason="conatural classes differ from t-radical co-first classes",
              only_conatural=sorted(str(c) for c in conatural - cofirst),
              only_cofirst=sorted(str(c) for c in cofirst - conatural))
    out.check(zero_class(ctx.universe) in conatural and whole_class(ctx.universe) in conatural,
              reason="{0} or the whole universe is not conatural")
    return out
