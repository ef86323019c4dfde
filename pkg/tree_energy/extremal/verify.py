"""Mechanical re-checks of the extremal claims at a given order.

Each checker rebuilds the base polynomials a claim rests on, holds them
against the printed references, reruns the family comparison or the
dominance bound, and confirms the conclusion directly at order n.
"""

from __future__ import annotations

import operator
import random
from dataclasses import dataclass
from functools import lru_cache, reduce
from multiprocessing import Pool
from typing import Callable, Iterator, Optional

import networkx as nx
from loguru import logger

from tree_energy.charpoly import phi_tilde, subdiv_phi_tilde_sequence
from tree_energy.config import config
from tree_energy.energy import DominanceMode, DominanceResult, dominance_from_bases, energy
from tree_energy.errors import RangeViolation
from tree_energy.extremal.claims import MIN_ORDER, ClaimTag
from tree_energy.extremal.enumeration import enumerate_trees, two_leg_order
from tree_energy.extremal.grafting import branch_reduction_chain, grafting_property_check
from tree_energy.extremal.reference import (
    BOUND_TOLERANCE,
    CROSS_DIFFERENCE_FACTORS,
    ENERGY,
    ENERGY_TOLERANCE,
    GAP_BOUND,
    NEGATIVE_SET_END,
    PHI_TILDE,
)
from tree_energy.extremal.report import ReportBuilder, VerificationReport
from tree_energy.extremal.toplist import predicted_top_list
from tree_energy.graph import (
    DoubleBroomSpec,
    Edge,
    Forest,
    StarlikeSpec,
    arm_edge,
    format_spec,
    is_isomorphic,
    n3,
    parse_forest,
    parse_spec,
    recognize,
    spine_edge,
    subdivide,
)
from tree_energy.poly import ExactPoly, SignKind
from tree_energy.quasiorder import (
    FamilyDominanceCertificate,
    Relation,
    compare,
    family_compare_double,
)

__all__ = ["branch_reduction_report", "verify_theorem", "verify_all"]

_SHOWN = 5


@lru_cache(maxsize=None)
def _phi(text: str) -> ExactPoly:
    return phi_tilde(parse_forest(text))


def _relation(first: str, second: str) -> Relation:
    return compare(_phi(first), _phi(second)).relation


def _tally(builder: ReportBuilder, quantity: str, tested: int, wrong: list[str]) -> None:
    builder.check(quantity, not wrong, f"{tested} checked, {len(wrong)} violations", "0 violations")
    for line in wrong[:_SHOWN]:
        builder.note("violation", line)


def _printed_poly(builder: ReportBuilder, spec: str, poly: ExactPoly) -> None:
    printed = PHI_TILDE.get(spec)
    if printed is None:
        builder.note(f"phi~({spec})", poly.to_text())
        return
    builder.check(f"phi~({spec})", poly == ExactPoly.parse(printed), poly.to_text(), printed)


def _energy_gap(builder: ReportBuilder, low: str, high: str) -> None:
    """E(low) < E(high), from certified energies."""
    e_low, e_high = energy(parse_forest(low)), energy(parse_forest(high))
    for spec, value in ((low, e_low), (high, e_high)):
        if spec in ENERGY:
            builder.close(f"E({spec})", value.midpoint, ENERGY[spec], ENERGY_TOLERANCE)
    builder.check(f"E({high}) - E({low})", (e_high - e_low).positive(), e_high - e_low, "> 0")


# subdivision families


@dataclass(frozen=True)
class _Family:
    """G(k) and H(k): one edge of each base tree subdivided k times"""

    g: str
    g_edge: tuple[str, int]
    h: str
    h_edge: tuple[str, int]
    g_at: Callable[[int], str]
    h_at: Callable[[int], str]
    mode: DominanceMode
    sign: SignKind


_FAMILIES: dict[ClaimTag, _Family] = {
    ClaimTag.fourth_max: _Family(
        "T(10;2,2|2,2)",
        ("spine", 0),
        "S(10;2,6,1)",
        ("arm", 2),
        lambda n: f"T({n};2,2|2,2)",
        lambda n: f"S({n};2,6,{n - 9})",
        DominanceMode.base_gap,
        SignKind.positive_everywhere,
    ),
    ClaimTag.broom_longest_arm: _Family(
        "T(11;3,2|2,2)",
        ("arm", 0),
        "T(11;2,2|2,2)",
        ("spine", 0),
        lambda n: f"T({n};{n - 8},2|2,2)",
        lambda n: f"T({n};2,2|2,2)",
        DominanceMode.mixed_bound,
        SignKind.mixed,
    ),
    ClaimTag.spider_vs_two_leg: _Family(
        "S(9;2,2,2,2)",
        ("arm", 3),
        "S(9;2,1,5)",
        ("arm", 2),
        lambda n: f"S({n};2,2,2,{n - 7})",
        lambda n: f"S({n};2,1,{n - 4})",
        DominanceMode.base_gap,
        SignKind.positive_everywhere,
    ),
    ClaimTag.broom_vs_two_leg: _Family(
        "T(22;2,2|2,2)",
        ("spine", 0),
        "S(22;2,1,18)",
        ("arm", 2),
        lambda n: f"T({n};2,2|2,2)",
        lambda n: f"S({n};2,1,{n - 4})",
        DominanceMode.mixed_bound,
        SignKind.mixed,
    ),
    ClaimTag.three_arm_vs_two_leg: _Family(
        "S(31;4,4,22)",
        ("arm", 2),
        "S(31;2,7,21)",
        ("arm", 2),
        lambda n: f"S({n};4,4,{n - 9})",
        lambda n: f"S({n};2,7,{n - 10})",
        DominanceMode.base_gap,
        SignKind.positive_everywhere,
    ),
}


def _with_edge(text: str, where: tuple[str, int]) -> tuple[Forest, Edge]:
    spec = parse_spec(text)
    assert isinstance(spec, (StarlikeSpec, DoubleBroomSpec))
    kind, index = where
    if kind == "arm":
        return parse_forest(text), arm_edge(spec, index)
    assert isinstance(spec, DoubleBroomSpec)
    return parse_forest(text), spine_edge(spec, index)


def _check_dominance(
    builder: ReportBuilder, claim: ClaimTag, family: _Family, result: DominanceResult, w: ExactPoly
) -> None:
    factors = CROSS_DIFFERENCE_FACTORS[claim.value]
    product = reduce(operator.mul, (ExactPoly.parse(f) for f in factors))
    builder.check(
        "h1 g0 - h0 g1", w == product, w.to_text(), " * ".join(f"({f})" for f in factors)
    )
    builder.check(
        "sign of h1 g0 - h0 g1",
        result.sign == family.sign,
        None if result.sign is None else result.sign.value,
        family.sign.value,
    )
    builder.check("dominance mode", result.mode == family.mode, result.mode.value, family.mode.value)
    builder.close(
        "lower bound on E(H(k)) - E(G(k))",
        result.lower_bound_on_gap.midpoint,
        GAP_BOUND[claim.value],
        BOUND_TOLERANCE,
    )
    builder.note("bound holds for", result.holds_for)

    end = NEGATIVE_SET_END.get(claim.value)
    if end is not None:
        pieces = result.negative_set
        hi = pieces[0].hi if len(pieces) == 1 and pieces[0].lo == 0.0 else None
        builder.check(
            "set where h1 g0 - h0 g1 < 0",
            hi is not None and abs(hi - end) <= ENERGY_TOLERANCE,
            ", ".join(f"({p.lo:.6f}, {'inf' if p.hi is None else f'{p.hi:.6f}'})" for p in pieces),
            f"(0, {end:.6f})",
        )
    if result.alternative_bound is not None:
        bound, alternative = result.lower_bound_on_gap, result.alternative_bound
        builder.check(
            "bound through E(H(1)) - E(G(1)) and the complement",
            abs(alternative.midpoint - bound.midpoint) <= BOUND_TOLERANCE,
            alternative,
            bound,
        )


def _family_claim(builder: ReportBuilder, claim: ClaimTag, n: int) -> None:
    family = _FAMILIES[claim]
    g, ge = _with_edge(family.g, family.g_edge)
    h, he = _with_edge(family.h, family.h_edge)
    base = g.n
    g0, g1 = subdiv_phi_tilde_sequence(g, ge, 1)
    h0, h1 = subdiv_phi_tilde_sequence(h, he, 1)
    for spec, poly in (
        (family.g_at(base), g0),
        (family.h_at(base), h0),
        (family.g_at(base + 1), g1),
        (family.h_at(base + 1), h1),
    ):
        _printed_poly(builder, spec, poly)

    result = dominance_from_bases(g0, g1, h0, h1)
    for key, spec in (
        ("G0", family.g_at(base)),
        ("H0", family.h_at(base)),
        ("G1", family.g_at(base + 1)),
        ("H1", family.h_at(base + 1)),
    ):
        if spec in ENERGY:
            builder.close(f"E({spec})", result.energies[key].midpoint, ENERGY[spec], ENERGY_TOLERANCE)
    _check_dominance(builder, claim, family, result, h1 * g0 - h0 * g1)
    if claim == ClaimTag.spider_vs_two_leg:
        builder.check(
            f"E({family.g_at(base)}) = E({family.h_at(base)})",
            result.exact_zero_gap,
            result.exact_zero_gap,
            True,
        )

    k = n - base
    members = (subdivide(g, ge, k), subdivide(h, he, k))
    for label, member, target in (
        ("G", members[0], family.g_at(n)),
        ("H", members[1], family.h_at(n)),
    ):
        shape = recognize(member)
        builder.check(
            f"{label}({k}) is {target}",
            is_isomorphic(member, parse_forest(target)),
            member if shape is None else format_spec(shape),
            target,
        )
    e_g, e_h = energy(members[0]), energy(members[1])
    gap = e_h - e_g
    builder.check(f"E({family.h_at(n)}) - E({family.g_at(n)})", gap.positive(), gap, "> 0")
    builder.check(
        "direct gap respects the family bound",
        gap.upper >= result.lower_bound_on_gap.lower,
        gap,
        f">= {result.lower_bound_on_gap}",
    )


# double brooms


def _double_brooms(n: int, shortest: int) -> Iterator[tuple[int, int, int, int]]:
    """(a, b, c, d) up to symmetry: a <= b, c <= d, (a, b) <= (c, d), every arm >= shortest."""
    for a in range(shortest, n):
        for b in range(a, n):
            for c in range(shortest, n):
                for d in range(c, n):
                    if a + b + c + d > n - 2:
                        break
                    if (a, b) <= (c, d):
                        yield a, b, c, d


def _broom_route(n: int, arms: tuple[int, int, int, int]) -> Optional[str]:
    """None when T(n;a,b|c,d) is shown to have energy at most E(T(n;2,2|2,2)), else why not.

    Arms with an even shorter arm are first collapsed to (2, *) at each end,
    then the length is moved to one end, then the long arm is shortened.
    """
    a, b, c, d = arms
    tree = f"T({n};{a},{b}|{c},{d})"
    if arms == (2, 2, 2, 2):
        return None
    p, q = a + b - 2, c + d - 2
    collapsed = f"T({n};{p},2|2,{q})"
    if _relation(tree, collapsed) not in (Relation.strictly_less, Relation.equal):
        return f"{tree} not <= {collapsed}"
    x = p + q - 2
    moved = f"T({n};{x},2|2,2)"
    if _relation(collapsed, moved) not in (Relation.strictly_less, Relation.equal):
        return f"{collapsed} not <= {moved}"
    top = f"T({n};2,2|2,2)"
    if x <= n - 9:
        if _relation(moved, top) != Relation.strictly_less:
            return f"{moved} not < {top}"
        return None
    if not (energy(parse_forest(top)) - energy(parse_forest(moved))).positive():
        return f"E({moved}) not < E({top})"
    return None


def _short_arm_route(n: int, arms: tuple[int, int, int, int]) -> Optional[str]:
    a, b, c, d = arms
    tree = f"T({n};{a},{b}|{c},{d})"
    target = f"S({n};1,2,{n - 4})"
    if _relation(tree, target) != Relation.strictly_less:
        return f"{tree} not < {target}"
    return None


def _check_short_arm_brooms(builder: ReportBuilder, n: int) -> None:
    tested, wrong = 0, []
    for arms in _double_brooms(n, 1):
        if 1 not in arms:
            continue
        tested += 1
        if (why := _short_arm_route(n, arms)) is not None:
            wrong.append(why)
    _tally(builder, f"T(n;1,b|c,d) < S({n};1,2,{n - 4})", tested, wrong)


def _check_broom_bound(builder: ReportBuilder, n: int, direct: bool) -> None:
    tested, wrong = 0, []
    top = energy(parse_forest(f"T({n};2,2|2,2)"))
    for arms in _double_brooms(n, 2):
        if arms == (2, 2, 2, 2):
            continue
        tested += 1
        if (why := _broom_route(n, arms)) is not None:
            wrong.append(why)
        elif direct:
            a, b, c, d = arms
            value = energy(parse_forest(f"T({n};{a},{b}|{c},{d})"))
            if not (top - value).positive():
                wrong.append(f"E(T({n};{a},{b}|{c},{d})) = {value} not below {top}")
    _tally(builder, f"E(T(n;a,b|c,d)) < E(T({n};2,2|2,2)), arms >= 2", tested, wrong)


def _broom_short_arm(builder: ReportBuilder, n: int) -> None:
    _check_short_arm_brooms(builder, n)


def _broom_long_arm(builder: ReportBuilder, n: int) -> None:
    g, g_arm = _with_edge("T(12;3,2|2,2)", ("arm", 0))
    h, h_spine = _with_edge("T(12;2,2|2,2)", ("spine", 0))
    g_spine, h_next = (0, 1), (1, 2)
    record = family_compare_double(g, g_arm, g_spine, h, h_spine, h_next)
    printed: dict[str, str] = {}
    for base in record.bases:
        l, k = base.position
        printed[f"T({12 + l + k};{3 + l},2|2,2)"] = base.g
        printed[f"T({12 + l + k};2,2|2,2)"] = base.h
    for spec, text in printed.items():
        _printed_poly(builder, spec, ExactPoly.parse(text))
    for base in record.bases:
        l, k = base.position
        builder.check(
            f"base pair ({l},{k})",
            base.verdict.weakly_less,
            base.verdict.relation.value,
            "StrictlyLess or Equal",
        )
    if not isinstance(record, FamilyDominanceCertificate):
        builder.check("double subdivision certificate", False, record.reason, "certificate")
        return
    builder.check("certificate is strict", record.strict, record.strict, True)

    tested, wrong = 0, []
    for a in range(3, n - 8):
        tested += 1
        l, k = a - 3, n - 9 - a
        member = f"T({n};{a},2|2,2)"
        ok = (
            is_isomorphic(subdivide(subdivide(g, g_arm, l), g_spine, k), parse_forest(member))
            and record.relation_at(l, k) == Relation.strictly_less
            and _relation(member, f"T({n};2,2|2,2)") == Relation.strictly_less
        )
        if not ok:
            wrong.append(member)
    _tally(builder, f"T({n};a,2|2,2) < T({n};2,2|2,2) for 3 <= a <= {n - 9}", tested, wrong)


def _broom_bound(builder: ReportBuilder, n: int) -> None:
    _check_broom_bound(builder, n, direct=True)


# starlike trees


def _partitions(total: int, parts: int, smallest: int = 1) -> Iterator[tuple[int, ...]]:
    """Nondecreasing tuples of at least `parts` positive integers summing to total."""
    if parts <= 1 and total >= smallest:
        yield (total,)
    for first in range(smallest, total // 2 + 1):
        for rest in _partitions(total - first, parts - 1, first):
            yield (first, *rest)


def _star(n: int, arms: tuple[int, ...]) -> str:
    return f"S({n};{','.join(str(a) for a in arms)})"


def _check_three_arm_maximum(builder: ReportBuilder, n: int) -> None:
    target = (4, 4, n - 9)
    tested, wrong = 0, []
    for arms in _partitions(n - 1, 3):
        if len(arms) != 3 or 2 in arms or arms == tuple(sorted(target)):
            continue
        tested += 1
        if _relation(_star(n, arms), _star(n, target)) != Relation.strictly_less:
            wrong.append(_star(n, arms))
    _tally(builder, f"three-arm trees without an arm of 2 are < {_star(n, target)}", tested, wrong)


def _check_many_arm_maximum(builder: ReportBuilder, n: int) -> None:
    target = (2, 2, 2, n - 7)
    tested, wrong = 0, []
    for arms in _partitions(n - 1, 4):
        if arms == tuple(sorted(target)):
            continue
        tested += 1
        if _relation(_star(n, arms), _star(n, target)) != Relation.strictly_less:
            wrong.append(_star(n, arms))
    _tally(builder, f"starlike trees with four or more arms are < {_star(n, target)}", tested, wrong)


def _starlike_max(builder: ReportBuilder, n: int) -> None:
    _check_three_arm_maximum(builder, n)
    _check_many_arm_maximum(builder, n)


# two-leg chain and top list


def _check_two_leg_chain(builder: ReportBuilder, n: int) -> list[str]:
    chain = [format_spec(s) for s in two_leg_order(n)]
    builder.check("chain length", len(chain) == (n - 3) // 2, len(chain), (n - 3) // 2)
    builder.note("chain", " > ".join(chain))
    wrong = [
        f"{upper} vs {lower}: {_relation(upper, lower).value}"
        for upper, lower in zip(chain, chain[1:])
        if _relation(upper, lower) != Relation.strictly_greater
    ]
    _tally(builder, "adjacent two-leg trees are strictly ordered", len(chain) - 1, wrong)
    return chain


def _two_leg_chain(builder: ReportBuilder, n: int) -> None:
    _check_two_leg_chain(builder, n)


def _random_tree(n: int, rng: random.Random) -> Forest:
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    return Forest.from_networkx(nx.from_prufer_sequence(sequence))


def _reduction_failure(n: int, tree: Forest) -> Optional[str]:
    chain = branch_reduction_chain(tree)
    final = chain[-1]
    steps_up = all(
        compare(phi_tilde(lower), phi_tilde(upper)).relation == Relation.strictly_less
        for lower, upper in zip(chain, chain[1:])
    )
    if not steps_up:
        return "a grafting step did not move up"
    shape = recognize(final)
    if not isinstance(shape, DoubleBroomSpec):
        return f"reduced to {final}, not a double broom"
    arms = (shape.a, shape.b, shape.c, shape.d)
    return _short_arm_route(n, arms) if 1 in arms else _broom_route(n, arms)


def _check_branch_reduction(builder: ReportBuilder, n: int) -> None:
    if n <= config.enumeration.cap:
        trees = [tree for tree in enumerate_trees(n) if n3(tree) >= 2]
        label = "trees"
    else:
        rng = random.Random(config.verification.seed + n)
        sampled = [_random_tree(n, rng) for _ in range(config.verification.reduction_samples)]
        trees = [tree for tree in sampled if n3(tree) >= 2]
        builder.note("random trees with a single branching vertex", len(sampled) - len(trees))
        label = "random trees"
    wrong = [f"{tree}: {why}" for tree in trees if (why := _reduction_failure(n, tree)) is not None]
    _tally(builder, f"{label} with two branching vertices reduce below the top list", len(trees), wrong)


def branch_reduction_report(n: int) -> VerificationReport:
    """Reduce every tree of order n with two or more branching vertices to a double broom.

    Exhaustive up to the enumeration cap, sampled above it.
    """
    if n < MIN_ORDER[ClaimTag.broom_bound]:
        raise RangeViolation(
            f"branch reduction is checked for n >= {MIN_ORDER[ClaimTag.broom_bound]}, got n={n}"
        )
    builder = ReportBuilder(ClaimTag.top_list, n)
    _check_branch_reduction(builder, n)
    return builder.build()


def _top_list(builder: ReportBuilder, n: int) -> None:
    predicted = predicted_top_list(n)
    builder.check(
        "predicted list length", len(predicted.trees) == (n - 7) // 2, len(predicted.trees), (n - 7) // 2
    )
    last = f"S({n};2,7,{n - 10})"
    builder.check("last predicted tree", predicted.trees[-1] == last, predicted.trees[-1], last)
    chain = _check_two_leg_chain(builder, n)

    # the three dropped two-leg trees
    wrong = [t for t in chain[-3:] if _relation(t, last) != Relation.strictly_less]
    _tally(builder, f"last three two-leg trees are < {last}", 3, wrong)

    _check_three_arm_maximum(builder, n)
    _energy_gap(builder, f"S({n};4,4,{n - 9})", last)

    _check_many_arm_maximum(builder, n)
    _energy_gap(builder, f"S({n};2,2,2,{n - 7})", f"S({n};2,1,{n - 4})")

    _check_short_arm_brooms(builder, n)
    _check_broom_bound(builder, n, direct=False)
    _energy_gap(builder, f"T({n};2,2|2,2)", f"S({n};2,1,{n - 4})")

    _check_branch_reduction(builder, n)


_CHECKERS: dict[ClaimTag, Callable[[ReportBuilder, int], None]] = {
    ClaimTag.broom_short_arm: _broom_short_arm,
    ClaimTag.broom_long_arm: _broom_long_arm,
    ClaimTag.broom_bound: _broom_bound,
    ClaimTag.two_leg_chain: _two_leg_chain,
    ClaimTag.starlike_max: _starlike_max,
    ClaimTag.top_list: _top_list,
}


def verify_theorem(claim: ClaimTag | str, n: int) -> VerificationReport:
    """Re-check one claim at order n; failures are report rows, not exceptions."""
    claim = ClaimTag(claim)
    if n < MIN_ORDER[claim]:
        raise RangeViolation(f"{claim.value} holds for n >= {MIN_ORDER[claim]}, got n={n}")
    logger.info(f"verifying {claim.value} at n={n}")
    if claim == ClaimTag.grafting:
        report = grafting_property_check(n)
    else:
        builder = ReportBuilder(claim, n)
        if claim in _FAMILIES:
            _family_claim(builder, claim, n)
        else:
            _CHECKERS[claim](builder, n)
        report = builder.build()
    if report.passed:
        logger.info(f"{claim.value} n={n}: PASS")
    else:
        logger.warning(f"{claim.value} n={n}: FAIL, {len(report.failures())} failing checks")
    return report


def _run(job: tuple[ClaimTag, int]) -> VerificationReport:
    return verify_theorem(*job)


def verify_all(
    claims: Optional[list[ClaimTag]] = None,
    orders: Optional[list[int]] = None,
    jobs: Optional[int] = None,
) -> list[VerificationReport]:
    """Every requested claim at the given orders, or at its configured default orders.

    Orders below a claim's range are skipped; if nothing is left, RangeViolation.
    """
    jobs = config.workers.jobs if jobs is None else jobs
    selected = [ClaimTag(claim) for claim in (list(ClaimTag) if claims is None else claims)]
    work: list[tuple[ClaimTag, int]] = []
    skipped: list[tuple[ClaimTag, int]] = []
    for claim in selected:
        for n in (
            orders
            if orders is not None
            else config.verification.default_orders.get(claim.value, [MIN_ORDER[claim]])
        ):
            (work if n >= MIN_ORDER[claim] else skipped).append((claim, n))
    for claim, n in skipped:
        logger.info(f"skipping {claim.value} at n={n}, it holds for n >= {MIN_ORDER[claim]}")
    if not work:
        raise RangeViolation(
            "no requested claim applies at "
            + ", ".join(sorted({f"n={n}" for _, n in skipped}))
        )
    if jobs > 1 and len(work) > 1:
        with Pool(processes=min(jobs, len(work))) as pool:
            return pool.map(_run, work, chunksize=1)
    return [_run(job) for job in work]
