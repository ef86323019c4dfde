"""Edge grafting: moving length between pendant paths.

A pendant path (arm) at u leaves u through a neighbour and runs through
degree-2 vertices to a leaf. Merging two arms of lengths c and d at u into
one arm of length c + d is a total edge grafting; it moves a tree strictly
up in the quasi-order.
"""

from __future__ import annotations

import random
from itertools import islice

import networkx as nx

from tree_energy.config import config
from tree_energy.errors import NotConnected
from tree_energy.extremal.claims import ClaimTag
from tree_energy.extremal.enumeration import enumerate_trees
from tree_energy.extremal.report import ReportBuilder, VerificationReport
from tree_energy.graph import (
    Forest,
    attach_path,
    graft_pair,
    graft_two_vertices,
    max_degree,
    n3,
)
from tree_energy.quasiorder import Relation, compare_forests

__all__ = [
    "pendant_arms",
    "reduce_branching",
    "reduce_degree",
    "branch_reduction_chain",
    "grafting_property_check",
]

_SHOWN = 5


def pendant_arms(tree: Forest, u: int) -> list[list[int]]:
    """Vertices of every arm at u, listed from u outward."""
    arms = []
    for start in tree.adjacency[u]:
        prev, cur, arm = u, start, [start]
        while len(tree.adjacency[cur]) == 2:
            prev, cur = cur, next(w for w in tree.adjacency[cur] if w != prev)
            arm.append(cur)
        if len(tree.adjacency[cur]) == 1:
            arms.append(arm)
    return arms


def _merge_arms(tree: Forest, u: int, arms: list[list[int]]) -> Forest:
    removed = {v for arm in arms for v in arm}
    shifted = u - sum(1 for v in removed if v < u)
    return attach_path(tree.without_vertices(removed), shifted, len(removed))


def _check_tree(tree: Forest) -> None:
    if not tree.is_tree or len(tree.components) != 1:
        raise NotConnected(f"expected a tree, got {len(tree.components)} components")


def reduce_branching(tree: Forest) -> Forest:
    """T' with one branching vertex fewer, the same maximum degree and T < T'.

    The branching vertex chosen has all but one of its branches as arms;
    those arms are merged into one. Among such vertices the one of least
    degree is taken, so a vertex of maximum degree survives.
    """
    _check_tree(tree)
    branching = [v for v, d in enumerate(tree.degrees) if d >= 3]
    if len(branching) < 2:
        raise ValueError(f"need at least two branching vertices, got {len(branching)}")
    extremal = []
    for v in branching:
        arms = pendant_arms(tree, v)
        if len(arms) == tree.degree(v) - 1:
            extremal.append((tree.degree(v), v, arms))
    _, u, arms = min(extremal, key=lambda item: (item[0], item[1]))
    return _merge_arms(tree, u, arms)


def reduce_degree(tree: Forest) -> Forest:
    """Merge the two shortest arms at a vertex of degree >= 4 that has two arms."""
    _check_tree(tree)
    candidates = []
    for v, d in enumerate(tree.degrees):
        if d >= 4:
            arms = pendant_arms(tree, v)
            if len(arms) >= 2:
                candidates.append((-d, v, sorted(arms, key=len)[:2]))
    if not candidates:
        raise ValueError("no vertex of degree >= 4 carries two arms")
    _, u, arms = min(candidates, key=lambda item: (item[0], item[1]))
    return _merge_arms(tree, u, arms)


def branch_reduction_chain(tree: Forest) -> list[Forest]:
    """T, then reduce_branching down to two branching vertices, then reduce_degree down to 3."""
    chain = [tree]
    while n3(chain[-1]) > 2:
        chain.append(reduce_branching(chain[-1]))
    while max_degree(chain[-1]) > 3 and n3(chain[-1]) >= 2:
        chain.append(reduce_degree(chain[-1]))
    return chain


def _pairs(total: int) -> list[tuple[int, int, int, int]]:
    """(a, b, c, d) with a + b = c + d = total, a <= b, c <= d and a < c."""
    splits = [(a, total - a) for a in range(total // 2 + 1)]
    return [(a, b, c, d) for a, b in splits for c, d in splits if a < c]


def _expected(a: int) -> Relation:
    return Relation.strictly_greater if a % 2 == 0 else Relation.strictly_less


def _swaps(base: Forest, u: int, v: int) -> bool:
    """Whether an automorphism of base exchanges u and v."""
    first, second = base.to_networkx(), base.to_networkx()
    nx.set_node_attributes(first, {u: 1, v: 2}, "mark")
    nx.set_node_attributes(second, {u: 2, v: 1}, "mark")
    return nx.is_isomorphic(
        first, second, node_match=lambda x, y: x.get("mark") == y.get("mark")
    )


def _bases(n: int, rng: random.Random) -> list[Forest]:
    bases = [t for m in range(2, n - 1) for t in enumerate_trees(m)]
    limit = config.verification.grafting_max_bases
    if len(bases) > limit:
        bases = rng.sample(bases, limit)
    return bases


def grafting_property_check(n: int) -> VerificationReport:
    """Parity rules of edge grafting at one and at two vertices, and branch reduction, at order n."""
    builder = ReportBuilder(ClaimTag.grafting, n)
    rng = random.Random(config.verification.seed)
    bases = _bases(n, rng)

    tested, wrong = 0, []
    for base in bases:
        for a, b, c, d in _pairs(n - base.n):
            for u in range(base.n):
                tested += 1
                got = compare_forests(graft_pair(base, u, a, b), graft_pair(base, u, c, d))
                if got.relation != _expected(a):
                    wrong.append(f"{base} u={u} ({a},{b}) vs ({c},{d}): {got.relation.value}")
    builder.check(
        "same-vertex grafting follows the parity of the shorter arm",
        not wrong,
        f"{tested} comparisons, {len(wrong)} violations",
        "0 violations",
    )
    for line in wrong[:_SHOWN]:
        builder.note("violation", line)

    tested, wrong = 0, []
    for base in bases:
        for u in range(base.n):
            for v in range(u + 1, base.n):
                if not _swaps(base, u, v):
                    continue
                first = compare_forests(
                    graft_two_vertices(base, u, v, 0, 2), graft_two_vertices(base, u, v, 1, 1)
                )
                if first.relation != Relation.strictly_greater:
                    continue
                for a, b, c, d in _pairs(n - base.n):
                    tested += 1
                    got = compare_forests(
                        graft_two_vertices(base, u, v, a, b),
                        graft_two_vertices(base, u, v, c, d),
                    )
                    if got.relation != _expected(a):
                        wrong.append(
                            f"{base} u={u} v={v} ({a},{b}) vs ({c},{d}): {got.relation.value}"
                        )
    builder.check(
        "two-vertex grafting follows the parity of the shorter arm",
        not wrong,
        f"{tested} comparisons, {len(wrong)} violations",
        "0 violations",
    )
    for line in wrong[:_SHOWN]:
        builder.note("violation", line)

    tested, wrong = 0, []
    for tree in enumerate_trees(n):
        if n3(tree) < 2:
            continue
        tested += 1
        reduced = reduce_branching(tree)
        ok = (
            n3(reduced) == n3(tree) - 1
            and max_degree(reduced) == max_degree(tree)
            and compare_forests(tree, reduced).relation == Relation.strictly_less
        )
        if not ok:
            wrong.append(str(tree))
    builder.check(
        "branch reduction drops one branching vertex, keeps the maximum degree, moves up",
        not wrong,
        f"{tested} trees, {len(wrong)} violations",
        "0 violations",
    )
    for line in islice(wrong, _SHOWN):
        builder.note("violation", line)
    return builder.build()
