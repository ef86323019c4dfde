from __future__ import annotations

from tree_energy.graph.forest import Forest, canonical_code
from tree_energy.poly.exact import ExactPoly

__all__ = ["matching_counts", "matching_counts_by_deletion", "matching_generating_poly"]

_Y = ExactPoly.x()
_ONE = ExactPoly.constant(1)


def _component_generating_poly(forest: Forest, root: int) -> ExactPoly:
    """sum_i m(T, i) y**i for the component containing root.

    ``free[v]`` counts matchings of the subtree of v leaving v unmatched,
    ``total[v]`` all matchings of that subtree.
    """
    adj = forest.adjacency
    parent = {root: -1}
    order = [root]
    for v in order:
        for w in adj[v]:
            if w != parent[v]:
                parent[w] = v
                order.append(w)

    free: dict[int, ExactPoly] = {}
    total: dict[int, ExactPoly] = {}
    for v in reversed(order):
        unmatched, matched = _ONE, ExactPoly.zero()
        for c in adj[v]:
            if c == parent[v]:
                continue
            matched = matched * total[c] + unmatched * free[c] * _Y
            unmatched = unmatched * total[c]
        free[v] = unmatched
        total[v] = unmatched + matched
        for c in adj[v]:
            if c != parent[v]:
                del free[c], total[c]
    return total[root]


def matching_generating_poly(forest: Forest) -> ExactPoly:
    """Matching generating polynomial of a forest, a product over its components."""
    result = _ONE
    for comp in forest.components:
        result = result * _component_generating_poly(forest, comp[0])
    return result


def _pad(poly: ExactPoly, n: int) -> list[int]:
    size = n // 2 + 1
    return [poly.coefficient(i) for i in range(size)]


def matching_counts(f: Forest) -> list[int]:
    """[m(G,0), ..., m(G, n//2)]: number of i-edge matchings, by tree dynamic programming."""
    return _pad(matching_generating_poly(f), f.n)


def matching_counts_by_deletion(f: Forest) -> list[int]:
    """Same counts from m(G) = m(G - e) + y m(G - u - v), memoized on canonical codes.

    Exponential without the memo; kept as an independent oracle for small forests.
    """
    memo: dict[str, ExactPoly] = {}

    def solve(g: Forest) -> ExactPoly:
        if not g.edges:
            return _ONE
        key = canonical_code(g)
        if key in memo:
            return memo[key]
        u, v = g.edges[0]
        value = solve(g.without_edge((u, v))) + solve(g.without_vertices((u, v))) * _Y
        memo[key] = value
        return value

    return _pad(solve(f), f.n)
