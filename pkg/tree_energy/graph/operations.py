from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, Field

from tree_energy.errors import EdgeNotPresent, NotConnected, SameVertex
from tree_energy.graph.forest import Edge, Forest

__all__ = [
    "subdivide",
    "subdivide_pair",
    "graft_pair",
    "graft_two_vertices",
    "attach_path",
    "disjoint_union",
    "n3",
    "max_degree",
    "TreeClass",
    "Classification",
    "classify",
]


def subdivide(forest: Forest, e: Edge, k: int) -> Forest:
    """G(k): replace the edge u-v by a path of length k+1.

    The k new vertices are labeled n..n+k-1 in order from u towards v.
    """
    if k < 0:
        raise ValueError(f"subdivision count must be non-negative, got {k}")
    u, v = e
    forest.check_edge(e)
    if k == 0:
        return forest
    n = forest.n
    path = [u, *range(n, n + k), v]
    edges = [f for f in forest.edges if f != (min(u, v), max(u, v))]
    edges.extend(zip(path, path[1:]))
    return Forest(n + k, tuple(edges))


def subdivide_pair(forest: Forest, e1: Edge, e2: Edge, l: int, k: int) -> Forest:
    """G(l, k): subdivide e1 l times, then e2 k times."""
    first = forest.check_edge(e1)
    second = forest.check_edge(e2)
    if first == second:
        raise EdgeNotPresent(f"the two subdivided edges must differ, got {e1} twice")
    return subdivide(subdivide(forest, e1, l), e2, k)


def attach_path(forest: Forest, u: int, length: int) -> Forest:
    """Attach a new pendant path with `length` edges at u."""
    forest.check_vertex(u)
    if length < 0:
        raise ValueError(f"path length must be non-negative, got {length}")
    n = forest.n
    path = [u, *range(n, n + length)]
    return Forest(n + length, forest.edges + tuple(zip(path, path[1:])))


def graft_pair(g: Forest, u: int, a: int, b: int) -> Forest:
    """G_u(a, b): two new pendant paths of lengths a and b at u."""
    return attach_path(attach_path(g, u, a), u, b)


def graft_two_vertices(g: Forest, u: int, v: int, a: int, b: int) -> Forest:
    """G_{u,v}(a, b): a pendant path of length a at u and one of length b at v."""
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise SameVertex(f"grafting at two vertices needs u != v, got {u} twice")
    return attach_path(attach_path(g, u, a), v, b)


def disjoint_union(first: Forest, second: Forest) -> Forest:
    shift = first.n
    return Forest(
        first.n + second.n,
        first.edges + tuple((u + shift, v + shift) for u, v in second.edges),
    )


def n3(tree: Forest) -> int:
    """Number of vertices of degree at least 3."""
    return sum(1 for d in tree.degrees if d >= 3)


def max_degree(tree: Forest) -> int:
    return max(tree.degrees, default=0)


class TreeClass(str, Enum):
    """Partition of the trees of one order used by the extremal arguments"""

    path = "path"
    two_leg = "two-leg"
    three_arm = "three-arm"
    many_arm = "many-arm"
    multi_branch = "multi-branch"


class Classification(BaseModel):
    tree_class: TreeClass = Field(..., description="class of the tree")
    n3: int = Field(..., description="vertices of degree at least 3")
    max_degree: int = Field(..., description="largest vertex degree")
    arms: tuple[int, ...] | None = Field(
        None, description="ascending arm lengths when the tree is starlike"
    )


def _starlike_arms(tree: Forest, center: int) -> tuple[int, ...]:
    arms = []
    for start in tree.adjacency[center]:
        length, prev, cur = 1, center, start
        while len(tree.adjacency[cur]) == 2:
            prev, cur = cur, next(w for w in tree.adjacency[cur] if w != prev)
            length += 1
        arms.append(length)
    return tuple(sorted(arms))


def classify(t: Forest) -> Classification:
    """Sort a tree into path / two-leg / three-arm / many-arm / multi-branch.

    two-leg trees are P_n(2, a, b); three-arm trees are the other starlike
    trees of maximum degree 3; many-arm trees are starlike with a vertex of
    degree 4 or more; multi-branch trees have two or more branching vertices.
    """
    if not t.is_tree or len(t.components) != 1:
        raise NotConnected(f"classify needs a tree, got {len(t.components)} components")
    branching = [v for v, d in enumerate(t.degrees) if d >= 3]
    delta = max_degree(t)
    if not branching:
        return Classification(tree_class=TreeClass.path, n3=0, max_degree=delta)
    if len(branching) >= 2:
        return Classification(
            tree_class=TreeClass.multi_branch, n3=len(branching), max_degree=delta
        )
    arms = _starlike_arms(t, branching[0])
    if delta >= 4:
        tree_class = TreeClass.many_arm
    elif 2 in arms:
        tree_class = TreeClass.two_leg
    else:
        tree_class = TreeClass.three_arm
    return Classification(tree_class=tree_class, n3=1, max_degree=delta, arms=arms)
