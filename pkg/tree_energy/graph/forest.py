from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import networkx as nx

from tree_energy.errors import EdgeNotPresent, NotAForest, VertexNotPresent

__all__ = [
    "Edge",
    "Forest",
    "canonical_code",
    "canonical_form",
    "is_isomorphic",
    "from_graph6",
    "to_graph6",
]

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Forest:
    """Simple acyclic graph on the vertices 0..n-1.

    Edges are stored as sorted (min, max) pairs. An empty forest (n=0) is
    allowed so that vertex deletions never have to special-case it.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise NotAForest(f"vertex count must be non-negative, got {self.n}")
        normalized = []
        for u, v in self.edges:
            if u == v:
                raise NotAForest(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise NotAForest(f"edge {u}-{v} leaves the vertex range 0..{self.n - 1}")
            normalized.append(_norm(u, v))
        unique = sorted(set(normalized))
        if len(unique) != len(normalized):
            raise NotAForest("duplicate edge")

        parent = list(range(self.n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for u, v in unique:
            ru, rv = find(u), find(v)
            if ru == rv:
                raise NotAForest(f"edge {u}-{v} closes a cycle")
            parent[ru] = rv

        object.__setattr__(self, "edges", tuple(unique))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> Forest:
        return cls(n, tuple(edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(nbrs)) for nbrs in adj)

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self.adjacency[v])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency)

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self._edge_set

    @cached_property
    def _edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexNotPresent(f"vertex {v} is not in a forest of order {self.n}")

    def check_edge(self, e: Edge) -> Edge:
        u, v = e
        if not self.has_edge(u, v):
            raise EdgeNotPresent(f"edge {u}-{v} is not in the forest")
        return _norm(u, v)

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            stack, comp = [start], []
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.adjacency[v]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            out.append(tuple(sorted(comp)))
        return tuple(out)

    @property
    def is_tree(self) -> bool:
        return self.n >= 1 and len(self.edges) == self.n - 1

    def bipartition(self) -> tuple[frozenset[int], frozenset[int]]:
        color = [-1] * self.n
        for comp in self.components:
            color[comp[0]] = 0
            stack = [comp[0]]
            while stack:
                v = stack.pop()
                for w in self.adjacency[v]:
                    if color[w] < 0:
                        color[w] = 1 - color[v]
                        stack.append(w)
        return (
            frozenset(v for v in range(self.n) if color[v] == 0),
            frozenset(v for v in range(self.n) if color[v] == 1),
        )

    def without_edge(self, e: Edge) -> Forest:
        """G - uv: same vertex set, one edge fewer."""
        edge = self.check_edge(e)
        return Forest(self.n, tuple(f for f in self.edges if f != edge))

    def without_vertices(self, removed: Iterable[int]) -> Forest:
        """G - S with the surviving vertices relabeled in increasing order."""
        gone = set(removed)
        for v in gone:
            self.check_vertex(v)
        keep = [v for v in range(self.n) if v not in gone]
        index = {v: i for i, v in enumerate(keep)}
        return Forest(
            len(keep),
            tuple(
                (index[u], index[v])
                for u, v in self.edges
                if u in index and v in index
            ),
        )

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> Forest:
        index = {v: i for i, v in enumerate(sorted(graph.nodes))}
        return cls(len(index), tuple((index[u], index[v]) for u, v in graph.edges))

    @cached_property
    def code(self) -> str:
        return canonical_code(self)

    def __str__(self) -> str:
        body = ",".join(f"{u}-{v}" for u, v in self.edges)
        return f"E({self.n};{body})"


def _rooted_codes(forest: Forest, root: int) -> tuple[dict[int, str], dict[int, list[int]]]:
    """AHU codes of every subtree when the component is hung from root."""
    adj = forest.adjacency
    parent = {root: -1}
    order = [root]
    for v in order:
        for w in adj[v]:
            if w != parent[v]:
                parent[w] = v
                order.append(w)
    codes: dict[int, str] = {}
    children: dict[int, list[int]] = {}
    for v in reversed(order):
        kids = [w for w in adj[v] if w != parent[v]]
        kids.sort(key=lambda w: codes[w])
        children[v] = kids
        codes[v] = "(" + "".join(codes[w] for w in kids) + ")"
    return codes, children


def _centroids(forest: Forest, comp: tuple[int, ...]) -> list[int]:
    adj = forest.adjacency
    root = comp[0]
    parent = {root: -1}
    order = [root]
    for v in order:
        for w in adj[v]:
            if w != parent[v]:
                parent[w] = v
                order.append(w)
    size = {v: 1 for v in order}
    for v in reversed(order):
        if parent[v] >= 0:
            size[parent[v]] += size[v]
    total = len(comp)
    heaviest = {}
    for v in order:
        parts = [size[w] for w in adj[v] if w != parent[v]]
        parts.append(total - size[v])
        heaviest[v] = max(parts)
    best = min(heaviest.values())
    return sorted(v for v in order if heaviest[v] == best)


def _component_code(forest: Forest, comp: tuple[int, ...]) -> tuple[str, int]:
    best: tuple[str, int] | None = None
    for c in _centroids(forest, comp):
        code = _rooted_codes(forest, c)[0][c]
        if best is None or code < best[0]:
            best = (code, c)
    assert best is not None
    return best


def canonical_code(forest: Forest) -> str:
    """Isomorphism invariant string: centroid-rooted AHU code per component, sorted."""
    return "".join(sorted(_component_code(forest, comp)[0] for comp in forest.components))


def canonical_form(forest: Forest) -> Forest:
    """Relabel the forest along the preorder of its canonical rooted form.

    Isomorphic forests map to identical Forest values.
    """
    rooted = sorted(_component_code(forest, comp) for comp in forest.components)
    label: dict[int, int] = {}
    for _, root in rooted:
        _, children = _rooted_codes(forest, root)
        stack = [root]
        while stack:
            v = stack.pop()
            label[v] = len(label)
            stack.extend(reversed(children[v]))
    return Forest(forest.n, tuple((label[u], label[v]) for u, v in forest.edges))


def is_isomorphic(first: Forest, second: Forest) -> bool:
    return first.n == second.n and canonical_code(first) == canonical_code(second)


def from_graph6(text: str) -> Forest:
    """Decode a graph6 string; anything that is not a forest raises NotAForest."""
    raw = text.strip()
    if raw.startswith(">>graph6<<"):
        raw = raw[len(">>graph6<<") :]
    try:
        graph = nx.from_graph6_bytes(raw.encode("ascii"))
    except (ValueError, nx.NetworkXError, UnicodeEncodeError) as e:
        raise NotAForest(f"not a graph6 string: {text!r} ({e})") from e
    if graph.number_of_nodes() > 0 and not nx.is_forest(graph):
        raise NotAForest(f"graph6 input {text!r} contains a cycle")
    return Forest.from_networkx(graph)


def to_graph6(forest: Forest) -> str:
    return nx.to_graph6_bytes(forest.to_networkx(), header=False).decode("ascii").strip()
