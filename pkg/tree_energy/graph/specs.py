from __future__ import annotations

import re
from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

from tree_energy.errors import InvalidSpec, NotAForest
from tree_energy.graph.forest import Edge, Forest, from_graph6

__all__ = [
    "PathSpec",
    "StarlikeSpec",
    "DoubleBroomSpec",
    "ExplicitSpec",
    "TreeSpec",
    "build",
    "parse_spec",
    "format_spec",
    "parse_forest",
    "arm_edge",
    "spine_edge",
    "recognize",
]


class _Spec(BaseModel):
    model_config = ConfigDict(frozen=True)

    def __str__(self) -> str:
        return format_spec(self)  # type: ignore[arg-type]


class PathSpec(_Spec):
    """P(n): the path on n vertices, labeled 0..n-1 along the path"""

    kind: Literal["path"] = "path"
    n: int = Field(..., description="order of the path")

    @model_validator(mode="after")
    def _check(self) -> PathSpec:
        if self.n < 1:
            raise InvalidSpec(f"P({self.n}): order must be at least 1")
        return self


class StarlikeSpec(_Spec):
    """S(n; a1..ak): pendant paths of lengths a_i joined at a center vertex 0"""

    kind: Literal["starlike"] = "starlike"
    n: int = Field(..., description="order of the tree")
    arms: tuple[int, ...] = Field(..., description="pendant path lengths in declared order")

    @model_validator(mode="after")
    def _check(self) -> StarlikeSpec:
        if not self.arms:
            raise InvalidSpec("a starlike tree needs at least one arm")
        if any(a < 1 for a in self.arms):
            raise InvalidSpec(f"arm lengths must be positive, got {list(self.arms)}")
        if sum(self.arms) != self.n - 1:
            raise InvalidSpec(
                f"arm lengths {list(self.arms)} sum to {sum(self.arms)}, expected n-1={self.n - 1}"
            )
        return self


class DoubleBroomSpec(_Spec):
    """T(n; a,b|c,d): a spine path with arms a,b at one end and c,d at the other"""

    kind: Literal["double_broom"] = "double_broom"
    n: int = Field(..., description="order of the tree")
    a: int
    b: int
    c: int
    d: int

    @model_validator(mode="after")
    def _check(self) -> DoubleBroomSpec:
        arms = (self.a, self.b, self.c, self.d)
        if any(x < 1 for x in arms):
            raise InvalidSpec(f"arm lengths must be positive, got {list(arms)}")
        if sum(arms) > self.n - 2:
            raise InvalidSpec(
                f"arm lengths {list(arms)} leave fewer than 2 spine vertices in order {self.n}"
            )
        return self

    @property
    def spine(self) -> int:
        return self.n - self.a - self.b - self.c - self.d


class ExplicitSpec(_Spec):
    """E(n; u-v,...): a forest given by its edge list"""

    kind: Literal["explicit"] = "explicit"
    n: int = Field(..., description="number of vertices")
    edges: tuple[tuple[int, int], ...] = Field(default=())

    @model_validator(mode="after")
    def _check(self) -> ExplicitSpec:
        if self.n < 1:
            raise InvalidSpec(f"E({self.n};...): order must be at least 1")
        try:
            Forest(self.n, self.edges)
        except NotAForest as e:
            raise InvalidSpec(str(e)) from e
        return self


TreeSpec = Annotated[
    Union[PathSpec, StarlikeSpec, DoubleBroomSpec, ExplicitSpec],
    Field(discriminator="kind"),
]


def _path_edges(vertices: list[int]) -> list[Edge]:
    return list(zip(vertices, vertices[1:]))


def _arm_vertices(spec: StarlikeSpec | DoubleBroomSpec) -> list[tuple[int, list[int]]]:
    """(attachment vertex, arm vertices from the attachment outward) per arm."""
    if isinstance(spec, StarlikeSpec):
        out, nxt = [], 1
        for length in spec.arms:
            out.append((0, list(range(nxt, nxt + length))))
            nxt += length
        return out
    m = spec.spine
    out, nxt = [], m
    for anchor, length in ((0, spec.a), (0, spec.b), (m - 1, spec.c), (m - 1, spec.d)):
        out.append((anchor, list(range(nxt, nxt + length))))
        nxt += length
    return out


def build(spec: PathSpec | StarlikeSpec | DoubleBroomSpec | ExplicitSpec) -> Forest:
    """Construct the forest a spec describes, with its documented labeling."""
    if isinstance(spec, PathSpec):
        return Forest(spec.n, tuple(_path_edges(list(range(spec.n)))))
    if isinstance(spec, ExplicitSpec):
        return Forest(spec.n, spec.edges)
    edges: list[Edge] = []
    if isinstance(spec, DoubleBroomSpec):
        edges.extend(_path_edges(list(range(spec.spine))))
    for anchor, arm in _arm_vertices(spec):
        edges.extend(_path_edges([anchor, *arm]))
    return Forest(spec.n, tuple(edges))


def arm_edge(spec: StarlikeSpec | DoubleBroomSpec, arm: int) -> Edge:
    """The pendant edge (leaf end) of the arm with the given index."""
    arms = _arm_vertices(spec)
    if not 0 <= arm < len(arms):
        raise InvalidSpec(f"arm index {arm} out of range for {format_spec(spec)}")
    anchor, vertices = arms[arm]
    path = [anchor, *vertices]
    return (path[-2], path[-1])


def spine_edge(spec: PathSpec | DoubleBroomSpec, i: int) -> Edge:
    """The i-th edge of a double broom's spine (or of a path)."""
    length = spec.n if isinstance(spec, PathSpec) else spec.spine
    if not 0 <= i < length - 1:
        raise InvalidSpec(f"spine edge {i} out of range for {format_spec(spec)}")
    return (i, i + 1)


_PATH = re.compile(r"^P\((\d+)\)$")
_STAR = re.compile(r"^S\((\d+);(\d+(?:,\d+)*)\)$")
_BROOM = re.compile(r"^T\((\d+);(\d+),(\d+)\|(\d+),(\d+)\)$")
_EXPLICIT = re.compile(r"^E\((\d+)(?:;((?:\d+-\d+)(?:,\d+-\d+)*)?)?\)$")


def parse_spec(text: str) -> PathSpec | StarlikeSpec | DoubleBroomSpec | ExplicitSpec:
    """Parse the tree mini-language; lines that match no form are tried as graph6."""
    compact = "".join(text.split())
    if m := _PATH.match(compact):
        return PathSpec(n=int(m.group(1)))
    if m := _STAR.match(compact):
        return StarlikeSpec(
            n=int(m.group(1)), arms=tuple(int(a) for a in m.group(2).split(","))
        )
    if m := _BROOM.match(compact):
        n, a, b, c, d = (int(g) for g in m.groups())
        return DoubleBroomSpec(n=n, a=a, b=b, c=c, d=d)
    if m := _EXPLICIT.match(compact):
        body = m.group(2) or ""
        edges = tuple(
            (int(u), int(v)) for u, v in (pair.split("-") for pair in body.split(",") if pair)
        )
        return ExplicitSpec(n=int(m.group(1)), edges=edges)
    if compact[:1] in ("P", "S", "T", "E") and "(" in compact:
        raise InvalidSpec(f"malformed tree spec {text!r}")
    try:
        forest = from_graph6(compact)
    except NotAForest as e:
        raise InvalidSpec(f"{text!r} is neither a tree spec nor a graph6 forest") from e
    if forest.n < 1:
        raise InvalidSpec(f"{text!r} decodes to an empty graph")
    return ExplicitSpec(n=forest.n, edges=forest.edges)


def format_spec(spec: PathSpec | StarlikeSpec | DoubleBroomSpec | ExplicitSpec) -> str:
    if isinstance(spec, PathSpec):
        return f"P({spec.n})"
    if isinstance(spec, StarlikeSpec):
        return f"S({spec.n};{','.join(str(a) for a in spec.arms)})"
    if isinstance(spec, DoubleBroomSpec):
        return f"T({spec.n};{spec.a},{spec.b}|{spec.c},{spec.d})"
    return f"E({spec.n};{','.join(f'{u}-{v}' for u, v in spec.edges)})"


def parse_forest(text: str) -> Forest:
    return build(parse_spec(text))


def _walk_arm(forest: Forest, start: int, came_from: int) -> Optional[int]:
    """Length of the pendant path leaving came_from through start, or None if it branches."""
    length, prev, cur = 1, came_from, start
    while True:
        nbrs = [w for w in forest.adjacency[cur] if w != prev]
        if not nbrs:
            return length
        if len(nbrs) > 1:
            return None
        prev, cur = cur, nbrs[0]
        length += 1


def recognize(
    tree: Forest,
) -> Optional[PathSpec | StarlikeSpec | DoubleBroomSpec]:
    """Name a tree as P(n), S(n;...) with ascending arms, or T(n;a,b|c,d); else None."""
    if not tree.is_tree:
        return None
    branching = [v for v in range(tree.n) if len(tree.adjacency[v]) >= 3]
    if not branching:
        return PathSpec(n=tree.n)
    if len(branching) == 1:
        center = branching[0]
        arms = sorted(_walk_arm(tree, w, center) or 0 for w in tree.adjacency[center])
        return StarlikeSpec(n=tree.n, arms=tuple(arms))
    if len(branching) == 2 and all(len(tree.adjacency[v]) == 3 for v in branching):
        pairs = []
        for v in branching:
            lengths = [_walk_arm(tree, w, v) for w in tree.adjacency[v]]
            arms = sorted(x for x in lengths if x is not None)
            if len(arms) != 2:
                return None
            pairs.append(tuple(arms))
        (a, b), (c, d) = sorted(pairs)
        return DoubleBroomSpec(n=tree.n, a=a, b=b, c=c, d=d)
    return None
