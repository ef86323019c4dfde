from tree_energy.graph.forest import (
    Edge,
    Forest,
    canonical_code,
    canonical_form,
    from_graph6,
    is_isomorphic,
    to_graph6,
)
from tree_energy.graph.operations import (
    Classification,
    TreeClass,
    attach_path,
    classify,
    disjoint_union,
    graft_pair,
    graft_two_vertices,
    max_degree,
    n3,
    subdivide,
    subdivide_pair,
)
from tree_energy.graph.specs import (
    DoubleBroomSpec,
    ExplicitSpec,
    PathSpec,
    StarlikeSpec,
    TreeSpec,
    arm_edge,
    build,
    format_spec,
    parse_forest,
    parse_spec,
    recognize,
    spine_edge,
)

__all__ = [
    "Classification",
    "DoubleBroomSpec",
    "Edge",
    "ExplicitSpec",
    "Forest",
    "PathSpec",
    "StarlikeSpec",
    "TreeClass",
    "TreeSpec",
    "arm_edge",
    "attach_path",
    "build",
    "canonical_code",
    "canonical_form",
    "classify",
    "disjoint_union",
    "format_spec",
    "from_graph6",
    "graft_pair",
    "graft_two_vertices",
    "is_isomorphic",
    "max_degree",
    "n3",
    "parse_forest",
    "parse_spec",
    "recognize",
    "spine_edge",
    "subdivide",
    "subdivide_pair",
    "to_graph6",
]
