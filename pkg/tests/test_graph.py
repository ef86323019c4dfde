import random

import networkx as nx
import pytest

from tree_energy.errors import (
    EdgeNotPresent,
    InvalidSpec,
    NotAForest,
    NotConnected,
    SameVertex,
    VertexNotPresent,
)
from tree_energy.graph import (
    DoubleBroomSpec,
    Forest,
    PathSpec,
    StarlikeSpec,
    TreeClass,
    arm_edge,
    build,
    canonical_code,
    canonical_form,
    classify,
    disjoint_union,
    format_spec,
    from_graph6,
    graft_pair,
    graft_two_vertices,
    is_isomorphic,
    max_degree,
    n3,
    parse_forest,
    parse_spec,
    recognize,
    spine_edge,
    subdivide,
    subdivide_pair,
    to_graph6,
)


def path(n: int) -> Forest:
    return build(PathSpec(n=n))


def random_tree(rng: random.Random, n: int) -> Forest:
    if n == 1:
        return Forest(1)
    if n == 2:
        return Forest(2, ((0, 1),))
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return Forest.from_networkx(nx.from_prufer_sequence(seq))


def test_starlike_build():
    tree = parse_forest("S(10;2,6,1)")
    assert tree.n == 10 and tree.is_tree
    assert n3(tree) == 1 and tree.degree(0) == 3
    assert recognize(tree) == StarlikeSpec(n=10, arms=(1, 2, 6))


def test_single_vertex_path():
    tree = build(PathSpec(n=1))
    assert tree.n == 1 and tree.edges == ()


def test_double_broom_build():
    spec = DoubleBroomSpec(n=11, a=2, b=2, c=2, d=2)
    tree = build(spec)
    assert spec.spine == 3
    assert [v for v in range(11) if tree.degree(v) == 3] == [0, 2]
    assert tree.has_edge(0, 1) and tree.has_edge(1, 2)


@pytest.mark.parametrize(
    "spec",
    [
        "S(10;2,6,2)",
        "S(10;0,9)",
        "T(9;2,2|2,2)",
        "T(11;0,2|2,2)",
        "P(0)",
        "E(3;0-1,1-2,0-2)",
    ],
)
def test_invalid_specs(spec):
    with pytest.raises(InvalidSpec):
        parse_spec(spec)


def test_spec_text_round_trip():
    for text in ["P(7)", "S(10;2,6,1)", "T(11;2,2|2,2)", "E(4;0-1,1-2,1-3)"]:
        assert format_spec(parse_spec(text)) == text


def test_graph6_input_and_output():
    tree = parse_forest("Bg")
    assert is_isomorphic(tree, path(3))
    assert to_graph6(path(3)) == "Bg"
    assert is_isomorphic(from_graph6(to_graph6(parse_forest("S(10;2,6,1)"))), parse_forest("S(10;2,6,1)"))
    with pytest.raises(NotAForest):
        from_graph6("Bw")
    with pytest.raises(InvalidSpec):
        parse_spec("Bw")


def test_forest_validation():
    with pytest.raises(NotAForest):
        Forest(3, ((0, 1), (1, 2), (2, 0)))
    with pytest.raises(NotAForest):
        Forest(2, ((0, 1), (1, 0)))
    with pytest.raises(NotAForest):
        Forest(2, ((0, 0),))
    with pytest.raises(NotAForest):
        Forest(2, ((0, 2),))


def test_subdivide_edge_gives_path():
    assert is_isomorphic(subdivide(path(2), (0, 1), 3), path(5))


def test_subdivide_pendant_edge_of_short_arm():
    spec = StarlikeSpec(n=10, arms=(2, 6, 1))
    for n in (10, 11, 15):
        grown = subdivide(build(spec), arm_edge(spec, 2), n - 10)
        assert is_isomorphic(grown, build(StarlikeSpec(n=n, arms=(2, 6, n - 9))))


def test_subdivide_order_bookkeeping():
    spec = DoubleBroomSpec(n=11, a=3, b=2, c=2, d=2)
    for k in range(5):
        assert subdivide(build(spec), arm_edge(spec, 0), k).n == 11 + k


def test_subdivide_missing_edge():
    with pytest.raises(EdgeNotPresent):
        subdivide(path(4), (0, 2), 1)


def test_subdivide_zero_is_identity_and_composes():
    rng = random.Random(1)
    for _ in range(50):
        tree = random_tree(rng, rng.randint(2, 12))
        e, f = rng.choice(tree.edges), rng.choice(tree.edges)
        assert is_isomorphic(subdivide(tree, e, 0), tree)
        j, k = rng.randint(0, 4), rng.randint(0, 4)
        once = subdivide(tree, e, j)
        image = f if f != e else (once.n - 1, e[1]) if j else e
        twice = subdivide(once, image, k)
        assert twice.n == tree.n + j + k


def test_subdivide_pair_matches_double_broom_family():
    g_spec = DoubleBroomSpec(n=12, a=3, b=2, c=2, d=2)
    g = build(g_spec)
    grown = subdivide_pair(g, arm_edge(g_spec, 0), spine_edge(g_spec, 0), 1, 2)
    assert is_isomorphic(grown, build(DoubleBroomSpec(n=15, a=4, b=2, c=2, d=2)))
    with pytest.raises(EdgeNotPresent):
        subdivide_pair(g, (0, 1), (1, 0), 1, 1)


def test_graft_pair_examples():
    assert is_isomorphic(graft_pair(path(1), 0, 1, 1), path(3))
    grown = graft_pair(path(6), 0, 2, 3)
    assert is_isomorphic(grown, build(StarlikeSpec(n=11, arms=(2, 3, 5))))
    both_ends = graft_pair(graft_pair(path(3), 0, 2, 2), 2, 2, 2)
    assert is_isomorphic(both_ends, build(DoubleBroomSpec(n=11, a=2, b=2, c=2, d=2)))
    with pytest.raises(VertexNotPresent):
        graft_pair(path(2), 5, 1, 1)


def test_graft_pair_is_symmetric():
    rng = random.Random(2)
    for _ in range(30):
        tree = random_tree(rng, rng.randint(1, 9))
        u = rng.randrange(tree.n)
        a, b = rng.randint(0, 4), rng.randint(0, 4)
        assert is_isomorphic(graft_pair(tree, u, a, b), graft_pair(tree, u, b, a))


def test_graft_two_vertices():
    assert is_isomorphic(graft_two_vertices(path(2), 0, 1, 1, 1), path(4))
    assert is_isomorphic(graft_two_vertices(path(2), 0, 1, 0, 2), path(4))
    tree = parse_forest("S(7;2,2,2)")
    assert graft_two_vertices(tree, 2, 4, 3, 1).n == 7 + 3 + 1
    with pytest.raises(SameVertex):
        graft_two_vertices(path(2), 0, 0, 1, 1)
    with pytest.raises(VertexNotPresent):
        graft_two_vertices(path(2), 0, 3, 1, 1)


def test_classify_examples():
    assert classify(path(9)).tree_class == TreeClass.path
    assert classify(parse_forest("S(10;2,6,1)")).tree_class == TreeClass.two_leg
    assert classify(parse_forest("S(10;4,4,1)")).tree_class == TreeClass.three_arm
    assert classify(parse_forest("S(9;2,2,2,2)")).tree_class == TreeClass.many_arm
    broom = classify(parse_forest("T(11;2,2|2,2)"))
    assert broom.tree_class == TreeClass.multi_branch
    assert broom.n3 == 2 and broom.max_degree == 3


def test_classify_needs_a_tree():
    with pytest.raises(NotConnected):
        classify(Forest(3, ((0, 1),)))


def test_canonical_code_matches_networkx_isomorphism():
    rng = random.Random(4)
    for _ in range(150):
        n = rng.randint(1, 11)
        first, second = random_tree(rng, n), random_tree(rng, n)
        expected = nx.is_isomorphic(first.to_networkx(), second.to_networkx())
        assert is_isomorphic(first, second) == expected
        assert (canonical_form(first) == canonical_form(second)) == expected


def test_canonical_form_keeps_the_shape():
    tree = parse_forest("T(13;3,2|2,4)")
    relabeled = canonical_form(tree)
    assert canonical_code(relabeled) == canonical_code(tree)
    assert sorted(relabeled.degrees) == sorted(tree.degrees)


def test_disjoint_union_and_degree_helpers():
    union = disjoint_union(path(3), parse_forest("S(4;1,1,1)"))
    assert union.n == 7 and len(union.components) == 2
    assert max_degree(union) == 3 and n3(union) == 1
    assert canonical_code(union) == canonical_code(disjoint_union(parse_forest("S(4;1,1,1)"), path(3)))


def test_recognize_round_trips_named_shapes():
    for text in ["P(6)", "S(12;1,3,7)", "S(9;2,2,2,2)", "T(14;2,3|2,4)"]:
        spec = recognize(parse_forest(text))
        assert spec is not None
        assert is_isomorphic(build(spec), parse_forest(text))
    assert recognize(parse_forest("E(10;0-1,1-2,2-3,3-4,1-5,2-6,3-7,7-8,7-9)")) is None


def test_bipartition_splits_every_edge():
    tree = parse_forest("T(13;3,2|2,4)")
    left, right = tree.bipartition()
    assert len(left) + len(right) == 13
    assert all((u in left) != (v in left) for u, v in tree.edges)
