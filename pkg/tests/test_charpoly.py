import random
from math import comb

import networkx as nx
import pytest
import sympy

from tree_energy.charpoly import (
    char_poly_pair,
    cut_edge_identity_check,
    matching_counts,
    matching_counts_by_deletion,
    phi_from_phi_tilde,
    phi_tilde,
    subdiv_phi_sequence,
    subdiv_phi_tilde_sequence,
)
from tree_energy.errors import EdgeNotPresent
from tree_energy.extremal import enumerate_trees
from tree_energy.extremal.reference import PHI_TILDE
from tree_energy.graph import (
    DoubleBroomSpec,
    Forest,
    PathSpec,
    build,
    disjoint_union,
    parse_forest,
    spine_edge,
    subdivide,
)
from tree_energy.poly import ExactPoly


def path(n: int) -> Forest:
    return build(PathSpec(n=n))


def random_tree(rng: random.Random, n: int) -> Forest:
    if n == 1:
        return Forest(1)
    if n == 2:
        return Forest(2, ((0, 1),))
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return Forest.from_networkx(nx.from_prufer_sequence(seq))


def adjacency_charpoly(f: Forest) -> ExactPoly:
    x = sympy.Symbol("x")
    matrix = sympy.zeros(f.n, f.n)
    for u, v in f.edges:
        matrix[u, v] = matrix[v, u] = 1
    coeffs = matrix.charpoly(x).all_coeffs()
    return ExactPoly.from_descending(int(c) for c in coeffs)


def test_matching_counts_examples():
    assert matching_counts(path(4)) == [1, 3, 1]
    assert matching_counts(parse_forest("S(10;2,6,1)")) == [1, 9, 27, 31, 12, 1]
    assert matching_counts(path(1)) == [1]


def test_path_matching_counts_are_binomials():
    for n in range(1, 20):
        assert matching_counts(path(n)) == [comb(n - i, i) for i in range(n // 2 + 1)]


@pytest.mark.parametrize("spec,expected", sorted(PHI_TILDE.items()))
def test_printed_phi_tilde(spec, expected):
    assert phi_tilde(parse_forest(spec)) == ExactPoly.parse(expected)


def test_char_poly_pair_of_an_edge():
    pair = char_poly_pair(path(2))
    assert pair.phi == ExactPoly.parse("x^2-1")
    assert pair.phi_tilde == ExactPoly.parse("x^2+1")
    assert pair.n == 2


def test_phi_matches_adjacency_determinant():
    rng = random.Random(11)
    for _ in range(25):
        tree = random_tree(rng, rng.randint(1, 10))
        assert char_poly_pair(tree).phi == adjacency_charpoly(tree)


def test_phi_is_bipartite_shaped():
    rng = random.Random(12)
    for _ in range(40):
        tree = random_tree(rng, rng.randint(1, 16))
        pair = char_poly_pair(tree)
        assert pair.phi.degree == tree.n
        for power in range(tree.n + 1):
            if (tree.n - power) % 2:
                assert pair.phi.coefficient(power) == 0
            assert abs(pair.phi.coefficient(power)) == pair.phi_tilde.coefficient(power)
        assert phi_from_phi_tilde(pair.phi_tilde) == pair.phi


def test_deletion_oracle_agrees_with_tree_dp():
    rng = random.Random(13)
    for _ in range(60):
        n = rng.randint(1, 14)
        tree = random_tree(rng, n)
        assert matching_counts(tree) == matching_counts_by_deletion(tree)


def test_forest_components_multiply():
    rng = random.Random(14)
    for _ in range(30):
        first = random_tree(rng, rng.randint(1, 9))
        second = random_tree(rng, rng.randint(1, 9))
        union = disjoint_union(first, second)
        assert phi_tilde(union) == phi_tilde(first) * phi_tilde(second)
        assert matching_counts(union) == matching_counts_by_deletion(union)


def test_cut_edge_identity_examples():
    assert cut_edge_identity_check(path(3), (1, 2))
    assert cut_edge_identity_check(path(2), (0, 1))
    with pytest.raises(EdgeNotPresent):
        cut_edge_identity_check(path(3), (0, 2))


def test_cut_edge_identity_every_edge_of_small_trees():
    for n in range(2, 13):
        for tree in enumerate_trees(n):
            for edge in tree.edges:
                assert cut_edge_identity_check(tree, edge)


def test_subdivision_sequence_of_an_edge():
    seq = subdiv_phi_tilde_sequence(path(2), (0, 1), 2)
    assert seq == [
        ExactPoly.parse("x^2+1"),
        ExactPoly.parse("x^3+2x"),
        ExactPoly.parse("x^4+3x^2+1"),
    ]


def test_subdivision_sequence_reaches_printed_polynomial():
    spec = DoubleBroomSpec(n=11, a=2, b=2, c=2, d=2)
    seq = subdiv_phi_tilde_sequence(build(spec), spine_edge(spec, 0), 1)
    assert seq[1] == ExactPoly.parse(PHI_TILDE["T(12;2,2|2,2)"])


def test_subdivision_recurrences_match_direct_construction():
    rng = random.Random(15)
    for _ in range(200):
        tree = random_tree(rng, rng.randint(2, 12))
        edge = rng.choice(tree.edges)
        k = rng.randint(0, 12)
        tilde = subdiv_phi_tilde_sequence(tree, edge, k)
        assert tilde[k] == phi_tilde(subdivide(tree, edge, k))
        plain = subdiv_phi_sequence(tree, edge, k, validate=True)
        assert plain[k] == char_poly_pair(subdivide(tree, edge, k)).phi


def test_joining_path_identity():
    # G1 at u and G2 at v joined by paths of 1, 2 and 3 edges
    rng = random.Random(16)
    x = ExactPoly.x()
    for _ in range(40):
        g1 = random_tree(rng, rng.randint(1, 8))
        g2 = random_tree(rng, rng.randint(1, 8))
        u, v = rng.randrange(g1.n), g1.n + rng.randrange(g2.n)
        base = disjoint_union(g1, g2)
        h1 = Forest(base.n, base.edges + ((u, v),))
        h2 = subdivide(h1, (u, v), 1)
        h3 = subdivide(h1, (u, v), 2)
        phis = [char_poly_pair(h).phi for h in (h1, h2, h3)]
        assert phis[2] == x * phis[1] - phis[0]


def test_subdivision_sequence_rejects_missing_edge():
    with pytest.raises(EdgeNotPresent):
        subdiv_phi_tilde_sequence(path(4), (0, 3), 2)
