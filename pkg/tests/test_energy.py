import math
import random
from fractions import Fraction
from functools import reduce

import networkx as nx
import pytest
import sympy

from tree_energy.charpoly import phi_tilde, subdiv_phi_tilde_sequence
from tree_energy.energy import (
    DominanceMode,
    EnergyValue,
    algebraic_energy,
    classify_dominance,
    d_sequence_at,
    energies_equal,
    energy,
    energy_diff_coulson,
    energy_from_phi_tilde,
    log_ratio_integral,
    squared_spectrum_poly,
)
from tree_energy.errors import (
    DegreeMismatch,
    NegativeCoefficient,
    NotMonic,
    OrderMismatch,
    QuadratureFailure,
)
from tree_energy.extremal.reference import (
    BOUND_TOLERANCE,
    CROSS_DIFFERENCE_FACTORS,
    ENERGY,
    ENERGY_TOLERANCE,
    GAP_BOUND,
    NEGATIVE_SET_END,
)
from tree_energy.graph import (
    Forest,
    PathSpec,
    StarlikeSpec,
    arm_edge,
    build,
    parse_forest,
    parse_spec,
    spine_edge,
    subdivide,
)
from tree_energy.poly import ExactPoly, SignKind

SIX_PLUS_TWO_ROOT_FIVE = 6 + 2 * math.sqrt(5)


def random_tree(rng: random.Random, n: int) -> Forest:
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return Forest.from_networkx(nx.from_prufer_sequence(seq))


def product(texts: list[str]) -> ExactPoly:
    return reduce(lambda a, b: a * b, (ExactPoly.parse(t) for t in texts))


def family(text: str, edge: str, index: int):
    spec = parse_spec(text)
    e = arm_edge(spec, index) if edge == "arm" else spine_edge(spec, index)
    return build(spec), e


# G, its edge, H, its edge, per claim whose proof runs through the subdivision families
FAMILIES = {
    "fourth-max": (("T(10;2,2|2,2)", "spine", 0), ("S(10;2,6,1)", "arm", 2)),
    "broom-longest-arm": (("T(11;3,2|2,2)", "arm", 0), ("T(11;2,2|2,2)", "spine", 0)),
    "spider-vs-two-leg": (("S(9;2,2,2,2)", "arm", 3), ("S(9;2,1,5)", "arm", 2)),
    "broom-vs-two-leg": (("T(22;2,2|2,2)", "spine", 0), ("S(22;2,1,18)", "arm", 2)),
    "three-arm-vs-two-leg": (("S(31;4,4,22)", "arm", 2), ("S(31;2,7,21)", "arm", 2)),
}


def families(claim: str):
    g_args, h_args = FAMILIES[claim]
    return (*family(*g_args), *family(*h_args))


@pytest.mark.parametrize("spec,expected", sorted(ENERGY.items()))
def test_printed_energies(spec, expected):
    value = energy(parse_forest(spec))
    assert value.radius <= 1e-9
    assert value.midpoint == pytest.approx(expected, abs=ENERGY_TOLERANCE)


def test_single_vertex_and_edge():
    assert energy(Forest(1)) == EnergyValue(midpoint=0.0, radius=0.0)
    assert energy(Forest(2, ((0, 1),))).midpoint == pytest.approx(2.0, abs=1e-9)


def test_spider_and_two_leg_tree_share_an_energy():
    first = phi_tilde(parse_forest("S(9;2,1,5)"))
    second = phi_tilde(parse_forest("S(9;2,2,2,2)"))
    assert first != second
    for p in (first, second):
        value = energy_from_phi_tilde(p, 1e-12)
        assert value.midpoint == pytest.approx(SIX_PLUS_TWO_ROOT_FIVE, abs=1e-10)
    assert energies_equal(first, second) is True
    assert sympy.simplify(algebraic_energy(first) - (6 + 2 * sympy.sqrt(5))) == 0


def test_energies_equal_detects_a_gap():
    first = phi_tilde(parse_forest("S(9;2,1,5)"))
    assert energies_equal(first, phi_tilde(build(PathSpec(n=9)))) is False


def test_squared_spectrum_poly():
    # phi(S(9;2,1,5)) = x^9-8x^7+20x^5-17x^3+4x
    p = ExactPoly.parse("x^9+8x^7+20x^5+17x^3+4x")
    assert squared_spectrum_poly(p) == ExactPoly.parse("x^4-8x^3+20x^2-17x+4")
    assert squared_spectrum_poly(ExactPoly.parse("x^2+1")) == ExactPoly.parse("x-1")


def path_energy(n: int) -> float:
    return sum(abs(2 * math.cos(k * math.pi / (n + 1))) for k in range(1, n + 1))


@pytest.mark.parametrize("n", [1, 2, 3, 7, 10, 31, 64])
def test_path_energy_matches_trigonometric_spectrum(n):
    value = energy(build(PathSpec(n=n)), tol=1e-11)
    assert value.midpoint == pytest.approx(path_energy(n), abs=1e-10)


@pytest.mark.slow
def test_path_energy_all_orders_up_to_64():
    for n in range(1, 65):
        value = energy(build(PathSpec(n=n)), tol=1e-11)
        assert value.midpoint == pytest.approx(path_energy(n), abs=1e-10)


@pytest.mark.parametrize("n", [2, 3, 5, 12, 20])
def test_star_energy(n):
    star = build(StarlikeSpec(n=n, arms=(1,) * (n - 1)))
    value = energy(star, tol=1e-11)
    assert value.midpoint == pytest.approx(2 * math.sqrt(n - 1), abs=1e-10)


def test_repeated_roots_are_counted_with_multiplicity():
    # q = (y-1)^3 (y-5)
    value = energy(parse_forest("S(9;2,2,2,2)"), tol=1e-11)
    assert value.midpoint == pytest.approx(2 * (3 + math.sqrt(5)), abs=1e-10)


def test_radius_respects_tolerance():
    tree = parse_forest("T(14;2,2|2,2)")
    for tol in (1e-4, 1e-8, 1e-12):
        value = energy(tree, tol=tol)
        assert value.radius <= tol


def test_energy_value_arithmetic_is_outward():
    a = EnergyValue(midpoint=1.0, radius=0.25)
    b = EnergyValue(midpoint=0.5, radius=0.125)
    diff = a - b
    assert diff.lower <= 0.5 - 0.375
    assert diff.upper >= 0.5 + 0.375
    assert (a + b).overlaps(EnergyValue(midpoint=1.5, radius=0.0))
    assert diff.positive()
    assert not (b - a).positive()


def test_coulson_difference_of_printed_pair():
    p = phi_tilde(parse_forest("S(10;2,6,1)"))
    q = phi_tilde(parse_forest("T(10;2,2|2,2)"))
    diff = energy_diff_coulson(p, q)
    assert diff.midpoint == pytest.approx(GAP_BOUND["fourth-max"], abs=BOUND_TOLERANCE)
    assert diff.radius <= 1e-9


def test_coulson_difference_of_identical_polynomials_is_zero():
    p = phi_tilde(parse_forest("T(12;2,2|2,2)"))
    assert energy_diff_coulson(p, p) == EnergyValue(midpoint=0.0, radius=0.0)


def test_coulson_input_validation():
    with pytest.raises(DegreeMismatch):
        energy_diff_coulson(ExactPoly.parse("x^3+2x"), ExactPoly.parse("x^2+1"))
    with pytest.raises(NotMonic):
        energy_diff_coulson(ExactPoly.parse("2x^2+1"), ExactPoly.parse("x^2+1"))
    with pytest.raises(NegativeCoefficient):
        energy_diff_coulson(ExactPoly.parse("x^2-1"), ExactPoly.parse("x^2+1"))


def coulson_matches_roots(rng: random.Random, pairs: int) -> None:
    for _ in range(pairs):
        n = rng.randint(2, 16)
        g, h = random_tree(rng, n), random_tree(rng, n)
        p, q = phi_tilde(g), phi_tilde(h)
        by_roots = energy_from_phi_tilde(p) - energy_from_phi_tilde(q)
        by_integral = energy_diff_coulson(p, q)
        assert abs(by_roots.midpoint - by_integral.midpoint) <= (
            by_roots.radius + by_integral.radius + 1e-6
        )


def test_coulson_agrees_with_root_sums():
    coulson_matches_roots(random.Random(3), 25)


@pytest.mark.slow
def test_coulson_agrees_with_root_sums_on_many_pairs():
    coulson_matches_roots(random.Random(5), 200)


def test_log_ratio_integral_closed_form():
    # integral over (0, inf) of ln(1 + 1/x^2) is pi
    value, error = log_ratio_integral([ExactPoly.parse("x^2+1")], [ExactPoly.parse("x^2")])
    assert value == pytest.approx(math.pi, abs=1e-9)
    assert error < 1e-9


def test_log_ratio_integral_on_pieces_adds_up():
    num = [ExactPoly.parse("x^4+3x^2+1")]
    den = [ExactPoly.parse("x^4+2x^2+2")]
    whole, _ = log_ratio_integral(num, den)
    parts = [
        log_ratio_integral(num, den, 0.0, 0.5)[0],
        log_ratio_integral(num, den, 0.5, 3.0)[0],
        log_ratio_integral(num, den, 3.0, None)[0],
    ]
    assert sum(parts) == pytest.approx(whole, abs=1e-9)


def test_log_ratio_integral_rejects_divergent_tails():
    with pytest.raises(QuadratureFailure):
        log_ratio_integral([ExactPoly.parse("x^2+2x+1")], [ExactPoly.parse("x^2+1")])
    with pytest.raises(DegreeMismatch):
        log_ratio_integral([ExactPoly.parse("x^3+1")], [ExactPoly.parse("x^2+1")])
    # a finite range does not care about the tail
    value, _ = log_ratio_integral(
        [ExactPoly.parse("x^3+1")], [ExactPoly.parse("x^2+1")], 0.0, 2.0
    )
    assert math.isfinite(value)


def random_quartet(rng: random.Random):
    n = rng.randint(3, 12)
    g, h = random_tree(rng, n), random_tree(rng, n)
    e = rng.choice(g.edges)
    e2 = rng.choice(h.edges)
    return (*subdiv_phi_tilde_sequence(g, e, 1), *subdiv_phi_tilde_sequence(h, e2, 1))


def test_d_sequence_is_sandwiched_between_the_first_two_ratios():
    rng = random.Random(17)
    for _ in range(100):
        g0, g1, h0, h1 = random_quartet(rng)
        x = Fraction(rng.randint(1, 40), rng.randint(1, 20))
        d0 = d_sequence_at(g0, g1, h0, h1, 0, x)
        d1 = d_sequence_at(g0, g1, h0, h1, 1, x)
        assert d0 == h0.eval_rational(x) / g0.eval_rational(x)
        for k in range(2, 41, 3):
            dk = d_sequence_at(g0, g1, h0, h1, k, x)
            if d0 == d1:
                assert dk == d0
            else:
                assert min(d0, d1) < dk < max(d0, d1)


def test_d_sequence_constant_when_first_two_ratios_agree():
    g0 = ExactPoly.parse("x^2+1")
    g1 = ExactPoly.parse("x^3+2x")
    assert all(
        d_sequence_at(g0, g1, g0 * 3, g1 * 3, k, Fraction(2, 3)) == 3 for k in range(12)
    )
    with pytest.raises(ValueError):
        d_sequence_at(g0, g1, g0, g1, 2, 0)


def test_cross_difference_factorizations():
    for claim, factors in CROSS_DIFFERENCE_FACTORS.items():
        g, e, h, e2 = families(claim)
        g0, g1 = subdiv_phi_tilde_sequence(g, e, 1)
        h0, h1 = subdiv_phi_tilde_sequence(h, e2, 1)
        assert h1 * g0 - h0 * g1 == product(factors), claim


def test_positive_cross_difference_bounds_by_base_gap():
    g, e, h, e2 = families("fourth-max")
    result = classify_dominance(g, e, h, e2)
    assert result.mode == DominanceMode.base_gap
    assert result.sign == SignKind.positive_everywhere
    assert result.holds_for == "k > 0"
    assert result.w == "2x^15+22x^13+89x^11+168x^9+156x^7+66x^5+9x^3"
    assert result.lower_bound_on_gap.midpoint == pytest.approx(
        GAP_BOUND["fourth-max"], abs=BOUND_TOLERANCE
    )
    assert result.energies["H0"].midpoint == pytest.approx(ENERGY["S(10;2,6,1)"], abs=ENERGY_TOLERANCE)
    for k in (1, 2, 3, 5, 8):
        gap = energy(subdivide(h, e2, k)) - energy(subdivide(g, e, k))
        assert gap.upper >= result.lower_bound_on_gap.lower


def test_mixed_sign_on_unit_interval():
    g, e, h, e2 = families("broom-longest-arm")
    result = classify_dominance(g, e, h, e2)
    assert result.mode == DominanceMode.mixed_bound
    assert result.sign == SignKind.mixed
    assert result.holds_for == "k >= 0"
    assert len(result.negative_set) == 1
    piece = result.negative_set[0]
    assert piece.lo == 0.0
    assert piece.hi == pytest.approx(NEGATIVE_SET_END["broom-longest-arm"], abs=1e-12)
    assert result.lower_bound_on_gap.midpoint == pytest.approx(
        GAP_BOUND["broom-longest-arm"], abs=BOUND_TOLERANCE
    )
    assert result.alternative_bound is not None
    assert result.alternative_bound.midpoint == pytest.approx(
        result.lower_bound_on_gap.midpoint, abs=1e-8
    )
    assert result.quadrature is not None and result.quadrature.pieces > 0
    for k in (0, 1, 2, 4, 7):
        gap = energy(subdivide(h, e2, k)) - energy(subdivide(g, e, k))
        assert gap.upper >= result.lower_bound_on_gap.lower


def test_mixed_sign_with_irrational_endpoint():
    g, e, h, e2 = families("broom-vs-two-leg")
    result = classify_dominance(g, e, h, e2)
    assert result.mode == DominanceMode.mixed_bound
    assert [p.lo for p in result.negative_set] == [0.0]
    assert result.negative_set[0].hi == pytest.approx(
        NEGATIVE_SET_END["broom-vs-two-leg"], abs=1e-5
    )
    assert result.negative_set[0].hi_radius < 1e-12
    assert result.lower_bound_on_gap.midpoint == pytest.approx(
        GAP_BOUND["broom-vs-two-leg"], abs=BOUND_TOLERANCE
    )
    assert result.energies["G0"].midpoint == pytest.approx(ENERGY["T(22;2,2|2,2)"], abs=ENERGY_TOLERANCE)
    assert result.energies["H0"].midpoint == pytest.approx(ENERGY["S(22;2,1,18)"], abs=ENERGY_TOLERANCE)


def test_equal_base_energies_are_certified_exactly():
    g, e, h, e2 = families("spider-vs-two-leg")
    result = classify_dominance(g, e, h, e2)
    assert result.sign == SignKind.positive_everywhere
    assert result.exact_zero_gap
    assert result.mode == DominanceMode.base_gap
    assert result.conclusive
    assert result.lower_bound_on_gap.overlaps(EnergyValue(midpoint=0.0, radius=0.0))


def test_three_arm_against_two_leg_tree():
    g, e, h, e2 = families("three-arm-vs-two-leg")
    result = classify_dominance(g, e, h, e2)
    assert result.mode == DominanceMode.base_gap
    assert result.lower_bound_on_gap.midpoint == pytest.approx(
        GAP_BOUND["three-arm-vs-two-leg"], abs=BOUND_TOLERANCE
    )
    assert result.energies["H0"].midpoint == pytest.approx(ENERGY["S(31;2,7,21)"], abs=ENERGY_TOLERANCE)
    assert result.energies["G0"].midpoint == pytest.approx(ENERGY["S(31;4,4,22)"], abs=ENERGY_TOLERANCE)


def test_identical_families_have_vanishing_cross_difference():
    tree = parse_forest("T(12;2,2|2,2)")
    e = (0, 1)
    result = classify_dominance(tree, e, tree, e)
    assert result.w == "0"
    assert result.sign is None
    assert result.exact_zero_gap
    assert result.mode == DominanceMode.inconclusive


def test_reversed_pair_is_inconclusive():
    g, e, h, e2 = families("fourth-max")
    result = classify_dominance(h, e2, g, e)
    assert result.sign == SignKind.negative_everywhere
    assert result.mode == DominanceMode.inconclusive
    assert not result.conclusive


def test_dominance_requires_equal_orders():
    with pytest.raises(OrderMismatch):
        classify_dominance(build(PathSpec(n=5)), (0, 1), build(PathSpec(n=6)), (0, 1))


def test_dominance_result_serializes():
    g, e, h, e2 = families("broom-longest-arm")
    record = classify_dominance(g, e, h, e2).model_dump(mode="json")
    assert record["mode"] == "MixedBound"
    assert record["negative_set"][0]["lo"] == 0.0
    assert set(record["energies"]) == {"G0", "H0", "G1", "H1"}
