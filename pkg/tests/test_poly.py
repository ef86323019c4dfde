import random
from fractions import Fraction

import pytest
import sympy

from tree_energy.errors import ZeroPolynomial
from tree_energy.poly import (
    ExactPoly,
    SignKind,
    count_roots,
    isolate_positive_roots,
    sign_profile_on_positive_axis,
)

X = ExactPoly.x()
ONE = ExactPoly.constant(1)


def random_poly(rng: random.Random, max_degree: int = 6) -> ExactPoly:
    return ExactPoly(tuple(rng.randint(-9, 9) for _ in range(rng.randint(0, max_degree) + 1)))


def to_sympy(p: ExactPoly) -> sympy.Poly:
    x = sympy.Symbol("x")
    return sympy.Poly(list(reversed(p.coeffs)) or [0], x)


def test_ring_basics():
    assert (X + 1) * (X - 1) == X * X - 1
    assert (X + 1) * ExactPoly.zero() == ExactPoly.zero()
    assert ExactPoly.zero().degree == -1
    assert ExactPoly((1, 2, 0, 0)).coeffs == (1, 2)


def test_product_degree_adds():
    h1 = ExactPoly.parse("x^10+9x^8+27x^6+31x^4+12x^2+1")
    g0 = ExactPoly.parse("x^9+8x^7+18x^5+16x^3+5x")
    assert (h1 * g0).degree == 19


def test_ring_axioms_on_random_polynomials():
    rng = random.Random(7)
    for _ in range(200):
        p, q, r = (random_poly(rng) for _ in range(3))
        assert (p * q) * r == p * (q * r)
        assert p * (q + r) == p * q + p * r
        assert p + q == q + p
        assert p - p == ExactPoly.zero()


def test_eval_rational():
    assert (X * X + 1).eval_rational(0) == 1
    w = ExactPoly.parse("2x^4+8x^2+1") * (X * X + 1) ** 3
    assert w.eval_rational(1) == 88
    assert ExactPoly.parse("x^2+1").eval_rational(2) == 5
    assert (X * X - 2).eval_rational(Fraction(1, 2)) == Fraction(-7, 4)


def test_sign_at_matches_exact_value():
    rng = random.Random(11)
    for _ in range(100):
        p = random_poly(rng)
        x = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
        value = p.eval_rational(x)
        assert p.sign_at(x) == (value > 0) - (value < 0)


@pytest.mark.parametrize(
    "text",
    ["x^10+9x^8+27x^6+31x^4+12x^2+1", "2x^15+22x^13+9x^3", "-x^2", "x", "0", "x^2-1", "-3x+7"],
)
def test_text_form_is_stable(text):
    assert ExactPoly.parse(text).to_text() == text


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        ExactPoly.parse("x^2+y")


def test_gcd_and_exact_division():
    p = (X - 1) * (X + 2) ** 2
    q = (X + 2) * (X * X + 1)
    assert p.gcd(q) == X + 2
    assert p.exact_div(X + 2) == (X - 1) * (X + 2)
    with pytest.raises(ValueError):
        p.exact_div(X + 5)


def test_squarefree_decomposition_recovers_multiplicities():
    p = (X - 1) ** 3 * (X - 5) * X**2
    parts = dict((f.to_text(), m) for f, m in p.squarefree_decomposition())
    assert parts == {"x-5": 1, "x": 2, "x-1": 3}
    assert p.squarefree_part() == (X - 1) * (X - 5) * X


def test_squarefree_decomposition_against_sympy():
    rng = random.Random(3)
    for _ in range(40):
        factors = [random_poly(rng, 2) for _ in range(3)]
        factors = [f for f in factors if f.degree > 0]
        if not factors:
            continue
        p = ONE
        for i, f in enumerate(factors):
            p = p * f ** (i + 1)
        product = ONE
        for f, m in p.squarefree_decomposition():
            product = product * f**m
        assert product == p.normalized() or product == -p.normalized()
        _, expected = sympy.sqf_list(to_sympy(p))
        assert sum(f.degree() * m for f, m in expected) == product.degree


def test_sturm_counts():
    assert count_roots(X * X - 2, 0, 2) == 1
    assert count_roots(ExactPoly.parse("x^8+7x^6+11x^4-4x^2-1"), 0, None) == 1
    assert count_roots(X * X + 1, -10, 10) == 0
    # half-open: a root at the right end is counted, at the left end it is not
    assert count_roots(X * X - 1, -1, 1) == 1
    assert count_roots(X * X - 1, None, None) == 2


def test_sturm_rejects_zero():
    with pytest.raises(ZeroPolynomial):
        count_roots(ExactPoly.zero())


def test_isolate_and_refine_sqrt5():
    (interval,) = isolate_positive_roots(X * X - 5)
    tight = interval.refine(Fraction(1, 10**12))
    assert tight.radius <= Fraction(1, 10**12)
    assert abs(float(tight.midpoint) - 2.2360679775) < 1e-10
    assert tight.lo * tight.lo < 5 < tight.hi * tight.hi


def test_isolate_exact_rational_root():
    (interval,) = isolate_positive_roots(X * X - 1)
    assert interval.refine(Fraction(1, 10**6)).midpoint == 1


def test_isolate_positive_root_of_mixed_factor():
    (interval,) = isolate_positive_roots(ExactPoly.parse("x^8+7x^6+11x^4-4x^2-1"))
    tight = interval.refine(Fraction(1, 10**9))
    assert float(tight.midpoint) == pytest.approx(0.663073, abs=1e-6)


def test_isolation_matches_sturm_total_on_random_polynomials():
    rng = random.Random(5)
    for _ in range(60):
        p = random_poly(rng, 7)
        if p.degree <= 0:
            continue
        intervals = isolate_positive_roots(p)
        assert len(intervals) == count_roots(p, 0, None)
        sympy_roots = [r for r in sympy.Poly(to_sympy(p)).real_roots() if r > 0]
        assert len(intervals) == len(set(sympy_roots))
        for interval in intervals:
            if not interval.exact:
                assert count_roots(interval.poly, interval.lo, interval.hi) == 1


def test_sign_profile_positive_everywhere():
    w = ExactPoly.parse("2x^4+8x^2+1") * (X * X + 1) ** 3
    assert sign_profile_on_positive_axis(w).kind == SignKind.positive_everywhere


def test_sign_profile_negative_everywhere():
    assert sign_profile_on_positive_axis(-(X * X)).kind == SignKind.negative_everywhere


def test_sign_profile_mixed_with_boundary_at_one():
    w = X * (X - 1) * (X + 1) * ExactPoly.parse("x^6+7x^4+11x^2+1") * (X * X + 1) ** 3
    profile = sign_profile_on_positive_axis(w)
    assert profile.kind == SignKind.mixed
    negative = profile.negative_pieces()
    assert len(negative) == 1
    assert negative[0].lo is None
    assert negative[0].hi is not None and negative[0].hi.refine(Fraction(1, 10**9)).midpoint == 1


def test_sign_profile_merges_across_double_roots():
    w = (X - 2) ** 2 * (X + 1)
    profile = sign_profile_on_positive_axis(w)
    assert profile.kind == SignKind.positive_everywhere
    assert len(profile.pieces) == 1


def test_sign_profile_signs_hold_next_to_boundaries():
    rng = random.Random(13)
    for _ in range(30):
        p = random_poly(rng, 6)
        if p.degree <= 0:
            continue
        for piece in sign_profile_on_positive_axis(p).pieces:
            if piece.hi is not None:
                edge = piece.hi.refine(Fraction(1, 10**6))
                assert p.sign_at(edge.lo) in (piece.sign, 0)
            if piece.lo is not None:
                edge = piece.lo.refine(Fraction(1, 10**6))
                assert p.sign_at(edge.hi) in (piece.sign, 0)
