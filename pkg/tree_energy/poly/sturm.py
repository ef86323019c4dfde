from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from tree_energy.errors import ZeroPolynomial
from tree_energy.poly.exact import ExactPoly, Rational

__all__ = [
    "SturmChain",
    "IsolatingInterval",
    "SignKind",
    "SignPiece",
    "SignProfile",
    "sturm_chain",
    "count_roots",
    "isolate_positive_roots",
    "refine",
    "sign_profile_on_positive_axis",
]


def _variations(signs: list[int]) -> int:
    nonzero = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


@dataclass(frozen=True)
class SturmChain:
    """Sturm sequence of the square-free part of a polynomial."""

    polys: tuple[ExactPoly, ...]

    @classmethod
    def build(cls, p: ExactPoly) -> SturmChain:
        if p.is_zero:
            raise ZeroPolynomial("cannot build a Sturm chain for the zero polynomial")
        base = p.squarefree_part()
        chain = [base, base.derivative()]
        while not chain[-1].is_zero and chain[-1].degree > 0:
            # pseudo_rem scales by a positive factor, so -prem keeps Sturm signs
            rem = -chain[-2].pseudo_rem(chain[-1])
            if rem.is_zero:
                break
            chain.append(rem.primitive())
        return cls(tuple(q for q in chain if not q.is_zero))

    @property
    def base(self) -> ExactPoly:
        return self.polys[0]

    def variations_at(self, x: Optional[Rational], towards: int = 1) -> int:
        """Sign variations at x; ``None`` stands for +inf (towards=1) or -inf (towards=-1)."""
        if x is None:
            signs = []
            for q in self.polys:
                s = 1 if q.leading > 0 else -1
                if towards < 0 and q.degree % 2 == 1:
                    s = -s
                signs.append(s)
            return _variations(signs)
        return _variations([q.sign_at(x) for q in self.polys])

    def count(self, lo: Optional[Rational] = None, hi: Optional[Rational] = None) -> int:
        """Number of distinct real roots in (lo, hi]; ``None`` bounds are infinite."""
        return self.variations_at(lo, towards=-1) - self.variations_at(hi, towards=1)


def sturm_chain(p: ExactPoly) -> SturmChain:
    return SturmChain.build(p)


def count_roots(
    p: ExactPoly, lo: Optional[Rational] = None, hi: Optional[Rational] = None
) -> int:
    """Distinct real roots of p in (lo, hi]."""
    return SturmChain.build(p).count(lo, hi)


@dataclass(frozen=True)
class IsolatingInterval:
    """A root of ``poly`` (square-free) certified to lie in (lo, hi).

    ``lo == hi`` marks a root that was hit exactly by a rational split point.
    """

    poly: ExactPoly
    lo: Fraction
    hi: Fraction

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def radius(self) -> Fraction:
        return self.width / 2

    def bisect(self) -> IsolatingInterval:
        if self.exact:
            return self
        mid = self.midpoint
        s_mid = self.poly.sign_at(mid)
        if s_mid == 0:
            return IsolatingInterval(self.poly, mid, mid)
        if s_mid == self.poly.sign_at(self.hi):
            return IsolatingInterval(self.poly, self.lo, mid)
        return IsolatingInterval(self.poly, mid, self.hi)

    def refine(self, tol: Rational) -> IsolatingInterval:
        """Bisect until the radius is at most tol."""
        limit = Fraction(tol) * 2
        if limit <= 0:
            raise ValueError("tolerance must be positive")
        current = self
        while current.width > limit:
            current = current.bisect()
        return current


def refine(interval: IsolatingInterval, tol: Rational) -> IsolatingInterval:
    return interval.refine(tol)


def _power_of_two_bound(p: ExactPoly) -> Fraction:
    """A power of two strictly above the Cauchy bound of p."""
    lead = abs(p.leading)
    biggest = max((abs(c) for c in p.coeffs[:-1]), default=0)
    bound = Fraction(biggest, lead) + 1
    m = Fraction(1)
    while m <= bound:
        m *= 2
    return m


def isolate_positive_roots(p: ExactPoly) -> list[IsolatingInterval]:
    """Isolating intervals for the distinct positive roots of p, in increasing order."""
    if p.is_zero:
        raise ZeroPolynomial("the zero polynomial has no isolated roots")
    if p.degree <= 0:
        return []
    q = p.squarefree_part().strip_x_power()
    if q.degree <= 0:
        return []
    chain = SturmChain.build(q)
    top = _power_of_two_bound(q)

    found: list[IsolatingInterval] = []
    pending: list[tuple[Fraction, Fraction, int]] = []
    total = chain.count(Fraction(0), top)
    if total:
        pending.append((Fraction(0), top, total))

    # depth-first, right half pushed first so roots come out in increasing order
    while pending:
        lo, hi, n_roots = pending.pop()
        if n_roots == 1:
            if q.sign_at(hi) == 0:
                found.append(IsolatingInterval(q, hi, hi))
            else:
                found.append(IsolatingInterval(q, lo, hi))
            continue
        mid = (lo + hi) / 2
        left = chain.count(lo, mid)
        right = n_roots - left
        if right:
            pending.append((mid, hi, right))
        if left:
            pending.append((lo, mid, left))
    return found


class SignKind(str, Enum):
    positive_everywhere = "PositiveEverywhere"
    negative_everywhere = "NegativeEverywhere"
    mixed = "Mixed"


@dataclass(frozen=True)
class SignPiece:
    """Open interval (lo, hi) of the positive axis with constant sign; ``hi=None`` is +inf.

    Endpoints are roots of the profiled polynomial (or 0), kept as isolating intervals.
    """

    lo: Optional[IsolatingInterval]
    hi: Optional[IsolatingInterval]
    sign: int


@dataclass(frozen=True)
class SignProfile:
    poly: ExactPoly
    pieces: tuple[SignPiece, ...]

    @property
    def kind(self) -> SignKind:
        signs = {piece.sign for piece in self.pieces}
        if signs == {1}:
            return SignKind.positive_everywhere
        if signs == {-1}:
            return SignKind.negative_everywhere
        return SignKind.mixed

    def negative_pieces(self) -> list[SignPiece]:
        return [piece for piece in self.pieces if piece.sign < 0]

    def positive_pieces(self) -> list[SignPiece]:
        return [piece for piece in self.pieces if piece.sign > 0]


def _sample_between(
    lo: Optional[IsolatingInterval], hi: Optional[IsolatingInterval]
) -> Fraction:
    """A rational strictly inside the gap between two consecutive isolated roots."""
    if hi is None:
        return (Fraction(0) if lo is None else lo.hi) + 1
    a, b = lo, hi
    while True:
        left = Fraction(0) if a is None else a.hi
        if left < b.lo:
            return (left + b.lo) / 2
        # the isolating intervals touch; tighten until they separate
        if a is not None:
            a = a.bisect()
        b = b.bisect()


def sign_profile_on_positive_axis(p: ExactPoly) -> SignProfile:
    """Exact sign decomposition of (0, inf) for p.

    Roots of even multiplicity do not change the sign; neighbouring pieces
    with the same sign are merged across them.
    """
    if p.is_zero:
        raise ZeroPolynomial("the zero polynomial has no sign profile")
    roots = isolate_positive_roots(p)
    boundaries: list[Optional[IsolatingInterval]] = [None, *roots, None]

    raw: list[SignPiece] = []
    for lo, hi in zip(boundaries[:-1], boundaries[1:]):
        sample = _sample_between(lo, hi)
        raw.append(SignPiece(lo, hi, p.sign_at(sample)))

    merged: list[SignPiece] = []
    for piece in raw:
        if merged and merged[-1].sign == piece.sign:
            merged[-1] = SignPiece(merged[-1].lo, piece.hi, piece.sign)
        else:
            merged.append(piece)
    return SignProfile(p, tuple(merged))
