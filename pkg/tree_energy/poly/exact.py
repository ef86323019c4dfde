from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, Union

from tree_energy.errors import ZeroPolynomial

__all__ = ["ExactPoly", "Rational"]

Rational = Union[int, Fraction]

_TERM = re.compile(r"([+-]?)(\d*)(x(?:\^(\d+))?)?")


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class ExactPoly:
    """Dense univariate polynomial with integer coefficients, lowest power first.

    The zero polynomial has no coefficients and degree -1.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def zero(cls) -> ExactPoly:
        return cls(())

    @classmethod
    def constant(cls, c: int) -> ExactPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, c: int, power: int) -> ExactPoly:
        return cls((0,) * power + (c,))

    @classmethod
    def x(cls) -> ExactPoly:
        return cls((0, 1))

    @classmethod
    def from_descending(cls, coeffs: Iterable[int]) -> ExactPoly:
        return cls(tuple(reversed(list(coeffs))))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, power: int) -> int:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return 0

    # ring operations

    def __add__(self, other: ExactPoly | int) -> ExactPoly:
        other = _lift(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return ExactPoly(
            tuple(self.coefficient(i) + other.coefficient(i) for i in range(size))
        )

    __radd__ = __add__

    def __neg__(self) -> ExactPoly:
        return ExactPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: ExactPoly | int) -> ExactPoly:
        return self + (-_lift(other))

    def __rsub__(self, other: ExactPoly | int) -> ExactPoly:
        return _lift(other) - self

    def __mul__(self, other: ExactPoly | int) -> ExactPoly:
        other = _lift(other)
        if self.is_zero or other.is_zero:
            return ExactPoly.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return ExactPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> ExactPoly:
        if exponent < 0:
            raise ValueError("negative exponent")
        result = ExactPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def shift(self, power: int) -> ExactPoly:
        """Multiply by x**power."""
        if self.is_zero:
            return self
        return ExactPoly((0,) * power + self.coeffs)

    # evaluation

    def eval_rational(self, x: Rational) -> Fraction:
        """Exact Horner evaluation at a rational point."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x: Rational) -> int:
        """Sign of the value at x, using integer arithmetic only."""
        x = Fraction(x)
        a, b = x.numerator, x.denominator
        d = self.degree
        total = 0
        a_pow = 1
        b_pow = b**d if d > 0 else 1
        for c in self.coeffs:
            total += c * a_pow * b_pow
            a_pow *= a
            b_pow //= b
        return (total > 0) - (total < 0)

    # structure

    def derivative(self) -> ExactPoly:
        return ExactPoly(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = int_gcd(g, c)
        return g

    def primitive(self) -> ExactPoly:
        """Divide out the (positive) content; the sign is kept."""
        g = self.content()
        if g in (0, 1):
            return self
        return ExactPoly(tuple(c // g for c in self.coeffs))

    def normalized(self) -> ExactPoly:
        """Primitive part with a positive leading coefficient."""
        p = self.primitive()
        return -p if p.leading < 0 else p

    def reverse(self) -> ExactPoly:
        """Coefficients in the opposite order; x**deg * p(1/x) for p(0) != 0."""
        return ExactPoly(tuple(reversed(self.coeffs)))

    def x_valuation(self) -> int:
        """Largest k such that x**k divides the polynomial."""
        if self.is_zero:
            raise ZeroPolynomial("the zero polynomial has no x-valuation")
        k = 0
        while self.coeffs[k] == 0:
            k += 1
        return k

    def strip_x_power(self) -> ExactPoly:
        return ExactPoly(self.coeffs[self.x_valuation() :])

    def even_part_in_square(self) -> ExactPoly:
        """For p(x) = q(x**2) (up to a power of x) return q.

        Only valid when every nonzero coefficient sits at the same parity;
        odd polynomials are divided by x first.
        """
        p = self
        if p.is_zero:
            return p
        if p.coeffs[0] == 0 and any(c for c in p.coeffs[1::2]):
            p = ExactPoly(p.coeffs[1:])
        if any(c for c in p.coeffs[1::2]):
            raise ValueError("polynomial is not a function of x**2")
        return ExactPoly(p.coeffs[0::2])

    def is_monic(self) -> bool:
        return self.leading == 1

    # division

    def pseudo_rem(self, divisor: ExactPoly) -> ExactPoly:
        """Remainder of |lc(divisor)|**s * self modulo divisor.

        The multiplier is positive, so the sign of the true remainder is kept.
        """
        if divisor.is_zero:
            raise ZeroPolynomial("division by the zero polynomial")
        rem = list(self.coeffs)
        db = divisor.degree
        lb = divisor.leading
        scale = abs(lb)
        sign = 1 if lb > 0 else -1
        while len(rem) - 1 >= db and rem:
            lr = rem[-1]
            offset = len(rem) - 1 - db
            rem = [c * scale for c in rem]
            factor = lr * sign
            for i, c in enumerate(divisor.coeffs):
                rem[i + offset] -= factor * c
            rem = list(_trim(rem))
        return ExactPoly(tuple(rem))

    def divmod_exact(self, divisor: ExactPoly) -> tuple[ExactPoly, ExactPoly]:
        """Integer long division; raises ValueError when a quotient term is not integral."""
        if divisor.is_zero:
            raise ZeroPolynomial("division by the zero polynomial")
        rem = list(self.coeffs)
        db = divisor.degree
        lb = divisor.leading
        quotient = [0] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db and rem:
            lr = rem[-1]
            if lr % lb:
                raise ValueError("division is not exact over the integers")
            q = lr // lb
            offset = len(rem) - 1 - db
            quotient[offset] = q
            for i, c in enumerate(divisor.coeffs):
                rem[i + offset] -= q * c
            rem = list(_trim(rem))
        return ExactPoly(tuple(quotient)), ExactPoly(tuple(rem))

    def exact_div(self, divisor: ExactPoly) -> ExactPoly:
        quotient, rem = self.divmod_exact(divisor)
        if not rem.is_zero:
            raise ValueError("divisor does not divide the polynomial")
        return quotient

    def divides(self, other: ExactPoly) -> bool:
        try:
            _, rem = other.divmod_exact(self)
        except ValueError:
            return False
        return rem.is_zero

    def gcd(self, other: ExactPoly) -> ExactPoly:
        """Primitive gcd with positive leading coefficient (primitive PRS)."""
        a, b = self, other
        if a.is_zero:
            return b.normalized()
        if b.is_zero:
            return a.normalized()
        if a.degree < b.degree:
            a, b = b, a
        a, b = a.primitive(), b.primitive()
        while not b.is_zero:
            r = a.pseudo_rem(b)
            a, b = b, r.primitive()
        return a.normalized()

    def squarefree_decomposition(self) -> list[tuple[ExactPoly, int]]:
        """Yun's algorithm: pairs (factor, multiplicity) with square-free, coprime factors.

        Constant factors are dropped; the product of factor**multiplicity equals
        the primitive part of the polynomial up to sign.
        """
        if self.is_zero:
            raise ZeroPolynomial("the zero polynomial has no square-free decomposition")
        f = self.normalized()
        if f.degree <= 0:
            return []
        df = f.derivative()
        b = f.gcd(df)
        c = f.exact_div(b)
        d = df.exact_div(b) - c.derivative()
        out: list[tuple[ExactPoly, int]] = []
        multiplicity = 1
        while c.degree > 0:
            a = c.gcd(d)
            if a.degree > 0:
                out.append((a, multiplicity))
            c = c.exact_div(a)
            d = d.exact_div(a) - c.derivative()
            multiplicity += 1
        return out

    def squarefree_part(self) -> ExactPoly:
        if self.is_zero:
            raise ZeroPolynomial("the zero polynomial has no square-free part")
        f = self.normalized()
        if f.degree <= 0:
            return ExactPoly.constant(1)
        return f.exact_div(f.gcd(f.derivative()))

    # text form

    def to_text(self) -> str:
        """Descending powers with explicit integer coefficients, e.g. ``x^4+3x^2+1``."""
        if self.is_zero:
            return "0"
        parts: list[str] = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else str(mag)
                body = head + ("x" if power == 1 else f"x^{power}")
            parts.append(sign + body)
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text

    @classmethod
    def parse(cls, text: str) -> ExactPoly:
        """Inverse of ``to_text``; whitespace and ``*`` between factors are tolerated."""
        compact = text.replace(" ", "").replace("*", "")
        if compact in ("", "0"):
            return cls.zero()
        coeffs: dict[int, int] = {}
        pos = 0
        while pos < len(compact):
            match = _TERM.match(compact, pos)
            if match is None or match.end() == pos:
                raise ValueError(f"cannot parse polynomial near {compact[pos:]!r}")
            sign, digits, xpart, power = match.groups()
            if not digits and not xpart:
                raise ValueError(f"cannot parse polynomial near {compact[pos:]!r}")
            c = int(digits) if digits else 1
            if sign == "-":
                c = -c
            p = 0 if not xpart else (int(power) if power else 1)
            coeffs[p] = coeffs.get(p, 0) + c
            pos = match.end()
            if pos < len(compact) and compact[pos] not in "+-":
                raise ValueError(f"cannot parse polynomial near {compact[pos:]!r}")
        size = max(coeffs) + 1
        return cls(tuple(coeffs.get(i, 0) for i in range(size)))

    def __str__(self) -> str:
        return self.to_text()


def _lift(value: ExactPoly | int) -> ExactPoly:
    if isinstance(value, ExactPoly):
        return value
    return ExactPoly.constant(int(value))
