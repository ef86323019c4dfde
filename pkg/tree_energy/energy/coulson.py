"""Integrals of ln(prod num / prod den) over pieces of the positive axis.

Every polynomial handed in has nonnegative coefficients and a positive
leading coefficient, so it is positive on (0, inf). Pieces inside (0, 1]
carry the x-power factors as an explicit ``c * ln x`` term integrated in
closed form; pieces inside [1, inf) are mapped to (0, 1] by y = 1/x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Callable, Optional, Sequence

from loguru import logger
from scipy.integrate import quad

from tree_energy.config import config
from tree_energy.energy.types import EnergyValue, Quadrature
from tree_energy.errors import (
    DegreeMismatch,
    NegativeCoefficient,
    NotMonic,
    QuadratureFailure,
)
from tree_energy.poly import ExactPoly

__all__ = ["LogRatio", "log_ratio_integral", "energy_diff_coulson"]

_ONE = ExactPoly.constant(1)


def _product(polys: Sequence[ExactPoly]) -> ExactPoly:
    return reduce(lambda a, b: a * b, polys, _ONE)


def _x_log_integral(lo: float, hi: float) -> float:
    """Integral of ln x over [lo, hi] inside [0, 1]."""

    def antiderivative(t: float) -> float:
        return 0.0 if t == 0 else t * math.log(t) - t

    return antiderivative(hi) - antiderivative(lo)


def _reversed_tail(p: ExactPoly) -> ExactPoly:
    """T with y**deg p(1/y) = lead + y T(y)."""
    rev = [p.coefficient(p.degree - i) for i in range(p.degree + 1)]
    return ExactPoly(tuple(rev[1:]))


@dataclass(frozen=True)
class LogRatio:
    """ln(num(x) / den(x)) prepared for both halves of the positive axis."""

    num: ExactPoly
    den: ExactPoly

    def __post_init__(self) -> None:
        for name, p in (("numerator", self.num), ("denominator", self.den)):
            if p.is_zero or p.leading <= 0:
                raise NotMonic(f"{name} {p} needs a positive leading coefficient")
            if any(c < 0 for c in p.coeffs):
                raise NegativeCoefficient(f"{name} {p} has a negative coefficient")

    @cached_property
    def log_power(self) -> int:
        """Coefficient of ln x in the integrand near 0."""
        return self.num.x_valuation() - self.den.x_valuation()

    @cached_property
    def _stripped(self) -> tuple[ExactPoly, ExactPoly]:
        return self.num.strip_x_power(), self.den.strip_x_power()

    @cached_property
    def _tails(self) -> tuple[ExactPoly, ExactPoly]:
        return _reversed_tail(self.num), _reversed_tail(self.den)

    def near_zero(self, x: float) -> float:
        """Integrand minus ``log_power * ln x``; smooth on [0, 1]."""
        num, den = self._stripped
        return math.log(num.eval_float(x) / den.eval_float(x))

    def value(self, x: float) -> float:
        return self.near_zero(x) + self.log_power * math.log(x)

    def near_infinity(self, y: float) -> float:
        """The integrand at x = 1/y times 1/y**2, bounded on [0, 1] after check_infinite_tail."""
        num, den = self._tails
        if y == 0:
            return (num.coefficient(1) - den.coefficient(1)) / self.num.leading
        t_num = y * num.eval_float(y) / self.num.leading
        t_den = y * den.eval_float(y) / self.den.leading
        return (math.log1p(t_num) - math.log1p(t_den)) / (y * y)

    def check_infinite_tail(self) -> None:
        """The integral to +inf converges only when the ratio is 1 + O(1/x**2)."""
        if self.num.degree != self.den.degree or self.num.leading != self.den.leading:
            raise DegreeMismatch(
                f"ln({self.num}/{self.den}) does not tend to 0 at infinity"
            )
        top = self.num.degree
        if self.num.coefficient(top - 1) != self.den.coefficient(top - 1):
            raise QuadratureFailure(
                f"ln({self.num}/{self.den}) decays like 1/x; the integral diverges"
            )


def _run_quad(
    f: Callable[[float], float], lo: float, hi: float, report: Quadrature
) -> float:
    if hi <= lo:
        return 0.0
    result = quad(
        f, lo, hi, epsabs=report.epsabs, epsrel=0, limit=report.limit, full_output=1
    )
    value, error = result[0], result[1]
    report.pieces += 1
    report.error_estimate += error
    if len(result) > 3:
        logger.debug(f"quad on [{lo}, {hi}] stopped early: {result[3]}")
        raise QuadratureFailure(f"adaptive quadrature on [{lo}, {hi}] failed: {result[3]}")
    return value


def log_ratio_integral(
    num: Sequence[ExactPoly],
    den: Sequence[ExactPoly],
    lo: float = 0.0,
    hi: Optional[float] = None,
    report: Optional[Quadrature] = None,
) -> tuple[float, float]:
    """Integral of ln(prod num / prod den) over (lo, hi); ``hi=None`` is +inf.

    Returns (value, error estimate). No 2/pi factor is applied.
    """
    if report is None:
        report = Quadrature(
            epsabs=config.numerics.quad_epsabs, limit=config.numerics.quad_limit
        )
    if lo < 0 or (hi is not None and hi < lo):
        raise ValueError(f"bad integration range ({lo}, {hi})")
    ratio = LogRatio(_product(num), _product(den))
    if hi is None:
        ratio.check_infinite_tail()
    before = report.error_estimate

    total = 0.0
    left_hi = 1.0 if hi is None else min(hi, 1.0)
    if lo < left_hi:
        total += ratio.log_power * _x_log_integral(lo, left_hi)
        total += _run_quad(ratio.near_zero, lo, left_hi, report)
    if hi is None:
        total += _run_quad(ratio.near_infinity, 0.0, 1.0 / max(lo, 1.0), report)
    elif hi > 1.0:
        total += _run_quad(
            lambda y: ratio.value(1.0 / y) / (y * y), 1.0 / hi, 1.0 / max(lo, 1.0), report
        )
    return total, report.error_estimate - before


def energy_diff_coulson(
    p: ExactPoly, q: ExactPoly, tol: Optional[float] = None
) -> EnergyValue:
    """E(G1) - E(G2) = (2/pi) * integral over (0, inf) of ln(phi~(G1, x) / phi~(G2, x))."""
    tol = config.numerics.quad_tol if tol is None else tol
    if p.degree != q.degree:
        raise DegreeMismatch(f"degrees differ: {p.degree} and {q.degree}")
    for name, poly in (("p", p), ("q", q)):
        if not poly.is_monic():
            raise NotMonic(f"{name} = {poly} is not monic")
        if any(c < 0 for c in poly.coeffs):
            raise NegativeCoefficient(f"{name} = {poly} has a negative coefficient")
    if p == q:
        return EnergyValue(midpoint=0.0, radius=0.0)
    value, error = log_ratio_integral([p], [q])
    scaled_error = 2 / math.pi * error
    if scaled_error > tol:
        raise QuadratureFailure(
            f"error estimate {scaled_error:.2e} exceeds the budget {tol:.2e}"
        )
    return EnergyValue(
        midpoint=2 / math.pi * value,
        radius=math.nextafter(scaled_error + 1e-15 * abs(value), math.inf),
    )
