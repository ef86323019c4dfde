from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import sympy
from loguru import logger
from mpmath import iv

from tree_energy.charpoly import phi_tilde
from tree_energy.config import config
from tree_energy.energy.types import EnergyValue
from tree_energy.graph import Forest
from tree_energy.poly import ExactPoly, IsolatingInterval, isolate_positive_roots

__all__ = [
    "energy",
    "energy_from_phi_tilde",
    "squared_spectrum_poly",
    "algebraic_energy",
    "energies_equal",
]

_PREC = 128
# below this root radius the interval sum no longer tightens at _PREC bits
_FINEST = Fraction(1, 2**100)


def squared_spectrum_poly(p: ExactPoly) -> ExactPoly:
    """q with phi(G, x) = x**(n mod 2) q(x**2); its roots are the squared eigenvalues."""
    n = p.degree
    half = n // 2
    return ExactPoly(
        tuple(
            -p.coefficient(n - 2 * i) if i % 2 else p.coefficient(n - 2 * i)
            for i in reversed(range(half + 1))
        )
    )


def _interval(value: Fraction) -> iv.mpf:
    return iv.mpf(value.numerator) / value.denominator


def _sum_bounds(roots: list[tuple[IsolatingInterval, int]]) -> tuple[iv.mpf, iv.mpf]:
    lower = iv.mpf(0)
    upper = iv.mpf(0)
    for root, mult in roots:
        lower += mult * iv.sqrt(_interval(root.lo))
        upper += mult * iv.sqrt(_interval(root.hi))
    return 2 * lower, 2 * upper


def energy_from_phi_tilde(p: ExactPoly, tol: Optional[float] = None) -> EnergyValue:
    """2 * sum of the positive roots of phi, with multiplicity, from phi-tilde alone.

    Each squared eigenvalue is isolated exactly and refined by bisection; the
    square roots are summed in interval arithmetic until the radius is at most tol.
    """
    tol = config.numerics.energy_tol if tol is None else tol
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    q = squared_spectrum_poly(p)
    if q.degree <= 0:
        return EnergyValue(midpoint=0.0, radius=0.0)
    roots = [
        (root, mult)
        for factor, mult in q.squarefree_decomposition()
        for root in isolate_positive_roots(factor)
    ]
    weight = sum(mult for _, mult in roots) or 1

    old_prec = iv.prec
    iv.prec = _PREC
    try:
        root_tol = Fraction(tol) / (4 * weight)
        while True:
            roots = [(root.refine(root_tol), mult) for root, mult in roots]
            lower, upper = _sum_bounds(roots)
            value = EnergyValue.from_bounds(
                math.nextafter(float(lower.a), -math.inf),
                math.nextafter(float(upper.b), math.inf),
            )
            if value.radius <= tol or root_tol < _FINEST:
                break
            root_tol /= 16
    finally:
        iv.prec = old_prec
    if value.radius > tol:
        logger.warning(f"energy radius {value.radius:.2e} stayed above {tol:.2e} for {p}")
    return value


@lru_cache(maxsize=4096)
def _energy_cached(p: ExactPoly, tol: float) -> EnergyValue:
    return energy_from_phi_tilde(p, tol)


def energy(f: Forest, tol: Optional[float] = None) -> EnergyValue:
    """Certified energy of a forest."""
    tol = config.numerics.energy_tol if tol is None else tol
    return _energy_cached(phi_tilde(f), tol)


def algebraic_energy(p: ExactPoly) -> Optional[sympy.Expr]:
    """Closed form of the energy when every squared eigenvalue has degree at most 2.

    Returns None when some irreducible factor is of higher degree.
    """
    y = sympy.Symbol("y")
    q = squared_spectrum_poly(p)
    if q.degree <= 0:
        return sympy.Integer(0)
    expr = sympy.Poly.from_list(list(reversed(q.coeffs)), y)
    _, irreducible = sympy.factor_list(expr)
    total = sympy.Integer(0)
    for factor, mult in irreducible:
        if factor.degree() > 2:
            return None
        for root in sympy.roots(factor, multiple=True):
            if root != 0:
                total += mult * sympy.sqrt(root)
    return 2 * total


def energies_equal(p: ExactPoly, q: ExactPoly) -> Optional[bool]:
    """Exact decision of E(p) == E(q); None when no closed form is available."""
    if p == q:
        return True
    first, second = algebraic_energy(p), algebraic_energy(q)
    if first is None or second is None:
        return None
    z = sympy.Symbol("z")
    return sympy.minimal_polynomial(first - second, z) == z
