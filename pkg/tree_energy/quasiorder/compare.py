from __future__ import annotations

from typing import Literal

from loguru import logger

from tree_energy.charpoly import phi_tilde
from tree_energy.energy.types import EnergyValue
from tree_energy.errors import DegreeMismatch, NegativeCoefficient, NotMonic, OrderMismatch
from tree_energy.graph import Edge, Forest, subdivide, subdivide_pair
from tree_energy.poly import ExactPoly
from tree_energy.quasiorder.types import (
    BaseComparison,
    FamilyDominanceCertificate,
    Inconclusive,
    QuasiOrderVerdict,
    Relation,
)

Family = Literal["single", "double"]

__all__ = [
    "compare",
    "compare_forests",
    "family_compare_single",
    "family_compare_double",
    "replay",
    "quasiorder_implies_energy",
]


def _validate(p: ExactPoly, name: str) -> None:
    if not p.is_monic():
        raise NotMonic(f"{name} = {p} is not monic")
    if any(c < 0 for c in p.coeffs):
        raise NegativeCoefficient(f"{name} = {p} has a negative coefficient")


def compare(p: ExactPoly, q: ExactPoly) -> QuasiOrderVerdict:
    """Coefficient-wise comparison of two phi-tilde polynomials."""
    if p.degree != q.degree:
        raise DegreeMismatch(f"degrees differ: {p.degree} and {q.degree}")
    _validate(p, "p")
    _validate(q, "q")
    less_at = greater_at = None
    for power in range(p.degree + 1):
        a, b = p.coefficient(power), q.coefficient(power)
        if a < b and less_at is None:
            less_at = power
        elif a > b and greater_at is None:
            greater_at = power
    if less_at is None and greater_at is None:
        relation = Relation.equal
    elif greater_at is None:
        relation = Relation.strictly_less
    elif less_at is None:
        relation = Relation.strictly_greater
    else:
        relation = Relation.incomparable
    return QuasiOrderVerdict(relation=relation, less_at=less_at, greater_at=greater_at)


def compare_forests(g: Forest, h: Forest) -> QuasiOrderVerdict:
    return compare(phi_tilde(g), phi_tilde(h))


def _base(position: tuple[int, ...], g: Forest, h: Forest) -> BaseComparison:
    pg, ph = phi_tilde(g), phi_tilde(h)
    return BaseComparison(
        position=position, g=pg.to_text(), h=ph.to_text(), verdict=compare(pg, ph)
    )


def _conclude(
    family: Family, bases: list[BaseComparison], strict: bool
) -> FamilyDominanceCertificate | Inconclusive:
    failing = [b for b in bases if not b.verdict.weakly_less]
    if failing:
        reason = ", ".join(f"{b.position}: {b.verdict.relation.value}" for b in failing)
        logger.debug(f"family comparison inconclusive at {reason}")
        return Inconclusive(family=family, bases=bases, reason=f"base pairs not <=: {reason}")
    all_equal = all(b.verdict.relation == Relation.equal for b in bases)
    return FamilyDominanceCertificate(
        family=family,
        bases=bases,
        relation=Relation.equal if all_equal else Relation.strictly_less,
        strict=strict,
    )


def family_compare_single(
    g: Forest, e: Edge, h: Forest, e2: Edge
) -> FamilyDominanceCertificate | Inconclusive:
    """Lift G(0) <= H(0) and G(1) <= H(1) to G(k) <= H(k) for every k."""
    if g.n != h.n:
        raise OrderMismatch(f"orders differ: {g.n} and {h.n}")
    bases = [_base((k,), subdivide(g, e, k), subdivide(h, e2, k)) for k in (0, 1)]
    strict = any(b.verdict.relation == Relation.strictly_less for b in bases)
    return _conclude("single", bases, strict)


def family_compare_double(
    g: Forest, e1: Edge, e2: Edge, h: Forest, f1: Edge, f2: Edge
) -> FamilyDominanceCertificate | Inconclusive:
    """Lift the four base pairs G(l,k) <= H(l,k), l,k in {0,1}, to every l and k."""
    if g.n != h.n:
        raise OrderMismatch(f"orders differ: {g.n} and {h.n}")
    bases = [
        _base((l, k), subdivide_pair(g, e1, e2, l, k), subdivide_pair(h, f1, f2, l, k))
        for l in (0, 1)
        for k in (0, 1)
    ]
    rows = [[b for b in bases if b.position[0] == l] for l in (0, 1)]
    strict = all(
        any(b.verdict.relation == Relation.strictly_less for b in row) for row in rows
    )
    return _conclude("double", bases, strict)


def replay(record: FamilyDominanceCertificate | Inconclusive) -> bool:
    """Recompute every stored base verdict from the stored polynomials."""
    for base in record.bases:
        verdict = compare(ExactPoly.parse(base.g), ExactPoly.parse(base.h))
        if verdict != base.verdict:
            return False
    return True


def quasiorder_implies_energy(
    verdict: QuasiOrderVerdict, e_g: EnergyValue, e_h: EnergyValue
) -> bool:
    """False when the certified energies contradict the quasi-order verdict.

    StrictlyLess forbids E(G) >= E(H) beyond the radii, Equal forbids
    disjoint intervals; Incomparable claims nothing.
    """
    if verdict.relation == Relation.strictly_less:
        return e_g.lower < e_h.upper
    if verdict.relation == Relation.strictly_greater:
        return e_h.lower < e_g.upper
    if verdict.relation == Relation.equal:
        return e_g.lower <= e_h.upper and e_h.lower <= e_g.upper
    return True
