from __future__ import annotations

from enum import Enum
from typing import Literal, Optional

from pydantic import BaseModel, Field


class Relation(str, Enum):
    strictly_less = "StrictlyLess"
    equal = "Equal"
    strictly_greater = "StrictlyGreater"
    incomparable = "Incomparable"


class QuasiOrderVerdict(BaseModel):
    """Outcome of a coefficient-wise comparison of two phi-tilde polynomials.

    Witnesses are exponents of x: ``less_at`` is a power where the first
    polynomial has the smaller coefficient, ``greater_at`` one where it has
    the larger. Strict verdicts carry one of them, Incomparable carries both.
    """

    relation: Relation = Field(..., description="coefficient-wise relation of p to q")
    less_at: Optional[int] = Field(None, description="power of x where p is smaller")
    greater_at: Optional[int] = Field(None, description="power of x where p is larger")

    @property
    def weakly_less(self) -> bool:
        return self.relation in (Relation.strictly_less, Relation.equal)


class BaseComparison(BaseModel):
    """One base pair a family certificate rests on."""

    position: tuple[int, ...] = Field(
        ..., description="subdivision counts of the pair: (k,) or (l, k)"
    )
    g: str = Field(..., description="phi-tilde of the G side, text form")
    h: str = Field(..., description="phi-tilde of the H side, text form")
    verdict: QuasiOrderVerdict


class FamilyDominanceCertificate(BaseModel):
    """G(k) <= H(k) for every k (or G(l,k) <= H(l,k) for every l,k) in the quasi-order.

    ``relation_at`` gives the exact relation at any position; it is Equal
    everywhere exactly when every base pair is Equal.
    """

    family: Literal["single", "double"]
    bases: list[BaseComparison]
    relation: Relation = Field(
        ..., description="StrictlyLess when some member is strict, Equal otherwise"
    )
    strict: bool = Field(
        ..., description="strict for every k >= 2 (single) or every max(l, k) >= 2 (double)"
    )

    def _base(self, *position: int) -> Relation:
        for base in self.bases:
            if base.position == position:
                return base.verdict.relation
        raise KeyError(position)

    def _row(self, l: int, k: int) -> Relation:
        """Relation of G(l, k) and H(l, k) for l in {0, 1} driven along the second edge."""
        if k <= 1:
            return self._base(l, k)
        if Relation.strictly_less in (self._base(l, 0), self._base(l, 1)):
            return Relation.strictly_less
        return Relation.equal

    def relation_at(self, *position: int) -> Relation:
        if self.family == "single":
            (k,) = position
            if k <= 1:
                return self._base(k)
            return self.relation
        l, k = position
        if l <= 1:
            return self._row(l, k)
        if Relation.strictly_less in (self._row(0, k), self._row(1, k)):
            return Relation.strictly_less
        return Relation.equal


class Inconclusive(BaseModel):
    """The base comparisons do not all point the same way; nothing follows for the family."""

    family: Literal["single", "double"]
    bases: list[BaseComparison]
    reason: str
