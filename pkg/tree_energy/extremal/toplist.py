from __future__ import annotations

from typing import Optional

from loguru import logger
from pydantic import BaseModel, Field

from tree_energy.errors import RangeViolation
from tree_energy.extremal.claims import MIN_ORDER, ClaimTag
from tree_energy.extremal.enumeration import two_leg_order
from tree_energy.extremal.ranking import rank_by_energy
from tree_energy.graph import PathSpec, build, format_spec

__all__ = ["PredictedList", "PrefixAgreement", "predicted_top_list", "check_against_bruteforce"]


class PredictedList(BaseModel):
    """Trees of order n predicted to carry the largest energies, largest first"""

    n: int
    trees: list[str] = Field(
        ..., description="P(n), then the two-leg chain without its last three members"
    )


class PrefixAgreement(BaseModel):
    """How far an exhaustive energy ranking follows the path plus the two-leg chain"""

    n: int
    predicted: list[str] = Field(..., description="P(n) followed by the whole two-leg chain")
    ranked: list[str] = Field(..., description="spec or canonical code at each rank")
    agreeing_prefix: int = Field(..., ge=0, description="leading positions that match")

    def to_text(self) -> str:
        lines = [f"n={self.n}: ranking follows the chain for {self.agreeing_prefix} places"]
        for rank, (want, got) in enumerate(zip(self.predicted, self.ranked), 1):
            mark = "=" if rank <= self.agreeing_prefix else " "
            lines.append(f"  {rank:>3} {mark} {got:<24} predicted {want}")
        return "\n".join(lines)


def predicted_top_list(n: int) -> PredictedList:
    """The floor((n-7)/2) trees of largest energy, for n >= 31."""
    if n < MIN_ORDER[ClaimTag.top_list]:
        raise RangeViolation(
            f"the top list is only established for n >= {MIN_ORDER[ClaimTag.top_list]}, got {n}"
        )
    chain = two_leg_order(n)[:-3]
    return PredictedList(n=n, trees=[f"P({n})", *(format_spec(s) for s in chain)])


def check_against_bruteforce(n: int, jobs: Optional[int] = None) -> PrefixAgreement:
    """Rank every tree of order n and measure the agreement with the predicted order.

    Below n = 31 nothing is claimed; the prefix length is evidence only.
    """
    if n < 7:
        raise RangeViolation(f"the two-leg chain needs n >= 7, got {n}")
    specs = [PathSpec(n=n), *two_leg_order(n)]
    ranking = rank_by_energy(n, top=len(specs), jobs=jobs)
    agreeing = 0
    for spec, entry in zip(specs, ranking):
        if build(spec).code != entry.code:
            break
        agreeing += 1
    logger.info(f"order {n}: energy ranking follows the predicted order for {agreeing} places")
    return PrefixAgreement(
        n=n,
        predicted=[format_spec(s) for s in specs],
        ranked=[entry.spec or entry.code for entry in ranking],
        agreeing_prefix=agreeing,
    )
