from __future__ import annotations

import math
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from tree_energy.poly.sturm import SignKind


class EnergyValue(BaseModel):
    """A real number certified to lie in [midpoint - radius, midpoint + radius]."""

    model_config = ConfigDict(frozen=True)

    midpoint: float = Field(..., description="center of the certified interval")
    radius: float = Field(0.0, ge=0, description="half-width of the certified interval")

    @property
    def lower(self) -> float:
        return self.midpoint - self.radius

    @property
    def upper(self) -> float:
        return self.midpoint + self.radius

    @classmethod
    def from_bounds(cls, lower: float, upper: float) -> EnergyValue:
        """Smallest float interval that covers [lower, upper]."""
        mid = (lower + upper) / 2
        radius = max(upper - mid, mid - lower)
        return cls(midpoint=mid, radius=math.nextafter(radius, math.inf) if radius else 0.0)

    def __add__(self, other: EnergyValue) -> EnergyValue:
        return EnergyValue.from_bounds(
            math.nextafter(self.lower + other.lower, -math.inf),
            math.nextafter(self.upper + other.upper, math.inf),
        )

    def __sub__(self, other: EnergyValue) -> EnergyValue:
        return EnergyValue.from_bounds(
            math.nextafter(self.lower - other.upper, -math.inf),
            math.nextafter(self.upper - other.lower, math.inf),
        )

    def scaled(self, factor: float) -> EnergyValue:
        """factor * value for factor > 0."""
        return EnergyValue.from_bounds(
            math.nextafter(self.lower * factor, -math.inf),
            math.nextafter(self.upper * factor, math.inf),
        )

    def positive(self) -> bool:
        return self.lower > 0

    def overlaps(self, other: EnergyValue) -> bool:
        return self.lower <= other.upper and other.lower <= self.upper

    def __str__(self) -> str:
        return f"{self.midpoint:.12f} +/- {self.radius:.1e}"


class Quadrature(BaseModel):
    """Parameters and outcome of one adaptive Gauss-Kronrod evaluation."""

    epsabs: float = Field(..., description="absolute tolerance per piece")
    limit: int = Field(..., description="maximum number of subintervals per piece")
    pieces: int = Field(0, description="pieces integrated")
    error_estimate: float = Field(0.0, description="sum of the reported error estimates")


class DominanceMode(str, Enum):
    base_gap = "BaseGap"
    first_gap = "FirstGap"
    mixed_bound = "MixedBound"
    inconclusive = "Inconclusive"


class NegativeInterval(BaseModel):
    """One interval of the set where h1 g0 - h0 g1 < 0; ``hi=None`` is +inf."""

    lo: float
    hi: Optional[float]
    lo_radius: float = 0.0
    hi_radius: float = 0.0


class DominanceResult(BaseModel):
    """Lower bound on E(H(k)) - E(G(k)) valid for a whole subdivision family."""

    mode: DominanceMode
    sign: Optional[SignKind] = Field(
        None, description="sign of w on (0, inf); None when w vanishes identically"
    )
    w: str = Field(..., description="h1 g0 - h0 g1, text form")
    holds_for: str = Field(..., description="range of k the bound is proven for")
    lower_bound_on_gap: EnergyValue
    alternative_bound: Optional[EnergyValue] = Field(
        None, description="same bound through E(H(1)) - E(G(1)) and the complement set"
    )
    exact_zero_gap: bool = Field(
        False, description="the base gap was certified to vanish algebraically"
    )
    negative_set: list[NegativeInterval] = Field(default_factory=list)
    energies: dict[str, EnergyValue] = Field(
        default_factory=dict, description="E(G(0)), E(H(0)), E(G(1)), E(H(1))"
    )
    quadrature: Optional[Quadrature] = None

    @property
    def conclusive(self) -> bool:
        return self.mode != DominanceMode.inconclusive
