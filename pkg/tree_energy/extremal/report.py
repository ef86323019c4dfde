from __future__ import annotations

from typing import Literal, Optional

from loguru import logger
from pydantic import BaseModel, Field

from tree_energy.errors import VerificationFailure
from tree_energy.extremal.claims import ClaimTag

__all__ = ["Check", "VerificationReport", "ReportBuilder"]


class Check(BaseModel):
    """One re-computed quantity next to the value it is held against"""

    quantity: str = Field(..., description="what was computed")
    expected: Optional[str] = Field(None, description="reference value, if any")
    observed: str = Field(..., description="value found by this run")
    status: Literal["PASS", "FAIL", "INFO"] = Field(
        ..., description="INFO rows are reported without being asserted"
    )


class VerificationReport(BaseModel):
    claim: ClaimTag
    n: int = Field(..., description="order the claim was checked at")
    checks: list[Check] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not any(check.status == "FAIL" for check in self.checks)

    def failures(self) -> list[Check]:
        return [check for check in self.checks if check.status == "FAIL"]

    def to_text(self) -> str:
        lines = [f"[{'PASS' if self.passed else 'FAIL'}] {self.claim.value} n={self.n}"]
        for check in self.checks:
            expected = "" if check.expected is None else f" (expected {check.expected})"
            lines.append(f"  {check.status:<4} {check.quantity}: {check.observed}{expected}")
        return "\n".join(lines)

    def raise_for_failure(self) -> None:
        failures = self.failures()
        if failures:
            first = failures[0]
            raise VerificationFailure(first.quantity, first.expected, first.observed)


class ReportBuilder:
    """Collects checks for one claim at one order"""

    def __init__(self, claim: ClaimTag, n: int) -> None:
        self.claim = claim
        self.n = n
        self._checks: list[Check] = []

    def check(
        self,
        quantity: str,
        ok: bool,
        observed: object,
        expected: object = None,
    ) -> bool:
        status: Literal["PASS", "FAIL"] = "PASS" if ok else "FAIL"
        self._checks.append(
            Check(
                quantity=quantity,
                expected=None if expected is None else str(expected),
                observed=str(observed),
                status=status,
            )
        )
        if not ok:
            logger.warning(
                f"{self.claim.value} n={self.n}: {quantity} is {observed}, expected {expected}"
            )
        return ok

    def note(self, quantity: str, observed: object) -> None:
        self._checks.append(Check(quantity=quantity, observed=str(observed), status="INFO"))

    def close(self, quantity: str, observed: float, expected: float, tol: float) -> bool:
        return self.check(
            quantity, abs(observed - expected) <= tol, f"{observed:.6f}", f"{expected:.6f} +/- {tol:g}"
        )

    def is_passing(self) -> bool:
        return not any(check.status == "FAIL" for check in self._checks)

    def build(self) -> VerificationReport:
        return VerificationReport(claim=self.claim, n=self.n, checks=list(self._checks))
