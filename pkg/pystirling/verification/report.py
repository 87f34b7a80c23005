"""
Reports produced by the identity suites.
"""

from typing import Any, List

from pydantic import BaseModel, Field

from pystirling.logger import logger


class CheckFailure(BaseModel):
    """
    A single failed check with the serialized values of both sides.
    """

    check: str
    witness: str
    lhs: str
    rhs: str


class VerifyReport(BaseModel):
    """
    Outcome of a verification suite. `checks` counts every comparison, `failures` keeps the ones that did not
    hold.
    """

    suite: str
    checks: int = 0
    failures: List[CheckFailure] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def compare(self, check: str, witness: str, lhs: Any, rhs: Any) -> bool:
        """
        Records the comparison `lhs == rhs`.

        Args:
            check(str): Name of the identity.
            witness(str): The parameters the identity was instantiated with, for example `n=3, k=2`.
            lhs(Any): Left-hand side.
            rhs(Any): Right-hand side.

        Returns:
            bool: Whether both sides agree.
        """
        self.checks += 1
        if lhs == rhs:
            return True

        logger.debug("Check %s failed for %s: %s != %s", check, witness, lhs, rhs)
        self.failures.append(CheckFailure(check=check, witness=witness, lhs=str(lhs), rhs=str(rhs)))
        return False

    def expect(self, check: str, witness: str, holds: bool) -> bool:
        """Records a boolean check, failures are reported as `true` versus `false`."""
        return self.compare(check, witness, holds, True)

    def merge(self, other: "VerifyReport") -> "VerifyReport":
        self.checks += other.checks
        for failure in other.failures:
            self.failures.append(
                CheckFailure(
                    check=f"{other.suite}.{failure.check}",
                    witness=failure.witness,
                    lhs=failure.lhs,
                    rhs=failure.rhs,
                )
            )
        return self
