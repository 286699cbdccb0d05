"""Structured pass/fail reports shared by all verification sweeps."""

from __future__ import annotations

import dataclasses
from typing import Any

__all__ = ["CheckReport"]

_JSON_SAFE = (bool, int, str, type(None))


@dataclasses.dataclass
class CheckReport:
    """Outcome of one sweep: parameters, case count, and failure contexts.

    Failure contexts are flat dicts of JSON-safe values (exact rationals are
    rendered as "p/q" strings), so a report serializes as-is.
    """

    check: str
    parameters: dict[str, Any]
    cases: int = 0
    failures: list[dict[str, Any]] = dataclasses.field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def count_case(self, ok: bool, **context: Any) -> None:
        """Record one checked case; on failure keep its rendered context."""
        self.cases += 1
        if not ok:
            self.failures.append(
                {k: (v if isinstance(v, _JSON_SAFE) else str(v)) for k, v in context.items()}
            )

    def merge(self, other: CheckReport) -> None:
        self.cases += other.cases
        self.failures.extend(other.failures)

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            **self.parameters,
            "cases": self.cases,
            "failures": self.failures,
            "passed": self.passed,
        }

    def summary(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} mismatches)"
        return f"{self.check}: {params} cases={self.cases} {status}"
