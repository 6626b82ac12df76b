"""Machine-readable verification reports.

Every verify_* routine returns a VerificationReport: which suite ran, with
what parameters, whether every check passed, how many checks ran, and (on
failure) a JSON-serializable counterexample witnessing the first failure.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    parameters: dict
    status: str  # "pass" or "fail"
    checks_run: int
    elapsed_ms: int
    counterexample: dict | None = None
    notes: tuple = ()

    def __post_init__(self):
        if self.status not in ("pass", "fail"):
            raise ValueError("status must be 'pass' or 'fail'")
        if self.status == "fail" and self.counterexample is None:
            raise ValueError("a failing report must carry a counterexample")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        data = {"claim": self.suite}
        data.update(self.parameters)
        data["status"] = self.status
        data["checks_run"] = self.checks_run
        data["elapsed_ms"] = self.elapsed_ms
        if self.counterexample is not None:
            data["counterexample"] = self.counterexample
        if self.notes:
            data["notes"] = list(self.notes)
        return data


class ReportBuilder:
    """Accumulates checks for one suite run and stops at the first failure."""

    def __init__(self, suite: str, parameters: dict, notes=()):
        self.suite = suite
        self.parameters = dict(parameters)
        self.notes = tuple(notes)
        self.checks_run = 0
        self.counterexample = None
        self._start = time.perf_counter()

    @property
    def failed(self) -> bool:
        return self.counterexample is not None

    def check(self, ok: bool, witness) -> bool:
        """Record one check; witness() is only called when the check fails."""
        if self.failed:
            return False
        self.checks_run += 1
        if not ok:
            self.counterexample = witness() if callable(witness) else witness
        return ok

    def add_note(self, note: str) -> None:
        self.notes = self.notes + (note,)

    def finish(self) -> VerificationReport:
        elapsed_ms = int((time.perf_counter() - self._start) * 1000)
        return VerificationReport(
            suite=self.suite,
            parameters=self.parameters,
            status="fail" if self.failed else "pass",
            checks_run=self.checks_run,
            elapsed_ms=elapsed_ms,
            counterexample=self.counterexample,
            notes=self.notes,
        )
