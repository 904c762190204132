"""Pass/fail reporting shared by all verification batteries.

Every identity checker in this package returns a ``CheckReport``.  A report
counts how many individual comparisons ran and records each failure with a
locator (which index, matrix entry, or series coefficient broke) plus the
offending data, so a failing battery always names a concrete counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckFailure:
    check: str
    where: str
    detail: str = ""

    def __str__(self) -> str:
        text = f"{self.check} at {self.where}"
        return f"{text}: {self.detail}" if self.detail else text


@dataclass
class CheckReport:
    name: str
    cases: int = 0
    failures: list[CheckFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, passed: bool, check: str, where, detail: str = "") -> None:
        self.cases += 1
        if not passed:
            self.failures.append(CheckFailure(check, str(where), detail))

    def expect_equal(self, got, want, check: str, where) -> None:
        if got == want:
            self.cases += 1
        else:
            self.record(False, check, where, f"got {got}, want {want}")

    def merge(self, other: CheckReport) -> None:
        self.cases += other.cases
        self.failures.extend(other.failures)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name} ({self.cases} checks)"
