"""Machine-readable pass/fail reports for verification suites."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any


def _jsonable(x: Any) -> Any:
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(v) for v in x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    return str(x)


@dataclass
class Failure:
    claim: str
    inputs: Any
    expected: Any
    got: Any

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "inputs": _jsonable(self.inputs),
            "expected": _jsonable(self.expected),
            "got": _jsonable(self.got),
        }


@dataclass
class VerificationReport:
    """Outcome of a suite: number of checks run and the failing ones."""

    suite: str
    cases: int = 0
    failures: list[Failure] = field(default_factory=list)
    wall_time: float = 0.0
    _start: float = field(default_factory=time.perf_counter, repr=False)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, claim: str, ok: bool, inputs: Any = None, expected: Any = None, got: Any = None) -> bool:
        self.cases += 1
        if not ok:
            self.failures.append(Failure(claim, inputs, expected, got))
        return ok

    def expect_equal(self, claim: str, expected: Any, got: Any, inputs: Any = None) -> bool:
        return self.check(claim, expected == got, inputs, expected, got)

    def merge(self, other: "VerificationReport") -> None:
        self.cases += other.cases
        self.failures.extend(other.failures)

    def finish(self) -> "VerificationReport":
        self.wall_time = time.perf_counter() - self._start
        return self

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "ok": self.ok,
            "cases": self.cases,
            "failures": [f.to_json() for f in self.failures],
            "wall_time": round(self.wall_time, 3),
        }

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.suite}: {self.cases} checks, {len(self.failures)} failures, {self.wall_time:.1f}s"
