"""Verification reports: named exact checks with pass/fail/error status."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

PASS, FAIL, ERROR = "pass", "fail", "error"


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class SuiteReport:
    suite: str
    type_label: str | None
    rank: int | None
    checks: list[Check] = field(default_factory=list)
    elapsed_ms: int = 0
    _t0: float = field(default_factory=time.perf_counter, repr=False)

    def check(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, PASS if ok else FAIL, detail))
        return ok

    def run(self, name: str, fn: Callable[[], tuple[bool, str] | bool]) -> None:
        """Run fn and record its outcome; exceptions become status 'error'."""
        try:
            out = fn()
        except Exception as exc:  # report, never crash a suite
            self.checks.append(Check(name, ERROR, f"{type(exc).__name__}: {exc}"))
            return
        ok, detail = out if isinstance(out, tuple) else (out, "")
        self.check(name, ok, detail)

    def extend(self, other: "SuiteReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.status, c.detail))

    def finish(self) -> "SuiteReport":
        self.elapsed_ms = int((time.perf_counter() - self._t0) * 1000)
        return self

    @property
    def passed(self) -> bool:
        return all(c.status == PASS for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status != PASS]

    def status_of(self, name: str) -> str:
        for c in self.checks:
            if c.name == name:
                return c.status
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "type_label": self.type_label,
            "rank": self.rank,
            "checks": [c.to_json() for c in self.checks],
            "elapsed_ms": self.elapsed_ms,
        }

    def to_text(self) -> str:
        head = f"suite {self.suite}"
        if self.type_label:
            head += f" type {self.type_label}"
        if self.rank is not None:
            head += f" rank {self.rank}"
        lines = [head]
        for c in self.checks:
            line = f"  [{c.status.upper()}] {c.name}"
            if c.detail:
                line += f" ({c.detail})"
            lines.append(line)
        n_ok = sum(c.status == PASS for c in self.checks)
        lines.append(f"  {n_ok}/{len(self.checks)} checks passed")
        return "\n".join(lines)
