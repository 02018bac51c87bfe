"""Structured pass/fail reports for verification suites."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional


@dataclass(frozen=True)
class Case:
    desc: str
    residual: float
    tol: float
    passed: bool

    def to_json(self) -> dict:
        r = self.residual
        return {
            "desc": self.desc,
            "residual": r if math.isfinite(r) else str(r),
            "tol": self.tol,
            "pass": self.passed,
        }


@dataclass
class SuiteReport:
    suite: str
    params: dict = field(default_factory=dict)
    cases: list[Case] = field(default_factory=list)
    seconds: Optional[float] = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def check(self, desc: str, residual: float, tol: float) -> Case:
        """Record a tolerance case; NaN never passes."""
        residual = float(residual)
        case = Case(desc, residual, float(tol), bool(residual <= tol))
        self.cases.append(case)
        return case

    def exact(self, desc: str, equal: bool) -> Case:
        """Record an exact-equality case (residual 0 or 1, zero tolerance)."""
        case = Case(desc, 0.0 if equal else 1.0, 0.0, bool(equal))
        self.cases.append(case)
        return case

    def failures(self) -> list[Case]:
        return [c for c in self.cases if not c.passed]

    def worst(self) -> Optional[Case]:
        """The case with the largest residual-to-tolerance ratio."""
        if not self.cases:
            return None

        def ratio(c: Case) -> float:
            if c.tol == 0:
                return math.inf if c.residual else 0.0
            return c.residual / c.tol

        return max(self.cases, key=ratio)

    def to_json(self, timing: bool = True) -> dict:
        out = {"suite": self.suite}
        if self.params:
            out["params"] = self.params
        out["cases"] = [c.to_json() for c in self.cases]
        out["pass"] = self.passed
        out["seconds"] = self.seconds if timing else None
        return out
