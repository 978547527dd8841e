"""Check registry and report models for the verification suite."""

import json
import logging
import time
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence, Union

import numpy as np
from pydantic import BaseModel, Field

from ..scenarios.output import to_jsonable

logger = logging.getLogger(__name__)

MODULES = (
    "constants-units",
    "spinor-algebra",
    "quadrature-oracle",
    "dirac-packet",
    "zbw-commutative",
    "nc-phase-space",
    "nc-space-moment",
    "nc-momentum-landau",
    "graphene-zbw",
)


@dataclass
class Comparison:
    """Outcome of one closed-form vs oracle comparison.

    ``relative`` scales the largest absolute difference by the largest
    expected magnitude; an all-zero expectation falls back to absolute.
    """

    expected: Any
    actual: Any
    tolerance: float
    mode: str = "relative"
    informational: bool = False
    detail: str = ""

    def deviation(self) -> float:
        expected = np.asarray(self.expected, dtype=complex)
        actual = np.asarray(self.actual, dtype=complex)
        difference = float(np.max(np.abs(actual - expected))) if expected.size else 0.0
        if self.mode == "relative":
            scale = float(np.max(np.abs(expected))) if expected.size else 0.0
            if scale > 0.0:
                return difference / scale
        elif self.mode != "absolute":
            raise ValueError(f"Unknown comparison mode {self.mode!r}")
        return difference


CheckOutcome = Union[Comparison, bool]


class CheckResult(BaseModel):
    """Result of one registered check."""
    name: str
    module: str
    anchor: str
    expected: Any = None
    actual: Any = None
    tolerance: Optional[float] = None
    deviation: Optional[float] = None
    passed: bool
    informational: bool = False
    detail: str = ""
    error: Optional[str] = None
    seconds: float = 0.0


class VerifyReport(BaseModel):
    """All check results plus the run's constants, frames and seeds."""
    checks: List[CheckResult] = Field(default_factory=list)
    metadata: Dict[str, Any] = Field(default_factory=dict)

    @property
    def failed(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed and not c.informational]

    @property
    def passed(self) -> bool:
        return not self.failed

    def to_json(self) -> str:
        payload = {
            "passed": self.passed,
            "checks": [to_jsonable(c.model_dump()) for c in self.checks],
            "metadata": to_jsonable(self.metadata),
        }
        return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


@dataclass(frozen=True)
class Check:
    name: str
    module: str
    anchor: str
    func: Callable[[], CheckOutcome]

    def run(self) -> CheckResult:
        started = time.perf_counter()
        try:
            outcome = self.func()
        except Exception as e:
            logger.debug(f"check {self.name} raised", exc_info=True)
            return CheckResult(
                name=self.name,
                module=self.module,
                anchor=self.anchor,
                passed=False,
                error=f"{type(e).__name__}: {e}",
                seconds=time.perf_counter() - started,
            )
        elapsed = time.perf_counter() - started

        if isinstance(outcome, Comparison):
            deviation = outcome.deviation()
            return CheckResult(
                name=self.name,
                module=self.module,
                anchor=self.anchor,
                expected=to_jsonable(outcome.expected),
                actual=to_jsonable(outcome.actual),
                tolerance=outcome.tolerance,
                deviation=deviation,
                passed=bool(deviation <= outcome.tolerance),
                informational=outcome.informational,
                detail=outcome.detail,
                seconds=elapsed,
            )
        return CheckResult(name=self.name, module=self.module, anchor=self.anchor, passed=bool(outcome), seconds=elapsed)


class CheckRegistry:
    """Registry of verification checks grouped by module."""

    def __init__(self):
        self._checks: Dict[str, Check] = {}

    def register(self, check: Check):
        if check.module not in MODULES:
            raise ValueError(f"Unknown module {check.module!r}; expected one of {MODULES}")
        if check.name in self._checks:
            raise ValueError(f"Check {check.name!r} is already registered")
        self._checks[check.name] = check

    def get(self, name: str) -> Optional[Check]:
        return self._checks.get(name)

    def list(self, module: Optional[str] = None) -> List[str]:
        return [name for name, c in self._checks.items() if module is None or c.module == module]

    def modules(self) -> List[str]:
        return [m for m in MODULES if any(c.module == m for c in self._checks.values())]

    def run(self, suite: str = "all", metadata: Optional[Dict[str, Any]] = None) -> VerifyReport:
        """Run every check of ``suite`` (a module name or ``all``)."""
        if suite != "all" and suite not in MODULES:
            raise ValueError(f"Unknown verify suite {suite!r}; expected 'all' or one of {MODULES}")
        selected: Sequence[Check] = [c for c in self._checks.values() if suite == "all" or c.module == suite]
        logger.info(f"Running {len(selected)} checks for suite {suite}")
        results = []
        for c in selected:
            result = c.run()
            level = logging.DEBUG if result.passed or result.informational else logging.WARNING
            logger.log(level, f"{c.module}/{c.name}: {'pass' if result.passed else 'FAIL'} deviation={result.deviation}")
            results.append(result)
        return VerifyReport(checks=results, metadata={"suite": suite, **(metadata or {})})


# Global registry instance
registry = CheckRegistry()


def check(module: str, anchor: str, name: Optional[str] = None):
    """Decorator to register a function as a verification check.

    The function takes no arguments and returns a :class:`Comparison` or a
    bool.
    """

    def decorator(func: Callable[[], CheckOutcome]):
        registry.register(Check(name=name or func.__name__, module=module, anchor=anchor, func=func))
        return func

    return decorator
