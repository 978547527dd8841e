"""Exception hierarchy for zbw-lab."""

from typing import Optional, TYPE_CHECKING

if TYPE_CHECKING:
    from .quadrature.base import QuadratureResult


class ZbwLabError(Exception):
    """Base class for all zbw-lab errors."""


class ConfigError(ZbwLabError, ValueError):
    """Configuration document could not be parsed or validated."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnitError(ZbwLabError, ValueError):
    """A quantity has a dimension the unit frames do not handle."""


class ComputationError(ZbwLabError, RuntimeError):
    """A numerical computation failed."""


class ConvergenceError(ComputationError):
    """Quadrature did not reach the requested tolerance.

    The best estimate obtained before giving up is kept on ``best``.
    """

    def __init__(self, message: str, best: "Optional[QuadratureResult]" = None):
        self.best = best
        if best is not None:
            message = f"{message} (best value {best.value!r} +/- {best.error_estimate:.3e})"
        super().__init__(message)
