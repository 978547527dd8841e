"""Base types for the quadrature engines."""

from abc import ABC, abstractmethod
from typing import Any, Callable, Dict

from pydantic import BaseModel, Field

DEFAULT_TOL = 1e-10


class QuadratureResult(BaseModel):
    """Value of an integral with an error estimate."""

    value: float
    error_estimate: float = Field(ge=0.0)
    evaluations: int = Field(gt=0)
    method: str = ""
    metadata: Dict[str, Any] = Field(default_factory=dict)


class QuadratureEngine(ABC):
    """A one-dimensional integrator over an interval of the real line."""

    name: str = "engine"

    @abstractmethod
    def integrate(
        self,
        f: Callable[[Any], Any],
        lower: float,
        upper: float,
        tol: float = DEFAULT_TOL,
        center: float = 0.0,
        scale: float = 1.0,
    ) -> QuadratureResult:
        """Integrate ``f`` from ``lower`` to ``upper``.

        Args:
            f: Integrand, called with floats or numpy arrays
            lower: Lower bound (may be -inf)
            upper: Upper bound (may be inf)
            tol: Absolute and relative tolerance
            center: Location of the integrand's bulk
            scale: Width of the integrand's bulk

        Returns:
            Integral value with error estimate
        """

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(name={self.name!r})"


def check_tolerance(tol: float) -> None:
    if not tol > 0:
        raise ValueError(f"Tolerance must be positive, got {tol}")
