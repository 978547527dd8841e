"""Fixed-node Gauss-Hermite quadrature over the real line."""

import logging
import math
from functools import lru_cache
from typing import Any, Callable, Tuple

import numpy as np
from scipy import special

from ..errors import ConvergenceError
from .base import DEFAULT_TOL, QuadratureEngine, QuadratureResult, check_tolerance

logger = logging.getLogger(__name__)

# exp(x^2) at the outermost node stays finite up to this order
MAX_NODES = 256


@lru_cache(maxsize=32)
def hermite_rule(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of the n-point rule for the weight exp(-x^2)."""
    if n < 1:
        raise ValueError(f"Number of nodes must be >= 1, got {n}")
    nodes, weights = special.roots_hermite(n)
    nodes.setflags(write=False)
    weights.setflags(write=False)
    return nodes, weights


def integrate_weighted(g: Callable[[np.ndarray], Any], n: int) -> float:
    """Sum of w_i g(x_i): exact for polynomials g of degree <= 2n - 1 against exp(-x^2)."""
    nodes, weights = hermite_rule(n)
    values = np.broadcast_to(np.asarray(g(nodes), dtype=float), nodes.shape)
    return float(np.dot(weights, values))


class GaussHermiteQuadrature(QuadratureEngine):
    """Integrates f over the real line as sum w_i exp(y_i^2) f(center + scale y_i).

    The error estimate is the difference between the ``n`` and ``2n`` rules;
    ``n`` doubles until it falls below ``tol`` or ``MAX_NODES`` is reached.
    """

    name = "gauss-hermite"

    def __init__(self, n: int = 64):
        if n < 1:
            raise ValueError(f"Number of nodes must be >= 1, got {n}")
        self.n = n

    def _rule_value(self, f: Callable[[Any], Any], n: int, center: float, scale: float) -> float:
        nodes, weights = hermite_rule(n)
        values = np.asarray(f(center + scale * nodes), dtype=float)
        return float(scale * np.dot(weights * np.exp(nodes**2), values))

    def integrate(
        self,
        f: Callable[[Any], Any],
        lower: float = -math.inf,
        upper: float = math.inf,
        tol: float = DEFAULT_TOL,
        center: float = 0.0,
        scale: float = 1.0,
    ) -> QuadratureResult:
        check_tolerance(tol)
        if math.isfinite(lower) or math.isfinite(upper):
            raise ValueError("Gauss-Hermite quadrature integrates over the whole real line only")
        if not scale > 0:
            raise ValueError(f"Scale must be positive, got {scale}")

        n = self.n
        previous = self._rule_value(f, n, center, scale)
        evaluations = n
        while True:
            n2 = 2 * n
            current = self._rule_value(f, n2, center, scale)
            evaluations += n2
            error = abs(current - previous)
            result = QuadratureResult(
                value=current,
                error_estimate=error,
                evaluations=evaluations,
                method=self.name,
                metadata={"nodes": n2},
            )
            if error <= tol * max(1.0, abs(current)):
                logger.debug(f"gauss-hermite: value={current!r} err={error:.2e} nodes={n2}")
                return result
            if n2 >= MAX_NODES:
                raise ConvergenceError("Gauss-Hermite quadrature did not converge", best=result)
            n, previous = n2, current


def integrate_1d_gauss_hermite(
    f: Callable[[Any], Any],
    tol: float = DEFAULT_TOL,
    center: float = 0.0,
    scale: float = 1.0,
    n: int = 64,
) -> QuadratureResult:
    """Integrate ``f`` over the real line with the fixed-node engine.

    ``f`` must accept numpy arrays.
    """
    return GaussHermiteQuadrature(n=n).integrate(f, tol=tol, center=center, scale=scale)
