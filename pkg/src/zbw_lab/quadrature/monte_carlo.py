"""Monte Carlo expectation values under the squared packet profile."""

import logging
import math
from typing import Any, Callable

import numpy as np

from .base import QuadratureResult

logger = logging.getLogger(__name__)

DEFAULT_SAMPLES = 1_000_000
RNG_ALGORITHM = "PCG64"


def monte_carlo_gaussian(
    g: Callable[[np.ndarray], Any],
    n: int = DEFAULT_SAMPLES,
    seed: int = 0,
    p_o: float = 1.0,
) -> QuadratureResult:
    """Estimate the integral of g f^2 d^3p by sampling f^2.

    f^2 is an isotropic normal distribution with per-axis standard deviation
    p_o/2, so the estimate is the sample mean of ``g`` and the error estimate
    its standard error.

    Args:
        g: Vectorized integrand taking momenta of shape (n, 3)
        n: Number of samples
        seed: Seed for ``numpy.random.default_rng``
        p_o: Momentum width of the packet

    Returns:
        Estimate with sample standard error
    """
    if n < 1:
        raise ValueError(f"Number of samples must be >= 1, got {n}")
    rng = np.random.default_rng(seed)
    samples = rng.normal(0.0, p_o / 2.0, size=(n, 3))
    values = np.broadcast_to(np.asarray(g(samples), dtype=float), (n,))

    mean = float(np.mean(values))
    stderr = float(np.std(values, ddof=1) / math.sqrt(n)) if n > 1 else 0.0
    logger.debug(f"monte carlo: n={n} seed={seed} mean={mean!r} stderr={stderr:.2e}")
    return QuadratureResult(
        value=mean,
        error_estimate=stderr,
        evaluations=n,
        method="monte-carlo",
        metadata={"seed": seed, "rng": RNG_ALGORITHM, "samples": n},
    )
