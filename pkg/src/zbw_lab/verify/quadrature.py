"""Checks for the integration engines."""

import math

import numpy as np

from ..graphene import GrapheneConfig, overlap
from ..quadrature import integrate_momentum_3d, integrate_weighted, monte_carlo_gaussian
from .base import Comparison, check

MODULE = "quadrature-oracle"


@check(MODULE, "n-point Gauss-Hermite is exact to degree 2n - 1")
def gauss_hermite_exactness() -> Comparison:
    n = 16
    degrees = range(0, 2 * n, 2)
    actual = [integrate_weighted(lambda x, k=k: x**k, n) for k in degrees]
    expected = [math.gamma((k + 1) / 2.0) for k in degrees]
    return Comparison(expected=expected, actual=actual, tolerance=1e-12)


@check(MODULE, "adaptive and Gauss-Hermite agree on the overlap integrands")
def engines_agree() -> Comparison:
    config = GrapheneConfig()
    pairs = [(m, m + d) for m in range(6) for d in (0, 1, 2)]
    return Comparison(
        expected=[overlap(a, b, config, method="adaptive") for a, b in pairs],
        actual=[overlap(a, b, config, method="gauss-hermite") for a, b in pairs],
        tolerance=1e-9,
    )


@check(MODULE, "the momentum grid carries a normalized profile")
def momentum_normalization() -> Comparison:
    result = integrate_momentum_3d(lambda p, theta, phi: np.ones_like(p), p_o=0.5)
    return Comparison(expected=1.0, actual=result.value, tolerance=1e-12)


@check(MODULE, "seeded sampling is deterministic")
def monte_carlo_deterministic() -> bool:
    def g(p):
        return p[:, 0] ** 2

    first = monte_carlo_gaussian(g, n=10_000, seed=7)
    second = monte_carlo_gaussian(g, n=10_000, seed=7)
    return first.value == second.value and first.error_estimate == second.error_estimate
