"""Numerical integration engines used as oracles for the closed forms."""

from .adaptive import AdaptiveQuadrature, integrate_1d
from .base import DEFAULT_TOL, QuadratureEngine, QuadratureResult
from .gauss_hermite import GaussHermiteQuadrature, hermite_rule, integrate_1d_gauss_hermite, integrate_weighted
from .momentum import MomentumGrid, expectation, integrate_momentum_3d, integrate_separable, momentum_grid, profile_squared
from .monte_carlo import RNG_ALGORITHM, monte_carlo_gaussian

__all__ = [
    "DEFAULT_TOL",
    "QuadratureEngine",
    "QuadratureResult",
    "AdaptiveQuadrature",
    "GaussHermiteQuadrature",
    "integrate_1d",
    "integrate_1d_gauss_hermite",
    "integrate_weighted",
    "hermite_rule",
    "MomentumGrid",
    "momentum_grid",
    "expectation",
    "integrate_momentum_3d",
    "integrate_separable",
    "profile_squared",
    "monte_carlo_gaussian",
    "RNG_ALGORITHM",
]
