"""
Spherical momentum-space quadrature for packet expectation values.

The squared packet profile f^2 = (2/(pi p_o^2))^(3/2) exp(-2 p^2/p_o^2) is
absorbed into a generalized Gauss-Laguerre rule (alpha = 1/2) on
u = 2 p^2 / p_o^2. The polar angle uses Gauss-Legendre nodes in cos(theta),
the azimuth the periodic trapezoid rule.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Callable, Optional, Tuple

import numpy as np
from scipy import special

from ..errors import ConvergenceError
from .adaptive import integrate_1d
from .base import DEFAULT_TOL, QuadratureResult, check_tolerance

logger = logging.getLogger(__name__)

DEFAULT_NODES = (8, 8, 8)
MAX_REFINEMENTS = 4

# integral over f^2 p^2 dp dOmega collapses to this constant times sum of weights
_PROFILE_FACTOR = 1.0 / (2.0 * math.pi**1.5)


def profile_squared(p: np.ndarray, p_o: float) -> np.ndarray:
    """f^2 as a function of |p|."""
    return (2.0 / (math.pi * p_o**2)) ** 1.5 * np.exp(-2.0 * np.asarray(p) ** 2 / p_o**2)


@dataclass(frozen=True)
class MomentumGrid:
    """Tensor-product nodes in spherical coordinates with folded weights."""

    p: np.ndarray
    theta: np.ndarray
    phi: np.ndarray
    weights: np.ndarray
    nodes: Tuple[int, int, int]

    @property
    def cartesian(self) -> np.ndarray:
        """Nodes as momentum vectors, shape (N, 3)."""
        sin_t = np.sin(self.theta)
        return np.stack(
            [self.p * sin_t * np.cos(self.phi), self.p * sin_t * np.sin(self.phi), self.p * np.cos(self.theta)],
            axis=-1,
        )

    def __len__(self) -> int:
        return int(self.weights.size)


@lru_cache(maxsize=64)
def momentum_grid(p_o: float, nodes: Tuple[int, int, int] = DEFAULT_NODES) -> MomentumGrid:
    """Grid whose weights integrate ``g * f^2 d^3p``.

    Args:
        p_o: Momentum width of the packet
        nodes: (radial, polar, azimuthal) node counts

    Returns:
        Flattened grid
    """
    n_r, n_t, n_p = nodes
    if min(nodes) < 1:
        raise ValueError(f"Node counts must be positive, got {nodes}")
    u, w_r = special.roots_genlaguerre(n_r, 0.5)
    cos_t, w_t = special.roots_legendre(n_t)
    phi = 2.0 * math.pi * np.arange(n_p) / n_p
    w_p = np.full(n_p, 2.0 * math.pi / n_p)

    p = p_o * np.sqrt(u / 2.0)
    # w_r sums to Gamma(3/2); the 1/(2 pi^1.5) factor completes the normalization of f^2
    P, T, F = np.meshgrid(p, np.arccos(cos_t), phi, indexing="ij")
    W = _PROFILE_FACTOR * np.einsum("i,j,k->ijk", w_r, w_t, w_p)
    grid = MomentumGrid(p=P.ravel(), theta=T.ravel(), phi=F.ravel(), weights=W.ravel(), nodes=tuple(nodes))
    for array in (grid.p, grid.theta, grid.phi, grid.weights):
        array.setflags(write=False)
    return grid


def _refined(nodes: Tuple[int, int, int]) -> Tuple[int, int, int]:
    return tuple(2 * n for n in nodes)


def expectation(
    g: Callable[[MomentumGrid], np.ndarray],
    p_o: float,
    tol: float = DEFAULT_TOL,
    nodes: Tuple[int, int, int] = DEFAULT_NODES,
) -> Tuple[np.ndarray, np.ndarray, int]:
    """Weighted sum of ``g`` over the grid, refined until stable.

    ``g`` receives the grid and returns values of shape (N, ...). Returns the
    integral (shape ``...``), its error estimate and the evaluation count.

    Raises:
        ConvergenceError: If the estimate is still above ``tol`` after refining
    """
    check_tolerance(tol)
    grid = momentum_grid(p_o, tuple(nodes))
    previous = np.tensordot(grid.weights, np.asarray(g(grid)), axes=(0, 0))
    evaluations = len(grid)
    current_nodes = tuple(nodes)
    for _ in range(MAX_REFINEMENTS):
        current_nodes = _refined(current_nodes)
        grid = momentum_grid(p_o, current_nodes)
        current = np.tensordot(grid.weights, np.asarray(g(grid)), axes=(0, 0))
        evaluations += len(grid)
        error = np.abs(current - previous)
        scale = np.maximum(1.0, np.abs(current))
        # per-axis tolerance tol/3
        if np.all(error <= tol / 3.0 * scale):
            logger.debug(f"momentum grid converged at nodes={current_nodes} max_err={float(np.max(error)):.2e}")
            return current, error, evaluations
        previous = current

    best = QuadratureResult(
        value=float(np.ravel(current)[0].real),
        error_estimate=float(np.max(error)),
        evaluations=evaluations,
        method="momentum-tensor",
    )
    raise ConvergenceError(f"Momentum quadrature did not converge at nodes={current_nodes}", best=best)


def integrate_momentum_3d(
    g: Callable[[np.ndarray, np.ndarray, np.ndarray], Any],
    p_o: float,
    tol: float = DEFAULT_TOL,
    weighted: bool = True,
    nodes: Tuple[int, int, int] = DEFAULT_NODES,
) -> QuadratureResult:
    """Spherical momentum integral of ``g(p, theta, phi)``.

    With ``weighted=True`` the squared packet profile is folded in, i.e. the
    result is the integral of g f^2 p^2 sin(theta) dp dtheta dphi. With
    ``weighted=False`` it is the plain integral of g p^2 sin(theta); g must
    then decay at least like exp(-2 p^2 / p_o^2).

    Args:
        g: Vectorized integrand in spherical coordinates
        p_o: Momentum width of the packet
        tol: Tolerance
        weighted: Fold the squared profile into the measure
        nodes: Starting (radial, polar, azimuthal) node counts

    Returns:
        Integral value with error estimate
    """
    if not p_o > 0:
        raise ValueError(f"p_o must be positive, got {p_o}")

    def integrand(grid: MomentumGrid) -> np.ndarray:
        values = np.asarray(g(grid.p, grid.theta, grid.phi), dtype=float)
        values = np.broadcast_to(values, grid.p.shape)
        if not weighted:
            values = values / profile_squared(grid.p, p_o)
        return values

    value, error, evaluations = expectation(integrand, p_o, tol=tol, nodes=nodes)
    return QuadratureResult(
        value=float(value),
        error_estimate=float(error),
        evaluations=evaluations,
        method="momentum-tensor",
        metadata={"weighted": weighted},
    )


def integrate_separable(
    radial: Callable[[float], float],
    polar: Callable[[float], float],
    azimuthal: Optional[Callable[[float], float]] = None,
    tol: float = DEFAULT_TOL,
    radial_scale: float = 1.0,
) -> QuadratureResult:
    """Product of three 1D integrals for a separable spherical integrand.

    Computes (int_0^inf radial(p) dp)(int_0^pi polar(theta) dtheta)(int_0^2pi azimuthal(phi) dphi).
    The measure factors (p^2, sin(theta)) belong to the supplied callables.
    A missing ``azimuthal`` factor contributes 2 pi exactly.
    """
    parts = [
        integrate_1d(radial, tol=tol, lower=0.0, upper=math.inf, scale=radial_scale),
        integrate_1d(polar, tol=tol, lower=0.0, upper=math.pi),
    ]
    if azimuthal is not None:
        parts.append(integrate_1d(azimuthal, tol=tol, lower=0.0, upper=2.0 * math.pi))
    else:
        parts.append(QuadratureResult(value=2.0 * math.pi, error_estimate=0.0, evaluations=1, method="exact"))

    value = math.prod(part.value for part in parts)
    error = 0.0
    for i, part in enumerate(parts):
        others = math.prod(abs(q.value) for j, q in enumerate(parts) if j != i)
        error += part.error_estimate * others
    return QuadratureResult(
        value=value,
        error_estimate=error,
        evaluations=sum(part.evaluations for part in parts),
        method="separable",
    )
