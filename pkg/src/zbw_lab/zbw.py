"""
Closed-form commutative zitterbewegung observables.

Functions take a :class:`PhysicalConstants` instance so the same closed form
can be evaluated in SI or in the DiracNatural frame; the default is
DiracNatural. Times and widths are in the units of the constants passed.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .constants import NATURAL, PhysicalConstants
from .dirac_packet import Spin
from .quadrature import DEFAULT_TOL, QuadratureResult, integrate_1d

logger = logging.getLogger(__name__)

Scalar = Union[float, np.ndarray]


@dataclass(frozen=True)
class ZbwTrajectoryPoint:
    """Position expectation at time ``t``; fields may be numpy arrays."""

    t: Scalar
    x: Scalar
    y: Scalar
    z: Scalar


def zbw_frequency(consts: PhysicalConstants = NATURAL) -> float:
    """2 m_e c^2 / hbar."""
    return 2.0 * consts.m_e * consts.c**2 / consts.hbar


def _check_width(r_o: float) -> None:
    if not r_o > 0:
        raise ValueError(f"r_o must be positive, got {r_o}")


def amplitude_I(r_o: float, consts: PhysicalConstants = NATURAL) -> float:
    """Weight of the circular Fourier component, -(8 pi)^(-1/2) lambda_c / r_o."""
    _check_width(r_o)
    return -consts.lambda_c / (math.sqrt(8.0 * math.pi) * r_o)


def amplitude_J() -> float:
    """Weight of the z Fourier component; its polar integral of sin(2 theta) vanishes."""
    return 0.0


def _radial_moment(r_o: float, consts: PhysicalConstants, tol: float) -> QuadratureResult:
    """int_0^inf p^3 f^2 dp, integrated in the dimensionless variable p / p_o."""
    p_o = 2.0 * consts.hbar / r_o
    result = integrate_1d(lambda q: q**3 * math.exp(-2.0 * q * q), tol=tol, lower=0.0, upper=math.inf)
    factor = p_o * (2.0 / math.pi) ** 1.5
    return result.model_copy(
        update={"value": factor * result.value, "error_estimate": factor * result.error_estimate}
    )


def oracle_amplitude_I(r_o: float, consts: PhysicalConstants = NATURAL, tol: float = DEFAULT_TOL) -> QuadratureResult:
    """-2 (1/2 m_e c) int p^3 f^2 dp int sin^2(theta) dtheta by quadrature."""
    _check_width(r_o)
    radial = _radial_moment(r_o, consts, tol)
    polar = integrate_1d(lambda th: math.sin(th) ** 2, tol=tol, lower=0.0, upper=math.pi)
    prefactor = -2.0 / (2.0 * consts.m_e * consts.c)
    value = prefactor * radial.value * polar.value
    error = abs(prefactor) * (radial.error_estimate * abs(polar.value) + polar.error_estimate * abs(radial.value))
    return QuadratureResult(
        value=value,
        error_estimate=error,
        evaluations=radial.evaluations + polar.evaluations,
        method="adaptive-product",
    )


def oracle_amplitude_J(r_o: float = 1.0, consts: PhysicalConstants = NATURAL, tol: float = DEFAULT_TOL) -> QuadratureResult:
    """-pi (1/2 m_e c) int p^3 f^2 dp int sin(2 theta) dtheta by quadrature."""
    _check_width(r_o)
    radial = _radial_moment(r_o, consts, tol)
    polar = integrate_1d(lambda th: math.sin(2.0 * th), tol=tol, lower=0.0, upper=math.pi)
    prefactor = -math.pi / (2.0 * consts.m_e * consts.c)
    return QuadratureResult(
        value=prefactor * radial.value * polar.value,
        error_estimate=abs(prefactor) * (radial.error_estimate * abs(polar.value) + polar.error_estimate * abs(radial.value)),
        evaluations=radial.evaluations + polar.evaluations,
        method="adaptive-product",
    )


def _check_space_only(nc) -> None:
    if nc is not None and np.any(np.asarray(nc.eta) != 0.0):
        raise ValueError("Position trajectories are only defined for eta = 0")


def trajectory_fixed_phi(
    phi0: float,
    t: Scalar,
    consts: PhysicalConstants = NATURAL,
    nc=None,
) -> ZbwTrajectoryPoint:
    """Circle of radius lambda_c/2 traced at the ZBW frequency for a fixed azimuth.

    Args:
        phi0: Azimuth of the momentum component
        t: Time or array of times
        consts: Constants fixing the units
        nc: Optional space-noncommutativity parameters; momentum conservation
            leaves the trajectory unchanged, so theta never enters

    Returns:
        Trajectory point(s) with z identically zero
    """
    _check_space_only(nc)
    phase = zbw_frequency(consts) * np.asarray(t, dtype=float) + phi0
    radius = 0.5 * consts.lambda_c
    x = radius * np.sin(phase)
    y = radius * np.cos(phase)
    if np.ndim(t) == 0:
        return ZbwTrajectoryPoint(t=float(t), x=float(x), y=float(y), z=0.0)
    return ZbwTrajectoryPoint(t=np.asarray(t, dtype=float), x=x, y=y, z=np.zeros_like(x))


def weighted_trajectory(
    phi0: float,
    t: Scalar,
    r_o: float,
    consts: PhysicalConstants = NATURAL,
    nc=None,
) -> ZbwTrajectoryPoint:
    """The fixed-azimuth Fourier component weighted by ``amplitude_I(r_o)``."""
    circle = trajectory_fixed_phi(phi0, t, consts, nc=nc)
    weight = amplitude_I(r_o, consts)
    return ZbwTrajectoryPoint(t=circle.t, x=weight * circle.x, y=weight * circle.y, z=circle.z)


def trajectory_integrated(t: Scalar, consts: PhysicalConstants = NATURAL, nc=None) -> ZbwTrajectoryPoint:
    """Full-domain position expectation: the azimuthal integral cancels every component."""
    _check_space_only(nc)
    if np.ndim(t) == 0:
        return ZbwTrajectoryPoint(t=float(t), x=0.0, y=0.0, z=0.0)
    zeros = np.zeros(np.shape(t))
    return ZbwTrajectoryPoint(t=np.asarray(t, dtype=float), x=zeros, y=zeros.copy(), z=zeros.copy())


def magnetic_moment(
    spin: Spin,
    t: Scalar,
    consts: PhysicalConstants = NATURAL,
    charge: Optional[float] = None,
) -> np.ndarray:
    """(0, 0, +-(e lambda_c / 2)(1 - cos w_zbw t)); shape (3,) or (len(t), 3)."""
    e = consts.e if charge is None else charge
    z = Spin(spin).sign * 0.5 * e * consts.lambda_c * (1.0 - np.cos(zbw_frequency(consts) * np.asarray(t, dtype=float)))
    zeros = np.zeros_like(z)
    return np.stack([zeros, zeros, z], axis=-1)


def moment_time_average(spin: Spin, consts: PhysicalConstants = NATURAL) -> np.ndarray:
    """Mean of :func:`magnetic_moment` over one ZBW period."""
    return np.array([0.0, 0.0, Spin(spin).sign * 0.5 * consts.e * consts.lambda_c])
