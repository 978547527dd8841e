"""Checks for the space-noncommutative moment correction."""

import math

import numpy as np

from ..dirac_packet import Spin
from ..nc_moment import (
    nc_moment,
    nc_moment_time_average,
    oneloop_ratio,
    oneloop_theta_term,
    oracle_nc_moment,
)
from ..nc_phase_space import NCParams
from ..zbw import trajectory_fixed_phi, weighted_trajectory
from .base import Comparison, check

MODULE = "nc-space-moment"

DIRECTIONS = (
    (1.0, 0.0, 0.0),
    (0.0, 1.0, 0.0),
    (0.0, 0.0, 1.0),
    (1.0, 1.0, 0.0),
    (0.5, -0.3, 0.8),
)
TIMES = (np.arange(8) + 0.5) * math.pi / 8


@check(MODULE, "mu_nc = (e / 4 hbar) <alpha x (p x theta)>")
def nc_moment_oracle() -> Comparison:
    expected, actual = [], []
    for spin in Spin:
        for theta in DIRECTIONS:
            for t in TIMES:
                expected.append(nc_moment(spin, theta, t))
                actual.append(oracle_nc_moment(spin, theta, t))
    return Comparison(expected=np.array(expected), actual=np.array(actual), tolerance=1e-6)


@check(MODULE, "mu_nc sampled over the packet")
def nc_moment_monte_carlo() -> Comparison:
    theta, t = DIRECTIONS[4], TIMES[3]
    return Comparison(
        expected=nc_moment(Spin.UP, theta, t),
        actual=oracle_nc_moment(Spin.UP, theta, t, method="monte-carlo", seed=0, samples=200_000),
        tolerance=5e-2,
        informational=True,
        detail="sampling error of 2e5 draws",
    )


@check(MODULE, "the leading correction has the opposite sign to the one-loop theta term")
def oneloop_sign() -> bool:
    theta = [0.0, 0.0, 1.0]
    return bool(nc_moment_time_average(theta)[2] * oneloop_theta_term(theta)[2] < 0.0)


@check(MODULE, "one-loop vs leading-order magnitude")
def oneloop_magnitude() -> Comparison:
    ratio = oneloop_ratio()
    return Comparison(
        expected=ratio["oneloop_z"],
        actual=ratio["leading_z"],
        tolerance=0.0,
        informational=True,
        detail=f"ratio {ratio['ratio']:.6g}; {ratio['units']}",
    )


@check(MODULE, "momentum conservation leaves the trajectory unchanged by theta")
def trajectory_unchanged() -> bool:
    t = np.linspace(0.0, math.pi, 50)
    nc = NCParams(theta=[0.4, -0.1, 0.7])
    plain = (trajectory_fixed_phi(0.2, t), weighted_trajectory(0.2, t, 137.0))
    shifted = (trajectory_fixed_phi(0.2, t, nc=nc), weighted_trajectory(0.2, t, 137.0, nc=nc))
    return all(
        np.array_equal(getattr(a, axis), getattr(b, axis)) for a, b in zip(plain, shifted) for axis in ("x", "y", "z")
    )


@check(MODULE, "mu_nc is linear in theta")
def linear_in_theta() -> Comparison:
    theta, t = np.array(DIRECTIONS[4]), TIMES[2]
    scaled = [nc_moment(Spin.UP, kappa * theta, t) / kappa for kappa in (1.0, 0.5, 0.25)]
    return Comparison(expected=np.array([scaled[0]] * 3), actual=np.array(scaled), tolerance=1e-10)
