"""Checks for the commutative zitterbewegung closed forms."""

import math

import numpy as np

from ..constants import NATURAL
from ..dirac_packet import PacketSpec, Spin, build_packet, expectation_grad_cross_alpha
from ..zbw import (
    amplitude_I,
    magnetic_moment,
    moment_time_average,
    oracle_amplitude_I,
    oracle_amplitude_J,
    trajectory_fixed_phi,
)
from .base import Comparison, check

MODULE = "zbw-commutative"

WIDTHS = (0.5, 1.0, 10.0, 137.0)


@check(MODULE, "I = -(8 pi)^(-1/2) lambda_c / r_o")
def amplitude_i_oracle() -> Comparison:
    return Comparison(
        expected=[amplitude_I(r) for r in WIDTHS],
        actual=[oracle_amplitude_I(r).value for r in WIDTHS],
        tolerance=1e-8,
    )


@check(MODULE, "J = 0: the polar integral of sin(2 theta) vanishes")
def amplitude_j_oracle() -> Comparison:
    return Comparison(expected=0.0, actual=oracle_amplitude_J(1.0).value, tolerance=1e-12, mode="absolute")


@check(MODULE, "a circle of radius lambda_c / 2")
def circle_law() -> Comparison:
    t = np.linspace(0.0, math.pi, 100)
    point = trajectory_fixed_phi(0.3, t)
    return Comparison(
        expected=np.full(t.size, 0.25 * NATURAL.lambda_c**2),
        actual=point.x**2 + point.y**2,
        tolerance=1e-10,
        mode="absolute",
    )


@check(MODULE, "mu_z oscillates between 0 and |e| lambda_c, antisymmetric under spin flip")
def moment_range() -> bool:
    t = np.linspace(0.0, math.pi, 201)
    up = magnetic_moment(Spin.UP, t)
    down = magnetic_moment(Spin.DOWN, t)
    magnitude = np.abs(up[:, 2])
    return (
        bool(np.all(up[:, :2] == 0.0))
        and bool(np.all(up + down == 0.0))
        and math.isclose(magnitude.min(), 0.0, abs_tol=1e-15)
        and math.isclose(magnitude.max(), abs(NATURAL.e) * NATURAL.lambda_c, rel_tol=1e-12)
    )


@check(MODULE, "mu = (i e hbar / 2) <grad_p x alpha>")
def moment_oracle() -> Comparison:
    times = (np.arange(20) + 0.5) * math.pi / 20
    expected, actual = [], []
    for spin in Spin:
        packet = build_packet(PacketSpec(r_o=10.0, spin=spin))
        for t in times:
            expected.append(magnetic_moment(spin, t))
            actual.append(expectation_grad_cross_alpha(packet, t))
    return Comparison(expected=np.array(expected), actual=np.array(actual), tolerance=1e-8)


@check(MODULE, "time-averaged moment e lambda_c / 2")
def moment_average() -> Comparison:
    n = 64
    t = np.arange(n) * math.pi / n
    return Comparison(
        expected=moment_time_average(Spin.UP),
        actual=magnetic_moment(Spin.UP, t).mean(axis=0),
        tolerance=1e-12,
    )
