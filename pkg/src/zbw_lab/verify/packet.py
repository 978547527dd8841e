"""Checks for the truncated Dirac packet."""

import numpy as np

from ..dirac_packet import (
    PacketSpec,
    Spin,
    build_packet,
    dirac_residual,
    expectation_grad_cross_alpha,
    expectation_velocity,
    spinor_norm,
)
from .base import Comparison, check

MODULE = "dirac-packet"

R_O = 20.0


def _packet(spin: Spin = Spin.UP):
    return build_packet(PacketSpec(r_o=R_O, spin=spin))


@check(MODULE, "residual of the free Dirac equation is the dropped (p/2mc)^2 term")
def residual_is_dropped_order() -> Comparison:
    packet = _packet()
    rng = np.random.default_rng(0)
    samples = rng.normal(0.0, packet.p_o / 2.0, size=(10, 3))
    pairs = [dirac_residual(packet, p, 0.7) for p in samples]
    return Comparison(
        expected=np.array([pair.dropped for pair in pairs]),
        actual=np.array([pair.residual for pair in pairs]),
        tolerance=1e-12,
    )


@check(MODULE, "full-domain velocity expectation vanishes")
def velocity_vanishes() -> Comparison:
    packet = _packet()
    values = np.array([expectation_velocity(packet, t) for t in (0.3, 1.1, 2.5)])
    return Comparison(expected=np.zeros_like(values), actual=values, tolerance=1e-12, mode="absolute")


@check(MODULE, "packet is normalized at t = 0")
def normalized() -> Comparison:
    return Comparison(expected=1.0, actual=spinor_norm(_packet(), 0.0), tolerance=1e-12)


@check(MODULE, "spin-down packet is the spin-flip image of spin up")
def spin_flip() -> Comparison:
    t = 0.9
    up = expectation_grad_cross_alpha(_packet(Spin.UP), t)
    down = expectation_grad_cross_alpha(_packet(Spin.DOWN), t)
    return Comparison(expected=np.array([up[0], up[1], -up[2]]), actual=down, tolerance=1e-12)
