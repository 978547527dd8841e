import logging
import math

import numpy as np
import pytest
from pydantic import ValidationError

from zbw_lab.dirac_packet import (
    PacketSpec,
    Spin,
    alpha_momentum_matrix,
    build_packet,
    dirac_residual,
    expectation_grad_cross_alpha,
    expectation_velocity,
    spinor_norm,
)


def test_spin_sign():
    assert Spin.UP.sign == 1
    assert Spin.DOWN.sign == -1
    assert Spin("down") is Spin.DOWN


def test_spec_validation():
    with pytest.raises(ValidationError):
        PacketSpec(r_o=0.0)
    spec = PacketSpec(r_o=137.0)
    assert spec.p_o == pytest.approx(2.0 / 137.0)
    assert spec.nonrelativistic_ok


def test_wide_packet_warns_when_relativistic(caplog):
    with caplog.at_level(logging.WARNING, logger="zbw_lab.dirac_packet"):
        build_packet(PacketSpec(r_o=2.0))
    assert "not small" in caplog.text


def test_packet_is_immutable(packet):
    with pytest.raises(ValueError):
        packet.plus_grad[0, 2] = 1.0


def test_normalized_at_t0(packet):
    assert spinor_norm(packet, 0.0) == pytest.approx(1.0, rel=1e-12)


def test_lower_components_at_t0_vanish(packet):
    psi = packet.wavefunction(np.array([[0.05, -0.02, 0.1]]), 0.0)
    assert np.allclose(psi[0, 2:], 0.0)


def test_residual_equals_dropped_term(packet):
    rng = np.random.default_rng(11)
    for p in rng.normal(0.0, packet.p_o / 2.0, size=(10, 3)):
        sample = dirac_residual(packet, p, 1.3)
        assert np.allclose(sample.residual, sample.dropped, rtol=1e-12, atol=1e-14 * np.abs(sample.dropped).max())


def test_residual_vanishes_at_t0(packet):
    sample = dirac_residual(packet, np.array([0.1, 0.2, -0.1]), 0.0)
    assert np.allclose(sample.residual, 0.0)


def test_gradient_matches_finite_difference(packet):
    p = np.array([0.03, -0.08, 0.05])
    h = 1e-6
    analytic = packet.gradient(p, 0.4)
    for i in range(3):
        step = np.zeros(3)
        step[i] = h
        numeric = (packet.wavefunction(p + step, 0.4) - packet.wavefunction(p - step, 0.4)) / (2 * h)
        assert np.allclose(analytic[i], numeric, rtol=1e-6, atol=1e-8 * np.abs(analytic).max())


@pytest.mark.parametrize("t", [0.2, 1.0, 2.9])
def test_full_domain_velocity_vanishes(packet, t):
    assert np.allclose(expectation_velocity(packet, t), 0.0, atol=1e-12)


@pytest.mark.parametrize("t", [0.3, 0.8, 2.0])
def test_moment_oracle_closed_form(packet, t):
    moment = expectation_grad_cross_alpha(packet, t)
    expected_z = packet.spin.sign * 0.5 * packet.charge * (1.0 - math.cos(2.0 * t))
    assert moment == pytest.approx(np.array([0.0, 0.0, expected_z]), abs=1e-12)


def test_alpha_momentum_table(packet):
    t = 0.6
    table = alpha_momentum_matrix(packet, t)
    scale = 0.5 * packet.p_o**2 * math.sin(t)
    s = packet.spin.sign
    expected = scale * np.array(
        [
            [math.sin(t), s * math.cos(t), 0.0],
            [-s * math.cos(t), math.sin(t), 0.0],
            [0.0, 0.0, math.sin(t)],
        ]
    )
    assert np.allclose(table, expected, rtol=1e-10, atol=1e-14)
