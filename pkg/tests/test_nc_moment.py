import math

import numpy as np
import pytest

from zbw_lab.constants import ALPHA_FSC, NATURAL
from zbw_lab.dirac_packet import Spin
from zbw_lab.nc_moment import (
    moment_from_alpha_momentum,
    nc_moment,
    nc_moment_result,
    nc_moment_time_average,
    oneloop_ratio,
    oneloop_reference,
    oneloop_theta_term,
    oracle_nc_moment,
    bracketed_total_z,
    zeeman_shift,
)

DIRECTIONS = [
    (1.0, 0.0, 0.0),
    (0.0, 1.0, 0.0),
    (0.0, 0.0, 1.0),
    (1.0, 1.0, 0.0),
    (0.5, -0.3, 0.8),
]


@pytest.mark.parametrize("spin", list(Spin))
@pytest.mark.parametrize("theta", DIRECTIONS)
@pytest.mark.parametrize("t", [0.3, 1.7])
def test_closed_form_matches_quadrature(spin, theta, t):
    expected = nc_moment(spin, theta, t)
    actual = oracle_nc_moment(spin, theta, t)
    assert np.max(np.abs(actual - expected)) <= 1e-6 * np.max(np.abs(expected))


def test_closed_form_matches_sampling():
    theta, t = DIRECTIONS[4], 1.1
    expected = nc_moment(Spin.DOWN, theta, t)
    actual = oracle_nc_moment(Spin.DOWN, theta, t, method="monte-carlo", seed=5, samples=400_000)
    assert np.max(np.abs(actual - expected)) <= 1e-1 * np.max(np.abs(expected))


def test_unknown_oracle_method():
    with pytest.raises(ValueError):
        oracle_nc_moment(Spin.UP, DIRECTIONS[0], 1.0, method="simpson")


def test_xy_components_for_spin_up():
    # theta along x at w_zbw t = pi/2: y = +(e alpha^2 / 2 lambda_c)(theta_1 / 2)
    theta1 = 0.8
    mu = nc_moment(Spin.UP, [theta1, 0.0, 0.0], math.pi / 4)
    coefficient = NATURAL.e * ALPHA_FSC**2 / 2.0
    assert mu[1] == pytest.approx(coefficient * 0.5 * theta1, rel=1e-12)
    assert mu[0] == pytest.approx(-coefficient * theta1, rel=1e-12)
    assert mu[2] == 0.0


def test_spin_flip_reverses_sine_terms():
    theta = [0.2, 0.7, 0.0]
    up = nc_moment(Spin.UP, theta, math.pi / 4)
    down = nc_moment(Spin.DOWN, theta, math.pi / 4)
    constant = nc_moment_time_average(theta)
    assert up + down == pytest.approx(2.0 * constant, rel=1e-12)


def test_linear_in_theta():
    theta = np.array([0.5, -0.3, 0.8])
    reference = nc_moment(Spin.UP, theta, 0.7)
    for kappa in (0.5, 0.25):
        assert nc_moment(Spin.UP, kappa * theta, 0.7) / kappa == pytest.approx(reference, rel=1e-10)


def test_vanishes_without_theta():
    assert not np.any(nc_moment(Spin.UP, [0.0, 0.0, 0.0], 1.3))


def test_moment_from_table():
    matrix = np.diag([1.0, 2.0, 3.0])
    mu = moment_from_alpha_momentum(matrix, [0.0, 0.0, 1.0], charge=-1.0)
    # (e / 4)(theta_j M_j3 - theta_3 tr M) = -(3 - 6) / 4
    assert mu == pytest.approx(np.array([0.0, 0.0, 0.75]))


def test_result_split():
    result = nc_moment_result(Spin.UP, [0.0, 0.0, 2.0], 1.0)
    assert result.total == pytest.approx(result.commutative + result.nc_correction)


def test_bracketed_total_z_matches_sum():
    theta3, t, r_o = 40.0, 0.6, 137.0
    result = nc_moment_result(Spin.UP, [0.0, 0.0, theta3], t, r_o)
    assert bracketed_total_z(Spin.UP, theta3, t, r_o) == pytest.approx(result.total[2], rel=1e-12)


def test_time_average_opposes_oneloop():
    theta = [0.0, 0.0, 1.0]
    assert nc_moment_time_average(theta)[2] > 0.0
    assert oneloop_theta_term(theta)[2] < 0.0


def test_oneloop_reference_g_factor():
    reference = oneloop_reference([0.0, 0.0, 0.0], Spin.UP)
    assert reference[2] == pytest.approx(-0.5 * (1.0 + ALPHA_FSC / (2.0 * math.pi)))


def test_oneloop_ratio_bookkeeping():
    ratio = oneloop_ratio(1.0)
    assert ratio["opposite_sign"]
    assert ratio["ratio"] == pytest.approx(ratio["leading_z"] / ratio["oneloop_z"])
    assert ratio["ratio"] < 0.0
    assert "m_e c" in ratio["units"]


def test_zeeman_shift():
    theta, field = [0.0, 0.0, 1.0], [0.0, 0.0, 2.0]
    shift = zeeman_shift(theta, field, form_factor=1.0)
    prefactor = NATURAL.e * ALPHA_FSC * NATURAL.gamma_euler / (6.0 * math.pi)
    assert shift == pytest.approx(prefactor * (1.0 - NATURAL.mass_ratio) * 2.0)
    assert zeeman_shift(theta, [1.0, 0.0, 0.0]) == 0.0


def test_invalid_theta_shape():
    with pytest.raises(ValueError):
        nc_moment(Spin.UP, [1.0, 0.0], 0.5)
