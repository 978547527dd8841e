import math

import numpy as np
import pytest

from zbw_lab.constants import NATURAL, SI_CONSTANTS, Dimension, UnitFrame, convert
from zbw_lab.dirac_packet import Spin
from zbw_lab.nc_phase_space import NCParams
from zbw_lab.zbw import (
    amplitude_I,
    amplitude_J,
    magnetic_moment,
    moment_time_average,
    oracle_amplitude_I,
    oracle_amplitude_J,
    trajectory_fixed_phi,
    trajectory_integrated,
    weighted_trajectory,
    zbw_frequency,
)


def test_frequency():
    assert zbw_frequency() == 2.0
    assert zbw_frequency(SI_CONSTANTS) == pytest.approx(1.5527e21, rel=1e-4)


@pytest.mark.parametrize("r_o", [0.5, 1.0, 10.0, 137.0])
def test_amplitude_I_matches_oracle(r_o):
    assert oracle_amplitude_I(r_o).value == pytest.approx(amplitude_I(r_o), rel=1e-8)


def test_amplitude_I_in_si():
    r_o = 100.0 * SI_CONSTANTS.lambda_c
    assert amplitude_I(r_o, SI_CONSTANTS) == pytest.approx(amplitude_I(100.0), rel=1e-12)


def test_amplitude_J_vanishes():
    assert amplitude_J() == 0.0
    assert oracle_amplitude_J(3.0).value == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("r_o", [0.0, -1.0])
def test_invalid_width(r_o):
    with pytest.raises(ValueError):
        amplitude_I(r_o)


@pytest.mark.parametrize("phi0", [0.0, 0.7, -2.0])
def test_circle_law(phi0):
    t = np.linspace(0.0, math.pi, 100)
    point = trajectory_fixed_phi(phi0, t)
    assert np.allclose(point.x**2 + point.y**2, 0.25, rtol=0.0, atol=1e-10)
    assert np.all(point.z == 0.0)


def test_trajectory_period_and_start():
    point = trajectory_fixed_phi(0.0, 0.0)
    assert (point.x, point.y, point.z) == (0.0, 0.5, 0.0)
    after = trajectory_fixed_phi(0.0, math.pi)
    assert after.x == pytest.approx(0.0, abs=1e-15)
    assert after.y == pytest.approx(0.5)


def test_weighted_trajectory_scales_circle():
    t = np.linspace(0.0, 1.0, 5)
    circle = trajectory_fixed_phi(0.4, t)
    weighted = weighted_trajectory(0.4, t, 137.0)
    assert np.allclose(weighted.x, amplitude_I(137.0) * circle.x)


def test_trajectory_rejects_eta():
    with pytest.raises(ValueError):
        trajectory_fixed_phi(0.0, 1.0, nc=NCParams(eta=[0.0, 0.0, 0.1]))


def test_trajectory_ignores_theta():
    t = np.linspace(0.0, 3.0, 30)
    plain = trajectory_fixed_phi(0.3, t)
    shifted = trajectory_fixed_phi(0.3, t, nc=NCParams(theta=[0.2, 0.1, 0.5]))
    assert np.array_equal(plain.x, shifted.x) and np.array_equal(plain.y, shifted.y)


def test_integrated_trajectory_is_zero():
    point = trajectory_integrated(np.linspace(0.0, 1.0, 4))
    assert not np.any(point.x) and not np.any(point.y) and not np.any(point.z)


def test_moment_range_and_spin_flip():
    t = np.linspace(0.0, math.pi, 201)
    up = magnetic_moment(Spin.UP, t)
    down = magnetic_moment(Spin.DOWN, t)
    assert up.shape == (201, 3)
    assert np.all(up[:, :2] == 0.0)
    assert np.array_equal(up, -down)
    assert np.abs(up[:, 2]).max() == pytest.approx(1.0)
    assert up[0, 2] == 0.0


def test_moment_time_average():
    t = np.arange(128) * math.pi / 128
    mean = magnetic_moment(Spin.DOWN, t).mean(axis=0)
    assert mean == pytest.approx(moment_time_average(Spin.DOWN), abs=1e-14)
    assert moment_time_average(Spin.UP)[2] == -0.5


def test_moment_in_si_matches_natural():
    t = 0.37
    t_si = convert(t, Dimension.TIME, UnitFrame.dirac(), UnitFrame.si())
    natural = magnetic_moment(Spin.UP, t)
    si = magnetic_moment(Spin.UP, t_si, SI_CONSTANTS)
    expected = convert(natural, Dimension.MAGNETIC_MOMENT, UnitFrame.dirac(), UnitFrame.si())
    assert si == pytest.approx(expected, rel=1e-10)


def test_static_moment_is_half_compton():
    assert abs(moment_time_average(Spin.UP, NATURAL)[2]) == 0.5 * NATURAL.lambda_c
