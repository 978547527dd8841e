"""Dirac-sector scenarios: trajectory, moment and noncommutative moment."""

import logging
import math

import numpy as np

from ..config import ScenarioConfig
from ..constants import Dimension
from ..nc_moment import nc_moment_result, oneloop_ratio, oneloop_reference, bracketed_total_z, zeeman_shift
from ..nc_phase_space import NCParams
from ..zbw import (
    amplitude_I,
    amplitude_J,
    magnetic_moment,
    moment_time_average,
    trajectory_fixed_phi,
    weighted_trajectory,
    zbw_frequency,
)
from .base import ColumnSpec, Scenario, ScenarioDefinition, ScenarioOutput

logger = logging.getLogger(__name__)

# one ZBW period in units of hbar/(m_e c^2)
ZBW_PERIOD = math.pi

MOMENT_AXES = ("x", "y", "z")


def _time(name: str = "t") -> ColumnSpec:
    return ColumnSpec(name=name, dimension=Dimension.TIME, description="time")


class ZbwTrajectoryScenario(Scenario):
    """Fixed-azimuth circle and its I-weighted Fourier component."""

    name = "zbw-traj"

    def get_definition(self) -> ScenarioDefinition:
        length = Dimension.LENGTH
        return ScenarioDefinition(
            name=self.name,
            description="Fixed-azimuth zitterbewegung trajectory on a circle of radius lambda_c/2",
            columns=[
                _time(),
                ColumnSpec(name="x", dimension=length, description="unit-weight circle"),
                ColumnSpec(name="y", dimension=length, description="unit-weight circle"),
                ColumnSpec(name="z", dimension=length, description="identically zero"),
                ColumnSpec(name="x_weighted", dimension=length, description="x scaled by I(r_o)"),
                ColumnSpec(name="y_weighted", dimension=length, description="y scaled by I(r_o)"),
            ],
        )

    def execute(self, config: ScenarioConfig) -> ScenarioOutput:
        consts = config.natural_constants()
        t = config.time.grid(ZBW_PERIOD)
        nc = NCParams(theta=config.nc.theta, eta=config.nc.eta)
        phi0, r_o = config.traj.phi0, config.packet.r_o

        circle = trajectory_fixed_phi(phi0, t, consts, nc=nc)
        weighted = weighted_trajectory(phi0, t, r_o, consts, nc=nc)
        rows = [
            [t[i], circle.x[i], circle.y[i], circle.z[i], weighted.x[i], weighted.y[i]]
            for i in range(t.size)
        ]
        return ScenarioOutput(
            rows=rows,
            metadata={
                "zbw_frequency": zbw_frequency(consts),
                "zbw_frequency_si": zbw_frequency(config.constants()),
                "lambda_c_si": config.constants().lambda_c,
                "radius": 0.5 * consts.lambda_c,
                "phi0": phi0,
                "r_o": r_o,
                "amplitude_I": amplitude_I(r_o, consts),
                "amplitude_J": amplitude_J(),
            },
        )


class MomentScenario(Scenario):
    """Commutative zitterbewegung magnetic moment."""

    name = "moment"

    def get_definition(self) -> ScenarioDefinition:
        return ScenarioDefinition(
            name=self.name,
            description="Magnetic moment (e lambda_c / 2)(1 - cos w_zbw t) along z",
            columns=[_time()]
            + [ColumnSpec(name=f"mu_{axis}", dimension=Dimension.MAGNETIC_MOMENT) for axis in MOMENT_AXES],
        )

    def execute(self, config: ScenarioConfig) -> ScenarioOutput:
        consts = config.natural_constants()
        t = config.time.grid(ZBW_PERIOD)
        spin = config.packet.spin
        mu = magnetic_moment(spin, t, consts)
        rows = [[t[i], *mu[i]] for i in range(t.size)]
        return ScenarioOutput(
            rows=rows,
            metadata={"spin": spin.value, "time_average": moment_time_average(spin, consts)},
        )


class NCMomentScenario(Scenario):
    """Commutative moment, its theta correction and the one-loop comparison."""

    name = "nc-moment"

    def get_definition(self) -> ScenarioDefinition:
        moment = Dimension.MAGNETIC_MOMENT
        columns = [_time()]
        for part in ("c", "nc", "total"):
            columns += [ColumnSpec(name=f"mu_{part}_{axis}", dimension=moment) for axis in MOMENT_AXES]
        return ScenarioDefinition(
            name=self.name,
            description="Space-noncommutative correction to the zitterbewegung moment",
            columns=columns,
        )

    def execute(self, config: ScenarioConfig) -> ScenarioOutput:
        consts = config.natural_constants()
        t = config.time.grid(ZBW_PERIOD)
        spin, r_o = config.packet.spin, config.packet.r_o
        theta = config.nc.theta
        if np.any(config.nc.eta != 0.0):
            raise ValueError("nc-moment covers space noncommutativity only; set nc.eta1..3 to 0")

        rows = []
        for ti in t:
            result = nc_moment_result(spin, theta, float(ti), r_o, consts)
            rows.append([ti, *result.commutative, *result.nc_correction, *result.total])

        mid = float(t[len(t) // 2])
        return ScenarioOutput(
            rows=rows,
            metadata={
                "spin": spin.value,
                "theta": theta,
                "r_o": r_o,
                "width_factor": (consts.lambda_c / r_o) ** 2,
                "bracketed_total_z_check": {
                    "t": mid,
                    "bracketed": bracketed_total_z(spin, theta[2], mid, r_o, consts),
                    "computed": float(nc_moment_result(spin, theta, mid, r_o, consts).total[2]),
                },
                "oneloop_reference": {
                    "up": oneloop_reference(theta, "up", consts),
                    "down": oneloop_reference(theta, "down", consts),
                },
                "oneloop_ratio": oneloop_ratio(theta[2] if theta[2] != 0.0 else 1.0, r_o, consts),
                "zeeman_shift": zeeman_shift(theta, config.moment.field, config.moment.form_factor, consts),
            },
        )
