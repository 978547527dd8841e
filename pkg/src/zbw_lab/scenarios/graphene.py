"""Graphene trajectory scenario in the effective field B_eta."""

import logging
import math

from ..config import ScenarioConfig
from ..constants import Dimension
from ..graphene import (
    amplitude_estimates,
    analytic_overlap_00,
    big_omega,
    overlap,
    position_series,
    uncorrected_overlap_00,
    overlap_ratio_01_closed_form,
    resolve_scales,
    series_coefficients,
    velocity_series,
)
from .base import ColumnSpec, Scenario, ScenarioDefinition, ScenarioOutput

logger = logging.getLogger(__name__)

# two periods of the zero-level motion, in units of 1/Omega
DEFAULT_END = 4.0 * math.pi


class GrapheneTrajectoryScenario(Scenario):
    """Position and velocity series of the Gaussian packet, truncated at graphene.m_max."""

    name = "graphene-traj"

    def get_definition(self) -> ScenarioDefinition:
        return ScenarioDefinition(
            name=self.name,
            description="Zitterbewegung in graphene from the Landau-level series",
            columns=[
                ColumnSpec(name="t", dimension=Dimension.TIME),
                ColumnSpec(name="r1", dimension=Dimension.LENGTH),
                ColumnSpec(name="r2", dimension=Dimension.LENGTH),
                ColumnSpec(name="v1", dimension=Dimension.VELOCITY),
                ColumnSpec(name="v2", dimension=Dimension.VELOCITY),
            ],
            graphene_frame=True,
            derived_units="omega, L, b_eta and eta3 in SI; coefficients, overlaps and ratios in units of L and Omega",
        )

    def execute(self, config: ScenarioConfig) -> ScenarioOutput:
        consts = config.constants()
        graphene = config.graphene
        scales = resolve_scales(graphene, consts)
        t = config.time.grid(DEFAULT_END)

        coefficients = series_coefficients(graphene, consts)
        position = position_series(graphene, t, consts=consts, coefficients=coefficients)
        velocity = velocity_series(graphene, t, consts=consts, coefficients=coefficients)
        rows = [
            [t[i], position.first[i], position.second[i], velocity.first[i], velocity.second[i]]
            for i in range(t.size)
        ]

        v00 = overlap(0, 0, graphene, consts)
        v01 = overlap(0, 1, graphene, consts)
        uncorrected = uncorrected_overlap_00(graphene, consts)
        logger.info(f"graphene series summed to m={coefficients.m_max}, position tail {position.tail:.3e} L")
        return ScenarioOutput(
            rows=rows,
            metadata={
                "omega": big_omega(graphene, consts),
                "L": scales.L,
                "ell_over_L": scales.ell,
                "k0_L": scales.k0,
                "g": scales.g,
                "b_eta": scales.b_eta,
                "eta3": scales.eta3,
                "m_max": coefficients.m_max,
                "coefficients": coefficients.rows(),
                "truncation": {"position_tail": position.tail, "velocity_tail": velocity.tail},
                "overlaps": {
                    "V00": v00,
                    "V01": v01,
                    "V00_completed_square": analytic_overlap_00(graphene, consts),
                    "V00_uncorrected": uncorrected,
                    "V00_uncorrected_relative_deviation": abs(uncorrected - v00) / abs(v00) if v00 else math.nan,
                    "V01_over_V00": v01 / v00 if v00 else math.nan,
                    "V01_over_V00_closed_form": overlap_ratio_01_closed_form(graphene, consts),
                },
                "amplitude_estimates": amplitude_estimates(graphene, consts),
            },
        )
