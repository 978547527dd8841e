"""Landau level table scenario."""

import logging

from ..config import ScenarioConfig
from ..constants import Dimension
from ..landau import landau_spectrum, nc_landau_level
from .base import ColumnSpec, Scenario, ScenarioDefinition, ScenarioOutput

logger = logging.getLogger(__name__)


def _states_text(states) -> str:
    return ";".join(f"({n},{l},{spin})" for n, l, spin in states)


class LandauScenario(Scenario):
    """Relativistic Landau levels in a field B_3 or the effective field of eta_3."""

    name = "landau"

    def get_definition(self) -> ScenarioDefinition:
        return ScenarioDefinition(
            name=self.name,
            description="Landau levels k = 0..k_max with their (n, l, s3) states",
            columns=[
                ColumnSpec(name="k", description="level index"),
                ColumnSpec(name="energy", dimension=Dimension.ENERGY),
                ColumnSpec(name="n_states", description="states with n <= max(6, 2k+1)"),
                ColumnSpec(name="branches", description="spin branches present"),
                ColumnSpec(name="states", description="(n,l,spin) list"),
            ],
        )

    def execute(self, config: ScenarioConfig) -> ScenarioOutput:
        consts = config.natural_constants()
        section = config.landau
        if section.eta3 is not None:
            levels = [nc_landau_level(k, section.p3, section.eta3, section.charge, consts) for k in range(section.k_max + 1)]
            flipped = [nc_landau_level(k, section.p3, section.eta3, -section.charge, consts) for k in range(section.k_max + 1)]
            field = section.eta3 / (section.charge * consts.hbar)
            charge_independent = all(a.energy == b.energy for a, b in zip(levels, flipped))
            if not charge_independent:
                logger.warning("Noncommutative Landau spectrum changed under charge conjugation")
        else:
            levels = landau_spectrum(section.k_max, section.p3, section.b3, section.charge, consts)
            field = section.b3
            charge_independent = None

        rows = [
            [level.k, level.energy, len(level.degenerate_states), "+".join(level.branches), _states_text(level.degenerate_states)]
            for level in levels
        ]
        return ScenarioOutput(
            rows=rows,
            metadata={
                "field": field,
                "noncommutative": section.eta3 is not None,
                "charge": section.charge,
                "p3": section.p3,
                "zero_level_branches": levels[0].branches,
                "charge_independent": charge_independent,
            },
        )
