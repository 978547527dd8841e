"""Scenario registry with every built-in scenario registered."""

from .base import (
    ColumnSpec,
    Scenario,
    ScenarioDefinition,
    ScenarioOutput,
    ScenarioRegistry,
    ScenarioResult,
    registry,
    run_scenario,
)
from .graphene import GrapheneTrajectoryScenario
from .landau import LandauScenario
from .zbw import MomentScenario, NCMomentScenario, ZbwTrajectoryScenario

registry.register_class(ZbwTrajectoryScenario)
registry.register_class(MomentScenario)
registry.register_class(NCMomentScenario)
registry.register_class(LandauScenario)
registry.register_class(GrapheneTrajectoryScenario)

__all__ = [
    "ColumnSpec",
    "GrapheneTrajectoryScenario",
    "LandauScenario",
    "MomentScenario",
    "NCMomentScenario",
    "Scenario",
    "ScenarioDefinition",
    "ScenarioOutput",
    "ScenarioRegistry",
    "ScenarioResult",
    "ZbwTrajectoryScenario",
    "registry",
    "run_scenario",
]
