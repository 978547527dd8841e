"""Base scenario interface and registry."""

import logging
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, List, Optional, Type

from pydantic import BaseModel, Field

from ..config import ScenarioConfig
from ..constants import Dimension, UnitFrame, convert
from ..errors import ComputationError, ConfigError, UnitError
from ..graphene import resolve_scales
from .output import write_csv, write_sidecar

logger = logging.getLogger(__name__)


class ColumnSpec(BaseModel):
    """One CSV column."""
    name: str
    dimension: Optional[Dimension] = None
    description: str = ""


class ScenarioDefinition(BaseModel):
    """Definition of a scenario and its CSV schema."""
    name: str
    description: str
    columns: List[ColumnSpec]
    graphene_frame: bool = False
    # derived metadata is not rescaled by --frame
    derived_units: str = "DiracNatural; keys ending in _si are SI"

    @property
    def header(self) -> List[str]:
        return [column.name for column in self.columns]


class ScenarioOutput(BaseModel):
    """Rows in the scenario's natural frame plus derived quantities."""
    rows: List[List[Any]]
    metadata: Dict[str, Any] = Field(default_factory=dict)


class ScenarioResult(BaseModel):
    """Result from a scenario run."""
    success: bool
    output: Optional[ScenarioOutput] = None
    error: Optional[str] = None
    error_kind: Optional[str] = None
    paths: List[str] = Field(default_factory=list)
    metadata: Dict[str, Any] = Field(default_factory=dict)


class Scenario(ABC):
    """Base class for all scenarios."""

    name: str = ""

    @abstractmethod
    def get_definition(self) -> ScenarioDefinition:
        """Return the scenario definition."""

    @abstractmethod
    def execute(self, config: ScenarioConfig) -> ScenarioOutput:
        """Compute the scenario's rows in its natural frame."""

    def convert_rows(self, rows: List[List[Any]], source: UnitFrame, target: UnitFrame, config: ScenarioConfig) -> List[List[Any]]:
        """Rescale dimensioned columns from ``source`` to ``target``."""
        if source == target:
            return rows
        columns = self.get_definition().columns
        consts = config.constants()
        converted = []
        for row in rows:
            converted.append(
                [
                    convert(value, column.dimension, source, target, consts) if column.dimension is not None else value
                    for column, value in zip(columns, row)
                ]
            )
        return converted


class ScenarioRegistry:
    """Registry for managing available scenarios."""

    def __init__(self):
        self._scenarios: Dict[str, Scenario] = {}

    def register(self, scenario: Scenario, name: Optional[str] = None):
        """Register a scenario."""
        self._scenarios[name or scenario.name] = scenario

    def register_class(self, scenario_class: Type[Scenario], name: Optional[str] = None):
        """Register a scenario class."""
        self.register(scenario_class(), name)

    def get(self, name: str) -> Optional[Scenario]:
        """Get a scenario by name."""
        return self._scenarios.get(name)

    def list(self) -> List[str]:
        """List all available scenario names."""
        return list(self._scenarios.keys())

    def get_definitions(self) -> List[ScenarioDefinition]:
        return [scenario.get_definition() for scenario in self._scenarios.values()]

    def execute(self, name: str, config: ScenarioConfig) -> ScenarioResult:
        """Run a scenario and return its rows in the requested frame."""
        scenario = self.get(name)
        if not scenario:
            return ScenarioResult(success=False, error=f"Scenario '{name}' not found", error_kind="config")

        definition = scenario.get_definition()
        try:
            output = scenario.execute(config)
            if config.frame == "SI":
                source = _natural_frame(config, definition)
                output = ScenarioOutput(
                    rows=scenario.convert_rows(output.rows, source, UnitFrame.si(), config),
                    metadata=output.metadata,
                )
            return ScenarioResult(success=True, output=output, metadata={"scenario": name})
        except (ConfigError, UnitError, ValueError) as e:
            logger.debug(f"Scenario {name} rejected its inputs", exc_info=True)
            return ScenarioResult(success=False, error=str(e), error_kind="config")
        except ComputationError as e:
            return ScenarioResult(success=False, error=str(e), error_kind="computation")
        except Exception as e:
            logger.debug(f"Scenario {name} failed", exc_info=True)
            return ScenarioResult(success=False, error=f"{type(e).__name__}: {e}", error_kind="computation")

    def run(self, config: ScenarioConfig, output_dir: Optional[Path] = None) -> ScenarioResult:
        """Execute the configured scenario and write its CSV and JSON sidecar."""
        name = config.scenario.value
        result = self.execute(name, config)
        if not result.success:
            return result

        directory = Path(output_dir or config.output_dir)
        definition = self.get(name).get_definition()
        try:
            directory.mkdir(parents=True, exist_ok=True)
            csv_path = directory / f"{name}.csv"
            json_path = directory / f"{name}.json"
            write_csv(csv_path, definition.header, result.output.rows)
            write_sidecar(json_path, _sidecar(config, definition, result.output))
        except OSError as e:
            return ScenarioResult(success=False, error=f"cannot write artifacts: {e}", error_kind="io")

        logger.info(f"Wrote {csv_path} and {json_path}")
        return result.model_copy(update={"paths": [str(csv_path), str(json_path)]})


def _natural_frame(config: ScenarioConfig, definition: ScenarioDefinition) -> UnitFrame:
    if definition.graphene_frame:
        return resolve_scales(config.graphene, config.constants()).frame
    return UnitFrame.dirac()


def _sidecar(config: ScenarioConfig, definition: ScenarioDefinition, output: ScenarioOutput) -> Dict[str, Any]:
    from .. import __version__
    from ..quadrature import RNG_ALGORITHM

    consts = config.constants()
    frame = config.unit_frame(graphene=definition.graphene_frame)
    return {
        "scenario": definition.name,
        "version": __version__,
        "seed": config.seed,
        "rng": RNG_ALGORITHM,
        "frame": frame.model_dump(mode="json"),
        "columns": [column.model_dump(mode="json") for column in definition.columns],
        "constants": {**consts.model_dump(mode="json"), "lambda_c": consts.lambda_c},
        "parameters": {key: str(value) for key, value in sorted(config.parameters.items())},
        "time_grid": {"start": config.time.start, "end": config.time.end, "samples": config.time.samples},
        "derived": output.metadata,
        "derived_units": definition.derived_units,
    }


# Global registry instance
registry = ScenarioRegistry()


def run_scenario(config: ScenarioConfig, output_dir: Optional[Path] = None) -> ScenarioResult:
    """Run ``config`` with the global registry."""
    return registry.run(config, output_dir)
