"""zbw-lab - zitterbewegung in commutative and noncommutative geometry."""

__version__ = "0.1.0"

from .config import ScenarioConfig, load_config, parse_config  # noqa: E402
from .constants import NATURAL, SI_CONSTANTS, PhysicalConstants, UnitFrame, convert  # noqa: E402
from .errors import ComputationError, ConfigError, ConvergenceError, UnitError, ZbwLabError  # noqa: E402
from .scenarios import Scenario, ScenarioRegistry, run_scenario  # noqa: E402
from .verify import VerifyReport, verify  # noqa: E402

__all__ = [
    "ComputationError",
    "ConfigError",
    "ConvergenceError",
    "NATURAL",
    "PhysicalConstants",
    "SI_CONSTANTS",
    "Scenario",
    "ScenarioConfig",
    "ScenarioRegistry",
    "UnitError",
    "UnitFrame",
    "VerifyReport",
    "ZbwLabError",
    "convert",
    "load_config",
    "parse_config",
    "run_scenario",
    "verify",
]
