"""
Scenario configuration.

Documents are flat ``key = value`` lines with ``#`` comments and dotted
section prefixes (``graphene.ell = 1e-3``), read with python-dotenv's parser,
or YAML mappings flattened to the same dotted keys. Every key is validated by
the pydantic models below; unknown keys are rejected.
"""

import io
import logging
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Tuple

import numpy as np
import yaml
from dotenv.parser import parse_stream
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from .constants import ALPHA_FSC, PhysicalConstants, UnitFrame, dirac_natural, load_constants
from .dirac_packet import Spin
from .errors import ConfigError
from .graphene import GrapheneConfig, resolve_scales

logger = logging.getLogger(__name__)

BOHR_RADIUS_NATURAL = 1.0 / ALPHA_FSC


class ScenarioName(str, Enum):
    ZBW_TRAJ = "zbw-traj"
    MOMENT = "moment"
    NC_MOMENT = "nc-moment"
    LANDAU = "landau"
    GRAPHENE_TRAJ = "graphene-traj"
    VERIFY = "verify"


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class ConstSection(_Section):
    hbar: Optional[float] = Field(default=None, gt=0)
    c: Optional[float] = Field(default=None, gt=0)
    m_e: Optional[float] = Field(default=None, gt=0)
    v_f: Optional[float] = Field(default=None, gt=0)


class TimeSection(_Section):
    """Sampling grid in the scenario frame's natural time unit."""

    start: float = 0.0
    end: Optional[float] = None
    samples: int = Field(default=101, ge=1)

    @model_validator(mode="after")
    def _check_order(self) -> "TimeSection":
        if self.end is not None and self.end < self.start:
            raise ValueError(f"time.end ({self.end}) must not precede time.start ({self.start})")
        return self

    def grid(self, default_end: float) -> np.ndarray:
        end = default_end if self.end is None else self.end
        return np.linspace(self.start, max(end, self.start), self.samples)


class PacketSection(_Section):
    """Packet width in reduced Compton wavelengths (Bohr radius by default)."""

    r_o: float = Field(default=BOHR_RADIUS_NATURAL, gt=0)
    spin: Spin = Spin.UP


class TrajSection(_Section):
    phi0: float = 0.0


class NCSection(_Section):
    """theta in lambda_c^2, eta in (m_e c)^2."""

    theta1: float = 0.0
    theta2: float = 0.0
    theta3: float = 0.0
    eta1: float = 0.0
    eta2: float = 0.0
    eta3: float = 0.0

    @property
    def theta(self) -> np.ndarray:
        return np.array([self.theta1, self.theta2, self.theta3])

    @property
    def eta(self) -> np.ndarray:
        return np.array([self.eta1, self.eta2, self.eta3])


class MomentSection(_Section):
    """Zeeman evaluator inputs; the field is in DiracNatural units."""

    form_factor: float = 1.0
    b1: float = 0.0
    b2: float = 0.0
    b3: float = 1.0

    @property
    def field(self) -> np.ndarray:
        return np.array([self.b1, self.b2, self.b3])


class LandauSection(_Section):
    """Landau table inputs in DiracNatural units; charge in units of |e|."""

    k_max: int = Field(default=3, ge=0)
    p3: float = 0.0
    b3: Optional[float] = None
    eta3: Optional[float] = None
    charge: float = -1.0

    @model_validator(mode="after")
    def _check_field(self) -> "LandauSection":
        if self.charge == 0.0:
            raise ValueError("landau.charge must be nonzero")
        if self.b3 == 0.0 or self.eta3 == 0.0:
            raise ValueError("landau field must be nonzero")
        if self.b3 is not None and self.eta3 is not None:
            raise ValueError("set landau.b3 or landau.eta3, not both")
        return self


# keys that must be present for a scenario, any one of each group
REQUIRED_KEYS: Dict[ScenarioName, List[Tuple[str, ...]]] = {
    ScenarioName.NC_MOMENT: [("nc.theta1", "nc.theta2", "nc.theta3")],
    ScenarioName.LANDAU: [("landau.b3", "landau.eta3")],
}


class ScenarioConfig(BaseModel):
    """A validated scenario run."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    scenario: ScenarioName = ScenarioName.VERIFY
    seed: int = 0
    frame: Literal["natural", "SI"] = "natural"
    output_dir: Path = Path("output")
    parameters: Dict[str, Any] = Field(default_factory=dict)

    const: ConstSection = Field(default_factory=ConstSection)
    time: TimeSection = Field(default_factory=TimeSection)
    packet: PacketSection = Field(default_factory=PacketSection)
    traj: TrajSection = Field(default_factory=TrajSection)
    nc: NCSection = Field(default_factory=NCSection)
    moment: MomentSection = Field(default_factory=MomentSection)
    landau: LandauSection = Field(default_factory=LandauSection)
    graphene: GrapheneConfig = Field(default_factory=GrapheneConfig)

    @property
    def time_grid(self) -> Tuple[float, Optional[float], int]:
        return self.time.start, self.time.end, self.time.samples

    def constants(self) -> PhysicalConstants:
        """SI constants with the document's overrides."""
        return load_constants(hbar=self.const.hbar, c=self.const.c, m_e=self.const.m_e, v_f=self.const.v_f)

    def natural_constants(self) -> PhysicalConstants:
        return dirac_natural(self.constants())

    def unit_frame(self, graphene: bool = False) -> UnitFrame:
        if self.frame == "SI":
            return UnitFrame.si()
        if graphene:
            return resolve_scales(self.graphene, self.constants()).frame
        return UnitFrame.dirac()


SECTIONS = {"const", "time", "packet", "traj", "nc", "moment", "landau", "graphene"}
TOP_LEVEL = {"scenario", "seed", "frame", "output_dir"}


def _flat_bindings(text: str) -> Dict[str, Tuple[str, Optional[int]]]:
    entries: Dict[str, Tuple[str, Optional[int]]] = {}
    for binding in parse_stream(io.StringIO(text)):
        # blank lines are folded into the binding that follows them
        original = binding.original.string
        leading = original[: len(original) - len(original.lstrip())]
        line = binding.original.line + leading.count("\n")
        if binding.error:
            raise ConfigError(f"cannot parse {binding.original.string.strip()!r}", line=line)
        if binding.key is None:
            continue
        if binding.value is None:
            raise ConfigError(f"key {binding.key!r} has no value", line=line)
        if binding.key in entries:
            raise ConfigError(f"duplicate key {binding.key!r}", line=line)
        entries[binding.key] = (binding.value, line)
    return entries


def _yaml_bindings(text: str) -> Dict[str, Tuple[Any, Optional[int]]]:
    try:
        document = yaml.safe_load(text) or {}
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        raise ConfigError(f"invalid YAML: {e}", line=mark.line + 1 if mark else None) from e
    if not isinstance(document, dict):
        raise ConfigError("YAML configuration must be a mapping")

    entries: Dict[str, Tuple[Any, Optional[int]]] = {}
    for key, value in document.items():
        if isinstance(value, dict):
            for sub_key, sub_value in value.items():
                entries[f"{key}.{sub_key}"] = (sub_value, None)
        else:
            entries[str(key)] = (value, None)
    return entries


def _nest(entries: Dict[str, Tuple[Any, Optional[int]]]) -> Dict[str, Any]:
    nested: Dict[str, Any] = {}
    for key, (value, line) in entries.items():
        if key in TOP_LEVEL:
            nested[key] = value
            continue
        section, _, name = key.partition(".")
        if section not in SECTIONS or not name or "." in name:
            raise ConfigError(f"unknown key {key!r}", line=line)
        nested.setdefault(section, {})[name] = value
    nested["parameters"] = {key: value for key, (value, _) in entries.items() if key not in TOP_LEVEL}
    return nested


def _line_for(loc: Tuple[Any, ...], entries: Dict[str, Tuple[Any, Optional[int]]]) -> Optional[int]:
    dotted = ".".join(str(part) for part in loc)
    if dotted in entries:
        return entries[dotted][1]
    prefix = f"{dotted}." if dotted else ""
    lines = [line for key, (_, line) in entries.items() if key.startswith(prefix) and line is not None]
    return min(lines) if lines else None


def parse_config(text: str, scenario: Optional[str] = None, fmt: str = "flat") -> ScenarioConfig:
    """Parse and validate a configuration document.

    Args:
        text: Document text
        scenario: Scenario name; overrides a ``scenario`` key in the document
        fmt: ``flat`` for key = value lines or ``yaml``

    Returns:
        Validated configuration with defaults filled in

    Raises:
        ConfigError: On syntax errors, unknown or missing keys and invalid values
    """
    if fmt == "flat":
        entries = _flat_bindings(text)
    elif fmt == "yaml":
        entries = _yaml_bindings(text)
    else:
        raise ConfigError(f"unknown configuration format {fmt!r}")

    nested = _nest(entries)
    if scenario is not None:
        nested["scenario"] = scenario

    try:
        config = ScenarioConfig(**nested)
    except ValidationError as e:
        first = e.errors()[0]
        loc = tuple(part for part in first["loc"] if not isinstance(part, int))
        key = ".".join(str(part) for part in loc) or "document"
        raise ConfigError(f"{key}: {first['msg']}", line=_line_for(loc, entries)) from e

    for group in REQUIRED_KEYS.get(config.scenario, []):
        if not any(key in entries for key in group):
            raise ConfigError(f"scenario {config.scenario.value!r} requires one of {', '.join(group)}")

    try:
        resolve_scales(config.graphene, config.constants())
    except ValueError as e:
        raise ConfigError(f"graphene: {e}", line=_line_for(("graphene",), entries)) from e

    logger.debug(f"Parsed {len(entries)} configuration keys for scenario {config.scenario.value}")
    return config


def load_config(path: Path, scenario: Optional[str] = None) -> ScenarioConfig:
    """Read a configuration file; ``.yaml``/``.yml`` files are parsed as YAML."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read {path}: {e}") from e
    fmt = "yaml" if path.suffix.lower() in (".yaml", ".yml") else "flat"
    return parse_config(text, scenario=scenario, fmt=fmt)


def default_config(scenario: str = ScenarioName.VERIFY.value) -> ScenarioConfig:
    return parse_config("", scenario=scenario)
