"""
Physical constants and unit frames.

Dirac-sector code works in the DiracNatural frame (hbar = m_e = c = 1, charge
measured in units of |e|), graphene code in the GrapheneNatural frame (lengths
in the magnetic radius L, times in 1/Omega). Values cross into SI only at the
I/O boundary through :func:`convert`.
"""

import logging
import math
from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .errors import UnitError

logger = logging.getLogger(__name__)

# CODATA 2018
HBAR_SI = 1.054571817e-34
C_SI = 299792458.0
M_E_SI = 9.1093837015e-31
E_SI = -1.602176634e-19
M_P_SI = 1.67262192369e-27
ALPHA_FSC = 7.2973525693e-3
GAMMA_EULER = 0.5772156649015329
V_F_DEFAULT = 1.0e6


class PhysicalConstants(BaseModel):
    """Single source of truth for the constants used by every module.

    Instances are immutable. ``lambda_c`` is always derived from the other
    fields, so overriding ``hbar``, ``c`` or ``m_e`` keeps it consistent.
    """

    model_config = ConfigDict(frozen=True)

    hbar: float = Field(default=HBAR_SI, gt=0)
    c: float = Field(default=C_SI, gt=0)
    m_e: float = Field(default=M_E_SI, gt=0)
    e: float = E_SI
    m_p: float = Field(default=M_P_SI, gt=0)
    alpha_fsc: float = ALPHA_FSC
    gamma_euler: float = GAMMA_EULER
    v_f_default: float = Field(default=V_F_DEFAULT, gt=0)

    @model_validator(mode="after")
    def _check_conventions(self) -> "PhysicalConstants":
        if self.e >= 0:
            raise ValueError(f"electron charge must be negative, got {self.e}")
        if not 7.29e-3 < self.alpha_fsc < 7.30e-3:
            raise ValueError(f"alpha_fsc out of range: {self.alpha_fsc}")
        return self

    @property
    def lambda_c(self) -> float:
        """Reduced Compton wavelength hbar/(m_e c)."""
        return self.hbar / (self.m_e * self.c)

    @property
    def bohr_radius(self) -> float:
        return self.lambda_c / self.alpha_fsc

    @property
    def mass_ratio(self) -> float:
        """m_p / m_e."""
        return self.m_p / self.m_e

    @property
    def zbw_frequency(self) -> float:
        return 2.0 * self.m_e * self.c**2 / self.hbar


def load_constants(
    hbar: Optional[float] = None,
    c: Optional[float] = None,
    m_e: Optional[float] = None,
    v_f: Optional[float] = None,
) -> PhysicalConstants:
    """Return the SI constants, optionally overriding a few of them.

    Args:
        hbar: Reduced Planck constant in J s
        c: Speed of light in m/s
        m_e: Electron mass in kg
        v_f: Default Fermi velocity in m/s

    Returns:
        Validated constants
    """
    overrides = {
        key: value
        for key, value in {"hbar": hbar, "c": c, "m_e": m_e, "v_f_default": v_f}.items()
        if value is not None
    }
    if overrides:
        logger.debug(f"Constant overrides: {overrides}")
    return PhysicalConstants(**overrides)


def dirac_natural(consts: Optional[PhysicalConstants] = None) -> PhysicalConstants:
    """The same constants expressed in the DiracNatural frame."""
    si = consts or load_constants()
    return PhysicalConstants(
        hbar=1.0,
        c=1.0,
        m_e=1.0,
        e=-1.0,
        m_p=si.mass_ratio,
        alpha_fsc=si.alpha_fsc,
        gamma_euler=si.gamma_euler,
        v_f_default=si.v_f_default / si.c,
    )


SI_CONSTANTS = load_constants()
NATURAL = dirac_natural(SI_CONSTANTS)


class Dimension(str, Enum):
    LENGTH = "length"
    TIME = "time"
    MOMENTUM = "momentum"
    ENERGY = "energy"
    FREQUENCY = "frequency"
    MAGNETIC_FIELD = "magnetic_field"
    MAGNETIC_MOMENT = "magnetic_moment"
    VELOCITY = "velocity"


class FrameKind(str, Enum):
    SI = "SI"
    DIRAC_NATURAL = "DiracNatural"
    GRAPHENE_NATURAL = "GrapheneNatural"


class UnitFrame(BaseModel):
    """A system of units.

    GrapheneNatural needs the magnetic radius ``length_scale`` (m) and the
    Fermi velocity ``v_f`` (m/s); its time unit is 1/Omega with
    Omega = sqrt(2) v_f / L.
    """

    model_config = ConfigDict(frozen=True)

    kind: FrameKind
    length_scale: Optional[float] = Field(default=None, gt=0)
    v_f: Optional[float] = Field(default=None, gt=0)

    @model_validator(mode="after")
    def _check_graphene_scales(self) -> "UnitFrame":
        if self.kind == FrameKind.GRAPHENE_NATURAL and (self.length_scale is None or self.v_f is None):
            raise ValueError("GrapheneNatural frame needs length_scale and v_f")
        return self

    @classmethod
    def si(cls) -> "UnitFrame":
        return cls(kind=FrameKind.SI)

    @classmethod
    def dirac(cls) -> "UnitFrame":
        return cls(kind=FrameKind.DIRAC_NATURAL)

    @classmethod
    def graphene(cls, length_scale: float, v_f: float = V_F_DEFAULT) -> "UnitFrame":
        return cls(kind=FrameKind.GRAPHENE_NATURAL, length_scale=length_scale, v_f=v_f)

    def unit(self, dimension: Dimension, consts: Optional[PhysicalConstants] = None) -> float:
        """SI value of one unit of ``dimension`` in this frame.

        Args:
            dimension: Physical dimension
            consts: SI constants (defaults to CODATA)

        Returns:
            Scale factor in SI units

        Raises:
            UnitError: If the dimension is not supported
        """
        try:
            dimension = Dimension(dimension)
        except ValueError:
            raise UnitError(f"Unsupported dimension: {dimension!r}") from None
        k = consts or SI_CONSTANTS
        q = abs(k.e)

        if self.kind == FrameKind.SI:
            return 1.0

        if self.kind == FrameKind.DIRAC_NATURAL:
            length = k.lambda_c
            time = k.hbar / (k.m_e * k.c**2)
            scales = {
                Dimension.LENGTH: length,
                Dimension.TIME: time,
                Dimension.MOMENTUM: k.m_e * k.c,
                Dimension.ENERGY: k.m_e * k.c**2,
                Dimension.FREQUENCY: 1.0 / time,
                Dimension.MAGNETIC_FIELD: k.m_e**2 * k.c**2 / (q * k.hbar),
                Dimension.MAGNETIC_MOMENT: q * length,
                Dimension.VELOCITY: k.c,
            }
        else:
            length = self.length_scale
            omega = math.sqrt(2.0) * self.v_f / length
            scales = {
                Dimension.LENGTH: length,
                Dimension.TIME: 1.0 / omega,
                Dimension.MOMENTUM: k.hbar / length,
                Dimension.ENERGY: k.hbar * omega,
                Dimension.FREQUENCY: omega,
                Dimension.MAGNETIC_FIELD: k.hbar / (q * length**2),
                Dimension.MAGNETIC_MOMENT: q * length,
                Dimension.VELOCITY: length * omega,
            }
        return scales[dimension]


def convert(
    value,
    dimension: Dimension,
    source: UnitFrame,
    target: UnitFrame,
    consts: Optional[PhysicalConstants] = None,
):
    """Rescale ``value`` from one unit frame to another.

    Works on floats and numpy arrays alike.

    Raises:
        UnitError: If the dimension is not supported
    """
    return value * (source.unit(dimension, consts) / target.unit(dimension, consts))
