"""Checks for the constants and unit frames."""

import numpy as np

from ..constants import NATURAL, SI_CONSTANTS, Dimension, UnitFrame, convert
from ..dirac_packet import Spin
from ..zbw import magnetic_moment
from .base import Comparison, check

MODULE = "constants-units"

FRAMES = (UnitFrame.si(), UnitFrame.dirac(), UnitFrame.graphene(0.087, 1.0e6))


@check(MODULE, "lambda_c = hbar/(m_e c) ~ 3.86e-13 m")
def compton_wavelength() -> Comparison:
    return Comparison(expected=3.86e-13, actual=SI_CONSTANTS.lambda_c, tolerance=1e-3)


@check(MODULE, "w_zbw = 2 m_e c^2 / hbar ~ 1.6e21 1/s")
def zbw_frequency_si() -> Comparison:
    return Comparison(expected=1.6e21, actual=SI_CONSTANTS.zbw_frequency, tolerance=5e-2)


@check(MODULE, "frame conversion is invertible")
def frame_roundtrip() -> Comparison:
    values = []
    for dimension in Dimension:
        for source in FRAMES:
            for target in FRAMES:
                there = convert(1.25, dimension, source, target)
                values.append(convert(there, dimension, target, source))
    return Comparison(expected=np.full(len(values), 1.25), actual=np.array(values), tolerance=1e-12)


@check(MODULE, "natural-unit closed form equals the SI closed form after conversion")
def natural_matches_si() -> Comparison:
    t_natural = np.linspace(0.1, 3.0, 16)
    dirac, si = UnitFrame.dirac(), UnitFrame.si()
    t_si = convert(t_natural, Dimension.TIME, dirac, si)
    natural = magnetic_moment(Spin.UP, t_natural, NATURAL)
    return Comparison(
        expected=magnetic_moment(Spin.UP, t_si, SI_CONSTANTS),
        actual=convert(natural, Dimension.MAGNETIC_MOMENT, dirac, si),
        tolerance=1e-10,
    )
