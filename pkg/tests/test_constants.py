import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zbw_lab.constants import (
    ALPHA_FSC,
    NATURAL,
    SI_CONSTANTS,
    Dimension,
    FrameKind,
    PhysicalConstants,
    UnitFrame,
    convert,
    dirac_natural,
    load_constants,
)
from zbw_lab.errors import UnitError

FRAMES = [UnitFrame.si(), UnitFrame.dirac(), UnitFrame.graphene(0.0875, 1.0e6)]


def test_compton_wavelength_matches_quoted_scale():
    assert SI_CONSTANTS.lambda_c == pytest.approx(3.8616e-13, rel=1e-4)
    assert abs(SI_CONSTANTS.lambda_c - 3.86e-13) / 3.86e-13 < 1e-3


def test_zbw_frequency_within_five_percent():
    assert abs(SI_CONSTANTS.zbw_frequency - 1.6e21) / 1.6e21 < 0.05


def test_natural_frame_values():
    assert NATURAL.hbar == NATURAL.c == NATURAL.m_e == 1.0
    assert NATURAL.e == -1.0
    assert NATURAL.lambda_c == 1.0
    assert NATURAL.zbw_frequency == 2.0
    assert NATURAL.bohr_radius == pytest.approx(1.0 / ALPHA_FSC)
    assert NATURAL.mass_ratio == pytest.approx(1836.15267, rel=1e-8)


def test_overrides_keep_lambda_c_consistent():
    consts = load_constants(hbar=2.0 * SI_CONSTANTS.hbar)
    assert consts.lambda_c == pytest.approx(2.0 * SI_CONSTANTS.lambda_c)
    assert dirac_natural(consts).lambda_c == 1.0


def test_positive_charge_rejected():
    with pytest.raises(ValueError):
        PhysicalConstants(e=1.0)


def test_graphene_frame_needs_scales():
    with pytest.raises(ValueError):
        UnitFrame(kind=FrameKind.GRAPHENE_NATURAL)


def test_unknown_dimension():
    with pytest.raises(UnitError):
        UnitFrame.dirac().unit("charge_density")


def test_dirac_units():
    frame = UnitFrame.dirac()
    assert frame.unit(Dimension.LENGTH) == SI_CONSTANTS.lambda_c
    assert frame.unit(Dimension.VELOCITY) == SI_CONSTANTS.c
    assert frame.unit(Dimension.MAGNETIC_MOMENT) == pytest.approx(abs(SI_CONSTANTS.e) * SI_CONSTANTS.lambda_c)


def test_graphene_units():
    frame = UnitFrame.graphene(0.1, 1.0e6)
    omega = math.sqrt(2.0) * 1.0e6 / 0.1
    assert frame.unit(Dimension.TIME) == pytest.approx(1.0 / omega)
    assert frame.unit(Dimension.VELOCITY) == pytest.approx(math.sqrt(2.0) * 1.0e6)


@given(
    st.floats(min_value=-1e6, max_value=1e6, allow_nan=False).filter(lambda x: abs(x) > 1e-6),
    st.sampled_from(list(Dimension)),
    st.sampled_from(FRAMES),
    st.sampled_from(FRAMES),
)
def test_conversion_roundtrip(value, dimension, source, target):
    back = convert(convert(value, dimension, source, target), dimension, target, source)
    assert back == pytest.approx(value, rel=1e-12)
