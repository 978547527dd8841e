import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from zbw_lab.dirac_packet import Spin
from zbw_lab.landau import (
    LandauQuery,
    curl_of_linear,
    effective_field,
    effective_vector_potential,
    landau_energy,
    landau_level,
    landau_spectrum,
    level_energy,
    level_index,
    magnetic_radius,
    nc_generalized_momentum,
    nc_landau_level,
    vector_potential_matrix,
)


@st.composite
def landau_queries(draw):
    n = draw(st.integers(min_value=0, max_value=12))
    l = -n + 2 * draw(st.integers(min_value=0, max_value=n))
    magnitude = draw(st.floats(min_value=0.05, max_value=20.0))
    return LandauQuery(
        p3=draw(st.floats(min_value=-3.0, max_value=3.0)),
        B3=draw(st.sampled_from([1.0, -1.0])) * magnitude,
        n=n,
        l=l,
        spin=draw(st.sampled_from(list(Spin))),
        charge=draw(st.sampled_from([1.0, -1.0])),
    )


@given(landau_queries())
def test_state_energy_matches_its_level(q):
    k = level_index(q.n, q.l, q.spin, q.charge * q.B3)
    assert k >= 0
    assert landau_energy(q) == pytest.approx(level_energy(k, q.p3, q.B3, q.charge), rel=1e-12)


def test_electron_zero_level_is_spin_down():
    level = landau_level(0, 0.0, 1.0)
    assert level.degenerate_states == [(n, n, "down") for n in range(7)]
    assert level.branches == ["down"]
    assert level.energy == pytest.approx(1.0)


def test_positron_zero_level_is_spin_up():
    assert landau_level(0, 0.0, 1.0, charge=1.0).branches == ["up"]


def test_excited_levels_hold_both_branches():
    for level in landau_spectrum(4, 0.3, 2.0)[1:]:
        assert level.branches == ["down", "up"]


def test_spectrum_above_rest_energy():
    energies = [level.energy for level in landau_spectrum(5, 0.0, 3.0)]
    assert energies[0] == pytest.approx(1.0)
    assert all(e >= 1.0 for e in energies)
    assert energies == sorted(energies)


def test_level_energy_formula():
    # E^2 = 1 + p3^2 + 2 k |e B|
    assert level_energy(3, 0.5, 2.0) == pytest.approx(np.sqrt(1.0 + 0.25 + 12.0))


def test_nc_levels_do_not_depend_on_charge():
    for k in range(4):
        electron = nc_landau_level(k, 0.2, 0.7, charge=-1.0)
        positron = nc_landau_level(k, 0.2, 0.7, charge=1.0)
        assert electron.energy == pytest.approx(positron.energy, rel=1e-14)
        assert electron.degenerate_states == positron.degenerate_states


def test_effective_field_is_curl_of_potential():
    eta = [0.3, -1.2, 2.0]
    assert curl_of_linear(vector_potential_matrix(eta)) == pytest.approx(effective_field(eta))
    assert effective_field([0.0, 0.0, 2.0]) == pytest.approx(np.array([0.0, 0.0, -2.0]))


def test_potential_matches_matrix():
    eta, r = [0.3, -1.2, 2.0], [1.0, 0.5, -0.7]
    assert vector_potential_matrix(eta) @ np.array(r) == pytest.approx(effective_vector_potential(eta, r))


def test_generalized_momentum_is_charge_free():
    eta, r, p = [0.0, 0.0, 2.0], [1.0, 0.0, 0.0], [0.1, 0.2, 0.3]
    expected = np.array(p) - 0.5 * np.cross(eta, r)
    assert nc_generalized_momentum(p, eta, r) == pytest.approx(expected)
    assert nc_generalized_momentum(p, eta, r, charge=2.0) == pytest.approx(expected)


def test_magnetic_radius():
    assert magnetic_radius(4.0) == pytest.approx(0.5)
    with pytest.raises(ValueError):
        magnetic_radius(0.0)


@pytest.mark.parametrize("n, l", [(2, 1), (1, 3), (0, 2)])
def test_query_rejects_bad_l(n, l):
    with pytest.raises(ValueError):
        LandauQuery(B3=1.0, n=n, l=l, spin=Spin.UP)


def test_query_rejects_negative_n():
    with pytest.raises(ValueError):
        LandauQuery(B3=1.0, n=-1, l=-1, spin=Spin.UP)


def test_level_rejects_bad_input():
    with pytest.raises(ValueError):
        landau_level(-1, 0.0, 1.0)
    with pytest.raises(ValueError):
        landau_level(0, 0.0, 0.0)
