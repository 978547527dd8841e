import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from zbw_lab.nc_phase_space import (
    NCParams,
    PhasePoint,
    bopp_matrix,
    bopp_roundtrip_residual,
    bopp_shift,
    build_symplectic,
    canonical_symplectic,
    dual_matrix,
    nc_hamiltonian,
    closed_form_brackets,
    verify_brackets,
)

small = st.floats(min_value=-0.5, max_value=0.5, allow_nan=False)
vectors = st.lists(small, min_size=3, max_size=3)


def test_dual_matrix_antisymmetric():
    m = dual_matrix([1.0, 2.0, 3.0])
    assert np.array_equal(m, -m.T)
    assert m[0, 1] == 3.0 and m[1, 2] == 1.0 and m[2, 0] == 2.0


def test_params_validation_and_scenario():
    assert NCParams().scenario == "commutative"
    assert NCParams(theta=[0, 0, 1]).scenario == "space"
    assert NCParams(eta=[0, 1, 0]).scenario == "momentum"
    assert NCParams(theta=[1, 0, 0], eta=[0, 1, 0]).scenario == "mixed"
    with pytest.raises(ValueError):
        NCParams(theta=[1.0, 2.0])
    with pytest.raises(ValueError):
        NCParams(eta=[np.inf, 0.0, 0.0])


def test_space_shift_example():
    point = PhasePoint(x=np.zeros(3), p=np.array([2.0, 0.0, 0.0]))
    shifted = bopp_shift(point, NCParams(theta=[0.0, 0.0, 0.3]))
    assert shifted.x == pytest.approx(np.array([0.0, 0.3, 0.0]))
    assert np.array_equal(shifted.p, point.p)


def test_momentum_shift_is_cross_product():
    eta = np.array([0.1, -0.2, 0.4])
    x = np.array([1.0, 0.5, -0.3])
    shifted = bopp_shift(PhasePoint(x=x, p=np.zeros(3)), NCParams(eta=eta))
    assert shifted.p == pytest.approx(np.cross(x, eta) / 2.0)


def test_shift_matches_matrix():
    nc = NCParams(theta=[0.1, 0.2, 0.3], eta=[-0.3, 0.2, 0.05])
    point = PhasePoint(x=np.array([0.4, -1.0, 2.0]), p=np.array([1.5, 0.2, -0.7]))
    assert bopp_shift(point, nc).as_vector() == pytest.approx(bopp_matrix(nc) @ point.as_vector())


@given(vectors, vectors)
def test_bracket_families(theta, eta):
    nc = NCParams(theta=theta, eta=eta)
    computed = verify_brackets(nc)
    expected = closed_form_brackets(nc)
    assert computed.max_deviation(expected) <= 1e-14


def test_brackets_with_hbar():
    nc = NCParams(theta=[0.0, 0.0, 0.2], eta=[0.0, 0.0, 0.5])
    table = verify_brackets(nc, hbar=2.0)
    assert table.xp[0, 0] == pytest.approx(2.0j * (1.0 + 0.2 * 0.5 / 16.0))
    assert table.xx[0, 1] == pytest.approx(0.2j)
    assert table.pp[1, 0] == pytest.approx(-0.5j)


def test_commutative_brackets_are_canonical():
    table = verify_brackets(NCParams())
    assert np.array_equal(table.xp, 1j * np.eye(3))
    assert not np.any(table.xx) and not np.any(table.pp)


def test_symplectic_structure():
    nc = NCParams(theta=[0.3, -0.1, 0.2], eta=[0.05, 0.4, -0.2])
    alpha = build_symplectic(nc).alpha_matrix
    assert np.allclose(alpha, -alpha.T)
    table = verify_brackets(nc)
    assert np.allclose(alpha[:3, 3:], (table.xp / 1j).real)
    assert np.allclose(build_symplectic(NCParams()).alpha_matrix, canonical_symplectic())


@given(vectors, vectors)
def test_roundtrip_residual_is_quadratic(theta, eta):
    nc = NCParams(theta=theta, eta=eta)
    point = PhasePoint(x=np.array([0.3, -0.8, 1.1]), p=np.array([-0.4, 0.9, 0.2]))
    full = bopp_roundtrip_residual(point, nc)
    half = bopp_roundtrip_residual(point, nc.scaled(0.5))
    if full > 1e-8:
        assert full / half == pytest.approx(4.0, rel=1e-6)


def test_space_only_roundtrip_closes():
    point = PhasePoint(x=np.array([1.0, 2.0, 3.0]), p=np.array([0.5, -0.5, 0.1]))
    assert bopp_roundtrip_residual(point, NCParams(theta=[0.1, 0.2, 0.3])) == pytest.approx(0.0, abs=1e-15)


def test_nc_hamiltonian_free_particle():
    nc = NCParams(eta=[0.0, 0.0, 0.6])

    def kinetic(point: PhasePoint) -> float:
        return 0.5 * float(point.p @ point.p)

    h = nc_hamiltonian(kinetic, nc)
    point = PhasePoint(x=np.array([1.0, 0.0, 0.0]), p=np.array([0.0, 0.0, 0.0]))
    # p_2 = -eta_3 x_1 / 2
    assert h(point) == pytest.approx(0.5 * 0.3**2)
