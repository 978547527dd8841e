import numpy as np
import pytest

from zbw_lab.spinor import (
    ALPHA_STACK,
    GAMMA0,
    LEVI_CIVITA,
    alpha_dot,
    anticommutator,
    commutator,
    dirac_alpha,
    identity,
    pauli,
    sigma_dot,
    spin_state,
    spinor_norm,
)


@pytest.mark.parametrize("i", [1, 2, 3])
@pytest.mark.parametrize("j", [1, 2, 3])
def test_alpha_clifford(i, j):
    expected = 2.0 * identity(4) if i == j else np.zeros((4, 4))
    assert np.array_equal(anticommutator(dirac_alpha(i), dirac_alpha(j)), expected)


@pytest.mark.parametrize("i", [1, 2, 3])
def test_alpha_anticommutes_with_gamma0(i):
    assert np.array_equal(anticommutator(dirac_alpha(i), GAMMA0), np.zeros((4, 4)))


def test_hermitian():
    for matrix in [*ALPHA_STACK, GAMMA0]:
        assert np.array_equal(matrix, matrix.conj().T)


def test_pauli_algebra():
    assert np.array_equal(commutator(pauli(1), pauli(2)), 2j * pauli(3))
    assert np.array_equal(pauli(1) @ pauli(1), identity(2))


@pytest.mark.parametrize("i", [0, 4, -1])
def test_invalid_index(i):
    with pytest.raises(ValueError):
        pauli(i)


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        anticommutator(pauli(1), dirac_alpha(1))
    with pytest.raises(ValueError):
        identity(3)


def test_dot_products():
    p = np.array([0.3, -0.4, 1.2])
    assert np.allclose(sigma_dot(p), 0.3 * pauli(1) - 0.4 * pauli(2) + 1.2 * pauli(3))
    assert np.allclose(alpha_dot(p) @ alpha_dot(p), (p @ p) * identity(4))
    assert np.allclose(alpha_dot(p), 0.3 * dirac_alpha(1) - 0.4 * dirac_alpha(2) + 1.2 * dirac_alpha(3))


def test_alpha_dot_batches():
    momenta = np.array([[1.0, 0.0, 0.0], [0.0, 2.0, -1.0]])
    matrices = alpha_dot(momenta)
    assert matrices.shape == (2, 4, 4)
    assert np.allclose(matrices[1], np.einsum("k,kab->ab", momenta[1], ALPHA_STACK))


def test_levi_civita():
    assert LEVI_CIVITA[0, 1, 2] == 1.0
    assert LEVI_CIVITA[1, 0, 2] == -1.0
    assert LEVI_CIVITA[0, 0, 2] == 0.0
    assert np.count_nonzero(LEVI_CIVITA) == 6


def test_spinors():
    assert spinor_norm(np.array([1.0, 1.0j, 0.0, 0.0])) == pytest.approx(np.sqrt(2.0))
    assert np.array_equal(spin_state(True), [1.0, 0.0])
    assert np.array_equal(spin_state(False), [0.0, 1.0])
