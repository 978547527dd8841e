"""
Pauli and Dirac matrices in the standard (Dirac) representation.

gamma0 = diag(I, -I) and alpha_i = [[0, sigma_i], [sigma_i, 0]]. Matrices are
plain ``numpy`` complex128 arrays; every call returns a fresh array.
"""

import numpy as np

ComplexMatrix = np.ndarray
Spinor4 = np.ndarray

_PAULI = (
    ((0, 1), (1, 0)),
    ((0, -1j), (1j, 0)),
    ((1, 0), (0, -1)),
)


def _check_index(i: int) -> None:
    if i not in (1, 2, 3):
        raise ValueError(f"Matrix index must be 1, 2 or 3, got {i!r}")


def _check_matrix(a: ComplexMatrix) -> None:
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] not in (2, 4):
        raise ValueError(f"Expected a 2x2 or 4x4 matrix, got shape {a.shape}")


def identity(dim: int = 4) -> ComplexMatrix:
    if dim not in (2, 4):
        raise ValueError(f"Dimension must be 2 or 4, got {dim}")
    return np.eye(dim, dtype=np.complex128)


def pauli(i: int) -> ComplexMatrix:
    """Pauli matrix sigma_i for i in 1..3."""
    _check_index(i)
    return np.array(_PAULI[i - 1], dtype=np.complex128)


def dirac_gamma0() -> ComplexMatrix:
    zero = np.zeros((2, 2), dtype=np.complex128)
    return np.block([[identity(2), zero], [zero, -identity(2)]])


def dirac_alpha(i: int) -> ComplexMatrix:
    """Dirac alpha_i = gamma0 gamma_i, block off-diagonal in sigma_i."""
    sigma = pauli(i)
    zero = np.zeros((2, 2), dtype=np.complex128)
    return np.block([[zero, sigma], [sigma, zero]])


def anticommutator(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    """Return ab + ba.

    Raises:
        ValueError: If the matrices are not square 2x2/4x4 or differ in size
    """
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    _check_matrix(a)
    _check_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"Dimension mismatch: {a.shape} vs {b.shape}")
    return a @ b + b @ a


def commutator(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    _check_matrix(a)
    _check_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"Dimension mismatch: {a.shape} vs {b.shape}")
    return a @ b - b @ a


def sigma_dot(p: np.ndarray) -> np.ndarray:
    """sigma . p for momenta of shape (..., 3); returns shape (..., 2, 2)."""
    p = np.asarray(p, dtype=np.complex128)
    return np.einsum("...k,kab->...ab", p, PAULI_STACK)


def alpha_dot(p: np.ndarray) -> np.ndarray:
    """alpha . p for momenta of shape (..., 3); returns shape (..., 4, 4).

    Built blockwise as [[0, sigma.p], [sigma.p, 0]].
    """
    s = sigma_dot(p)
    zero = np.zeros_like(s)
    upper = np.concatenate([zero, s], axis=-1)
    lower = np.concatenate([s, zero], axis=-1)
    return np.concatenate([upper, lower], axis=-2)


def spinor_norm(psi: Spinor4) -> float:
    return float(np.sqrt(np.vdot(psi, psi).real))


def spin_state(up: bool) -> np.ndarray:
    """Two-component spinor chi_up = (1, 0) or chi_down = (0, 1)."""
    return np.array([1.0, 0.0] if up else [0.0, 1.0], dtype=np.complex128)


PAULI_STACK = np.stack([pauli(i) for i in (1, 2, 3)])
ALPHA_STACK = np.stack([dirac_alpha(i) for i in (1, 2, 3)])
GAMMA0 = dirac_gamma0()


def levi_civita() -> np.ndarray:
    """Rank-3 Levi-Civita tensor as a (3, 3, 3) float array."""
    eps = np.zeros((3, 3, 3))
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        eps[i, j, k] = 1.0
        eps[i, k, j] = -1.0
    return eps


LEVI_CIVITA = levi_civita()
