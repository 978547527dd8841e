"""
Noncommutative phase space: parameter duals, Bopp shift, brackets and the
generalized symplectic structure.

theta_ij = eps_ijk theta_k and eta_ij = eps_ijk eta_k. The Bopp shift maps
canonical (primed) variables to noncommutative ones,

    x_i = x'_i - theta_ij p'_j / (2 hbar),    p_i = p'_i + eta_ij x'_j / (2 hbar).

It is linear, so every bracket of the shifted coordinates is a constant that
follows from one matrix product with the canonical symplectic form.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .spinor import LEVI_CIVITA

logger = logging.getLogger(__name__)

SYMPLECTIC_CONVENTION = "off-diagonal block hbar*delta_ij + theta_ik*eta_jk/(4*hbar), unsymmetrized"


def dual_matrix(vector: Sequence[float]) -> np.ndarray:
    """Antisymmetric matrix v_ij = eps_ijk v_k."""
    return np.einsum("ijk,k->ij", LEVI_CIVITA, np.asarray(vector, dtype=float))


@dataclass(frozen=True, eq=False)
class NCParams:
    """theta (length^2) and eta (momentum^2) vectors."""

    theta: np.ndarray = field(default_factory=lambda: np.zeros(3))
    eta: np.ndarray = field(default_factory=lambda: np.zeros(3))

    def __post_init__(self):
        for name in ("theta", "eta"):
            value = np.array(getattr(self, name), dtype=float)
            if value.shape != (3,):
                raise ValueError(f"{name} must have 3 components, got shape {value.shape}")
            if not np.all(np.isfinite(value)):
                raise ValueError(f"{name} must be finite, got {value}")
            value.setflags(write=False)
            object.__setattr__(self, name, value)

    @property
    def theta_matrix(self) -> np.ndarray:
        return dual_matrix(self.theta)

    @property
    def eta_matrix(self) -> np.ndarray:
        return dual_matrix(self.eta)

    @property
    def scenario(self) -> str:
        """One of commutative, space, momentum or mixed."""
        has_theta = bool(np.any(self.theta != 0.0))
        has_eta = bool(np.any(self.eta != 0.0))
        if has_theta and has_eta:
            return "mixed"
        if has_theta:
            return "space"
        if has_eta:
            return "momentum"
        return "commutative"

    def scaled(self, factor: float) -> "NCParams":
        return NCParams(theta=factor * self.theta, eta=factor * self.eta)


@dataclass(frozen=True, eq=False)
class PhasePoint:
    x: np.ndarray
    p: np.ndarray

    def __post_init__(self):
        for name in ("x", "p"):
            value = np.array(getattr(self, name), dtype=float)
            if value.shape != (3,) or not np.all(np.isfinite(value)):
                raise ValueError(f"{name} must be a finite 3-vector, got {value}")
            object.__setattr__(self, name, value)

    def as_vector(self) -> np.ndarray:
        return np.concatenate([self.x, self.p])

    @classmethod
    def from_vector(cls, z: np.ndarray) -> "PhasePoint":
        return cls(x=z[:3], p=z[3:])


@dataclass(frozen=True, eq=False)
class SymplecticStructure:
    alpha_matrix: np.ndarray
    convention: str = SYMPLECTIC_CONVENTION


@dataclass(frozen=True, eq=False)
class BracketTable:
    """Commutators [x_i, x_j], [p_i, p_j] and [x_i, p_j] as complex 3x3 arrays."""

    xx: np.ndarray
    pp: np.ndarray
    xp: np.ndarray

    def max_deviation(self, other: "BracketTable") -> float:
        return float(max(np.max(np.abs(a - b)) for a, b in zip((self.xx, self.pp, self.xp), (other.xx, other.pp, other.xp))))


def canonical_symplectic() -> np.ndarray:
    eye = np.eye(3)
    zero = np.zeros((3, 3))
    return np.block([[zero, eye], [-eye, zero]])


def bopp_matrix(nc: NCParams, hbar: float = 1.0) -> np.ndarray:
    """6x6 matrix T with (x, p) = T (x', p')."""
    eye = np.eye(3)
    return np.block([[eye, -nc.theta_matrix / (2.0 * hbar)], [nc.eta_matrix / (2.0 * hbar), eye]])


def bopp_shift(point: PhasePoint, nc: NCParams, hbar: float = 1.0) -> PhasePoint:
    """Map a canonical phase-space point to noncommutative variables."""
    x = point.x - nc.theta_matrix @ point.p / (2.0 * hbar)
    p = point.p + nc.eta_matrix @ point.x / (2.0 * hbar)
    return PhasePoint(x=x, p=p)


def bopp_roundtrip_residual(point: PhasePoint, nc: NCParams, hbar: float = 1.0) -> float:
    """Distance from ``point`` after shifting forward and then with flipped parameters."""
    back = bopp_shift(bopp_shift(point, nc, hbar), nc.scaled(-1.0), hbar)
    return float(np.linalg.norm(back.as_vector() - point.as_vector()))


def verify_brackets(nc: NCParams, hbar: float = 1.0) -> BracketTable:
    """Commutators induced by the Bopp shift.

    The canonical Poisson brackets of the shifted linear coordinates are
    T J T^T; multiplying by i hbar gives the commutator table.
    """
    t = bopp_matrix(nc, hbar)
    brackets = 1j * hbar * (t @ canonical_symplectic() @ t.T)
    return BracketTable(xx=brackets[:3, :3], pp=brackets[3:, 3:], xp=brackets[:3, 3:])


def closed_form_brackets(nc: NCParams, hbar: float = 1.0) -> BracketTable:
    """The commutator families written out directly from theta and eta."""
    theta, eta = nc.theta_matrix, nc.eta_matrix
    mixed = np.eye(3) + np.einsum("ik,jk->ij", theta, eta) / (4.0 * hbar**2)
    return BracketTable(xx=1j * theta, pp=1j * eta, xp=1j * hbar * mixed)


def build_symplectic(nc: NCParams, hbar: float = 1.0) -> SymplecticStructure:
    """Generalized symplectic matrix with theta, eta diagonal blocks.

    The off-diagonal block is hbar delta_ij + theta_ik eta_jk / (4 hbar),
    which is the convention that reproduces the mixed commutator.
    """
    theta, eta = nc.theta_matrix, nc.eta_matrix
    off = hbar * np.eye(3) + np.einsum("ik,jk->ij", theta, eta) / (4.0 * hbar)
    alpha = np.block([[theta, off], [-off.T, eta]])
    return SymplecticStructure(alpha_matrix=alpha)


def nc_hamiltonian(
    h: Callable[[PhasePoint], float],
    nc: NCParams,
    hbar: float = 1.0,
) -> Callable[[PhasePoint], float]:
    """Return h evaluated at Bopp-shifted arguments."""

    def shifted(point: PhasePoint) -> float:
        return h(bopp_shift(point, nc, hbar))

    return shifted
