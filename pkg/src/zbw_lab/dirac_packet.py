"""
Non-relativistic Gaussian Dirac wave packet in momentum space.

All quantities are in the DiracNatural frame: hbar = m_e = c = 1, momenta in
m_e c, times in hbar/(m_e c^2), lengths in the reduced Compton wavelength and
charge in units of |e|.

The packet is

    Psi(p, t) = f(p) [P_+(p) exp(-i w t) + P_-(p) exp(+i w t)]

with P_+ = (chi, K sigma.p chi), P_- = (0, -K sigma.p chi), K = 1/(2 m_e c),
w = m_e c^2 / hbar and the normalized profile
f(p) = (2/(pi p_o^2))^(3/4) exp(-p^2/p_o^2), p_o = 2 hbar / r_o. Both P_+ and
P_- are linear in p, so every derivative is taken in closed form.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from .constants import NATURAL
from .quadrature import DEFAULT_TOL, MomentumGrid, expectation
from .spinor import ALPHA_STACK, GAMMA0, LEVI_CIVITA, PAULI_STACK, alpha_dot, spin_state

logger = logging.getLogger(__name__)

NONRELATIVISTIC_LIMIT = 0.1


class Spin(str, Enum):
    UP = "up"
    DOWN = "down"

    @property
    def sign(self) -> int:
        return 1 if self is Spin.UP else -1


class PacketSpec(BaseModel):
    """Width and spin orientation of a packet.

    ``r_o`` is the spatial width in units of the reduced Compton wavelength.
    """

    model_config = ConfigDict(frozen=True)

    r_o: float = Field(gt=0)
    spin: Spin = Spin.UP

    @property
    def p_o(self) -> float:
        return 2.0 / self.r_o

    @property
    def nonrelativistic_ratio(self) -> float:
        """p_o / (2 m_e c) = lambda_c / r_o."""
        return 1.0 / self.r_o

    @property
    def nonrelativistic_ok(self) -> bool:
        return self.nonrelativistic_ratio < NONRELATIVISTIC_LIMIT


@dataclass(frozen=True, eq=False)
class DiracPacket:
    """A packet built by :func:`build_packet`.

    ``plus``/``minus`` hold the linear amplitudes of P_+ and P_- as a
    constant part of shape (4,) and gradient rows of shape (3, 4).
    """

    spec: PacketSpec
    K: float = 0.5
    omega: float = 1.0
    charge: float = NATURAL.e
    plus_const: np.ndarray = field(default=None, repr=False)
    plus_grad: np.ndarray = field(default=None, repr=False)
    minus_const: np.ndarray = field(default=None, repr=False)
    minus_grad: np.ndarray = field(default=None, repr=False)

    @property
    def p_o(self) -> float:
        return self.spec.p_o

    @property
    def spin(self) -> Spin:
        return self.spec.spin

    def profile(self, p: np.ndarray) -> np.ndarray:
        """f(p) for momenta of shape (..., 3)."""
        p2 = np.sum(np.asarray(p, dtype=float) ** 2, axis=-1)
        return (2.0 / (math.pi * self.p_o**2)) ** 0.75 * np.exp(-p2 / self.p_o**2)

    def amplitude(self, p: np.ndarray):
        """(C_+(p), C_-(p)) including the profile, each of shape (..., 4)."""
        p = np.asarray(p, dtype=float)
        f = self.profile(p)[..., None]
        c_plus = self.plus_const + p @ self.plus_grad
        c_minus = self.minus_const + p @ self.minus_grad
        return f * c_plus, f * c_minus

    def _phases(self, t: float):
        return np.exp(-1j * self.omega * t), np.exp(1j * self.omega * t)

    def polynomial(self, p: np.ndarray, t: float) -> np.ndarray:
        """Psi / f, shape (..., 4)."""
        p = np.asarray(p, dtype=float)
        e_minus, e_plus = self._phases(t)
        return (self.plus_const + p @ self.plus_grad) * e_minus + (self.minus_const + p @ self.minus_grad) * e_plus

    def polynomial_gradient(self, p: np.ndarray, t: float) -> np.ndarray:
        """(d_i Psi) / f, shape (..., 3, 4), with d_i f = -(2 p_i / p_o^2) f."""
        p = np.asarray(p, dtype=float)
        e_minus, e_plus = self._phases(t)
        const_part = self.plus_grad * e_minus + self.minus_grad * e_plus
        profile_part = (-2.0 / self.p_o**2) * p[..., :, None] * self.polynomial(p, t)[..., None, :]
        return const_part + profile_part

    def wavefunction(self, p: np.ndarray, t: float) -> np.ndarray:
        return self.profile(p)[..., None] * self.polynomial(p, t)

    def gradient(self, p: np.ndarray, t: float) -> np.ndarray:
        return self.profile(p)[..., None, None] * self.polynomial_gradient(p, t)


def build_packet(spec: PacketSpec) -> DiracPacket:
    """Build the truncated packet for ``spec``.

    Args:
        spec: Width and spin

    Returns:
        Immutable packet
    """
    if not spec.r_o > 0:
        raise ValueError(f"r_o must be positive, got {spec.r_o}")
    if not spec.nonrelativistic_ok:
        logger.warning(
            f"lambda_c/r_o = {spec.nonrelativistic_ratio:.3g} is not small; "
            "the truncated packet drops terms of this order squared"
        )

    K = 0.5
    chi = spin_state(spec.spin is Spin.UP)
    zero2 = np.zeros(2, dtype=np.complex128)
    # row k: coefficient of p_k in the lower components, K sigma_k chi
    lower = K * np.einsum("kab,b->ka", PAULI_STACK, chi)
    plus_grad = np.concatenate([np.zeros((3, 2), dtype=np.complex128), lower], axis=1)
    arrays = {
        "plus_const": np.concatenate([chi, zero2]),
        "plus_grad": plus_grad,
        "minus_const": np.zeros(4, dtype=np.complex128),
        "minus_grad": -plus_grad,
    }
    for array in arrays.values():
        array.setflags(write=False)
    logger.debug(f"Built {spec.spin.value} packet r_o={spec.r_o} p_o={spec.p_o}")
    return DiracPacket(spec=spec, K=K, omega=1.0, **arrays)


def velocity_integrand(packet: DiracPacket, p: np.ndarray, t: float) -> np.ndarray:
    """Psi^dagger alpha_j Psi at momenta of shape (..., 3); returns (..., 3)."""
    psi = packet.wavefunction(p, t)
    return np.einsum("...a,jab,...b->...j", psi.conj(), ALPHA_STACK, psi).real


def expectation_velocity(packet: DiracPacket, t: float, tol: float = DEFAULT_TOL) -> np.ndarray:
    """<c alpha> over the full momentum domain, in units of c."""

    def integrand(grid: MomentumGrid) -> np.ndarray:
        s = packet.polynomial(grid.cartesian, t)
        return np.einsum("na,jab,nb->nj", s.conj(), ALPHA_STACK, s).real

    value, _, _ = expectation(integrand, packet.p_o, tol=tol)
    return value


def expectation_grad_cross_alpha(packet: DiracPacket, t: float, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Magnetic moment (i e hbar / 2) <grad_p x alpha>, in units of |e| lambda_c.

    The gradient acts on the ket and is evaluated from the closed-form
    derivatives of the packet amplitudes.
    """

    def integrand(grid: MomentumGrid) -> np.ndarray:
        p = grid.cartesian
        s = packet.polynomial(p, t)
        ds = packet.polynomial_gradient(p, t)
        # a[n, j, i] = S^dagger alpha_j d_i S
        a = np.einsum("na,jab,nib->nji", s.conj(), ALPHA_STACK, ds)
        return np.einsum("kij,nji->nk", LEVI_CIVITA, a)

    value, _, _ = expectation(integrand, packet.p_o, tol=tol)
    return (0.5 * packet.charge * (1j * value)).real


def alpha_momentum_matrix(packet: DiracPacket, t: float, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Table M[j, k] = <alpha_j p_k>."""

    def integrand(grid: MomentumGrid) -> np.ndarray:
        p = grid.cartesian
        s = packet.polynomial(p, t)
        a = np.einsum("na,jab,nb->nj", s.conj(), ALPHA_STACK, s).real
        return a[:, :, None] * p[:, None, :]

    value, _, _ = expectation(integrand, packet.p_o, tol=tol)
    return value


def spinor_norm(packet: DiracPacket, t: float = 0.0, tol: float = DEFAULT_TOL) -> float:
    """Integral of |Psi|^2; equals 1 up to the truncation order."""

    def integrand(grid: MomentumGrid) -> np.ndarray:
        s = packet.polynomial(grid.cartesian, t)
        return np.sum(np.abs(s) ** 2, axis=-1)

    value, _, _ = expectation(integrand, packet.p_o, tol=tol)
    return float(value)


class ResidualSample(NamedTuple):
    residual: np.ndarray
    dropped: np.ndarray


def dirac_residual(packet: DiracPacket, p: np.ndarray, t: float) -> ResidualSample:
    """Free-Dirac residual (i d_t - alpha.p - gamma0) Psi at one momentum.

    ``dropped`` is the term of order (p / 2 m_e c)^2 the truncation removes,
    2 i K |p|^2 sin(w t) f(p) (chi, 0); the two agree exactly.
    """
    p = np.asarray(p, dtype=float)
    e_minus, e_plus = packet._phases(t)
    f = packet.profile(p)
    c_plus = packet.plus_const + p @ packet.plus_grad
    c_minus = packet.minus_const + p @ packet.minus_grad
    i_dt_psi = f * packet.omega * (c_plus * e_minus - c_minus * e_plus)
    hamiltonian = alpha_dot(p) + GAMMA0
    psi = packet.wavefunction(p, t)
    residual = i_dt_psi - hamiltonian @ psi

    chi = packet.plus_const
    dropped = 2j * packet.K * float(p @ p) * math.sin(packet.omega * t) * f * chi
    return ResidualSample(residual=residual, dropped=dropped)
