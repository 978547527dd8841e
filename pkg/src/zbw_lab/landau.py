"""
Momentum noncommutativity in 3+1 dimensions: the effective field
B_eta = eta / (e hbar), its symmetric-gauge potential and the relativistic
Landau spectrum

    E^2 = m^2 c^4 + p_3^2 c^2 + c^2 hbar |e B_3| (n - l + 1) - 2 c^2 e B_3 s_3.

Levels are labelled by k >= 0 with E^2 = m^2 c^4 + p_3^2 c^2 + 2 k c^2 hbar |e B_3|.
For k >= 1 two spin branches share a level; at k = 0 only the branch with
sign(s_3) = sign(e B_3) survives (spin down for electrons with B_3 > 0).
"""

import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from .constants import NATURAL, PhysicalConstants
from .dirac_packet import Spin

logger = logging.getLogger(__name__)

DEFAULT_N_MAX = 6

LandauState = Tuple[int, int, str]


class LandauQuery(BaseModel):
    """Quantum numbers and field for one Landau state.

    ``spin`` fixes s_3 = +-hbar/2; ``charge`` is the signed particle charge
    (defaults to the electron).
    """

    model_config = ConfigDict(frozen=True)

    p3: float = 0.0
    B3: float
    n: int = Field(ge=0)
    l: int
    spin: Spin
    charge: float = NATURAL.e

    @model_validator(mode="after")
    def _check_l(self) -> "LandauQuery":
        if abs(self.l) > self.n or (self.n - self.l) % 2 != 0:
            raise ValueError(f"l must be one of -n, -n+2, ..., n for n={self.n}, got l={self.l}")
        return self

    def s3(self, hbar: float = 1.0) -> float:
        return 0.5 * hbar * self.spin.sign


@dataclass(frozen=True)
class LandauLevel:
    k: int
    energy: float
    degenerate_states: List[LandauState] = field(default_factory=list)

    @property
    def branches(self) -> List[str]:
        return sorted({state[2] for state in self.degenerate_states})


def effective_field(eta: Sequence[float], consts: PhysicalConstants = NATURAL, charge: Optional[float] = None) -> np.ndarray:
    """B_eta = eta / (e hbar)."""
    e = consts.e if charge is None else charge
    return np.asarray(eta, dtype=float) / (e * consts.hbar)


def vector_potential_matrix(eta: Sequence[float], consts: PhysicalConstants = NATURAL, charge: Optional[float] = None) -> np.ndarray:
    """Matrix M with A_eta(r) = M r, i.e. (eta x r) / (2 e hbar)."""
    e = consts.e if charge is None else charge
    eta = np.asarray(eta, dtype=float)
    cross = np.array(
        [
            [0.0, -eta[2], eta[1]],
            [eta[2], 0.0, -eta[0]],
            [-eta[1], eta[0], 0.0],
        ]
    )
    return cross / (2.0 * e * consts.hbar)


def effective_vector_potential(
    eta: Sequence[float],
    r: Sequence[float],
    consts: PhysicalConstants = NATURAL,
    charge: Optional[float] = None,
) -> np.ndarray:
    """Symmetric-gauge potential (eta x r) / (2 e hbar)."""
    e = consts.e if charge is None else charge
    return np.cross(np.asarray(eta, dtype=float), np.asarray(r, dtype=float)) / (2.0 * e * consts.hbar)


def curl_of_linear(matrix: np.ndarray) -> np.ndarray:
    """Curl of the linear field A(r) = M r, read off its constant Jacobian M."""
    return np.array(
        [
            matrix[2, 1] - matrix[1, 2],
            matrix[0, 2] - matrix[2, 0],
            matrix[1, 0] - matrix[0, 1],
        ]
    )


def nc_generalized_momentum(
    p: Sequence[float],
    eta: Sequence[float],
    r: Sequence[float],
    consts: PhysicalConstants = NATURAL,
    charge: Optional[float] = None,
) -> np.ndarray:
    """pi_eta = p - e A_eta = p - (eta x r) / (2 hbar)."""
    e = consts.e if charge is None else charge
    return np.asarray(p, dtype=float) - e * effective_vector_potential(eta, r, consts, charge=e)


def magnetic_radius(B: float, consts: PhysicalConstants = NATURAL, charge: Optional[float] = None) -> float:
    """L = sqrt(hbar / |e B|)."""
    e = consts.e if charge is None else charge
    if B == 0.0:
        raise ValueError("Magnetic radius is undefined for B = 0")
    return math.sqrt(consts.hbar / abs(e * B))


def landau_energy(q: LandauQuery, consts: PhysicalConstants = NATURAL) -> float:
    """Positive root of the Landau E^2 for the state ``q``."""
    eb = q.charge * q.B3
    c2 = consts.c**2
    e2 = (
        (consts.m_e * c2) ** 2
        + (q.p3 * consts.c) ** 2
        + c2 * consts.hbar * abs(eb) * (q.n - q.l + 1)
        - 2.0 * c2 * eb * q.s3(consts.hbar)
    )
    return math.sqrt(e2)


def level_energy(k: int, p3: float, B3: float, charge: Optional[float] = None, consts: PhysicalConstants = NATURAL) -> float:
    """Energy of level k from E^2 = m^2 c^4 + p_3^2 c^2 + 2 k c^2 hbar |e B_3|."""
    e = consts.e if charge is None else charge
    c2 = consts.c**2
    return math.sqrt((consts.m_e * c2) ** 2 + (p3 * consts.c) ** 2 + 2.0 * k * c2 * consts.hbar * abs(e * B3))


def level_index(n: int, l: int, spin: Spin, eb_sign: float) -> int:
    """Level k of the state (n, l, spin) when e B_3 has sign ``eb_sign``."""
    twice_k = n - l + 1 - int(math.copysign(1.0, eb_sign)) * Spin(spin).sign
    return twice_k // 2


def enumerate_states(n_max: int = DEFAULT_N_MAX):
    """All (n, l, spin) with n <= n_max and l in -n, -n+2, ..., n."""
    for n in range(n_max + 1):
        for l in range(-n, n + 1, 2):
            for spin in (Spin.UP, Spin.DOWN):
                yield n, l, spin


def landau_level(
    k: int,
    p3: float,
    B3: float,
    charge: Optional[float] = None,
    consts: PhysicalConstants = NATURAL,
    n_max: Optional[int] = None,
) -> LandauLevel:
    """Level k with the (n, l, s_3) states mapping onto it.

    Args:
        k: Level index
        p3: Momentum along the field
        B3: Field strength (B_eta in the noncommutative case)
        charge: Signed particle charge, electron by default
        consts: Constants fixing the units
        n_max: Largest n enumerated; defaults to max(6, 2k + 1)

    Returns:
        Level energy and its states
    """
    if k < 0:
        raise ValueError(f"Level index must be >= 0, got {k}")
    e = consts.e if charge is None else charge
    if e * B3 == 0.0:
        raise ValueError("Landau levels need a nonzero charge and field")
    n_max = max(DEFAULT_N_MAX, 2 * k + 1) if n_max is None else n_max

    states = [
        (n, l, spin.value)
        for n, l, spin in enumerate_states(n_max)
        if level_index(n, l, spin, e * B3) == k
    ]
    energy = level_energy(k, p3, B3, e, consts)
    logger.debug(f"Landau level k={k}: E={energy!r}, {len(states)} states with n <= {n_max}")
    return LandauLevel(k=k, energy=energy, degenerate_states=states)


def landau_spectrum(
    k_max: int,
    p3: float,
    B3: float,
    charge: Optional[float] = None,
    consts: PhysicalConstants = NATURAL,
) -> List[LandauLevel]:
    """Levels k = 0..k_max."""
    if k_max < 0:
        raise ValueError(f"k_max must be >= 0, got {k_max}")
    return [landau_level(k, p3, B3, charge, consts) for k in range(k_max + 1)]


def nc_landau_level(
    k: int,
    p3: float,
    eta3: float,
    charge: Optional[float] = None,
    consts: PhysicalConstants = NATURAL,
) -> LandauLevel:
    """Level k in the field B_eta3 = eta_3 / (e hbar) seen by a particle of ``charge``.

    The product e B_eta3 = eta_3 / hbar does not involve the charge, so the
    spectrum is the same for particles and antiparticles.
    """
    e = consts.e if charge is None else charge
    b_eta = eta3 / (e * consts.hbar)
    return landau_level(k, p3, b_eta, e, consts)
