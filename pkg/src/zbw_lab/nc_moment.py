"""
Space-noncommutative corrections to the zitterbewegung magnetic moment.

With theta != 0 and eta = 0 the Bopp shift turns the moment operator into
its commutative part plus (e / 4 hbar) alpha x (p x theta). For the Gaussian
packet only the diagonal and the (1, 2) block of <alpha_j p_k> survive, which
gives, with C = (e / 2 lambda_c)(lambda_c / r_o)^2 and phase w_zbw t,

    mu_x = -C [theta_1 (1 - cos) + s theta_2 sin / 2]
    mu_y = -C [theta_2 (1 - cos) - s theta_1 sin / 2]
    mu_z = -C theta_3 (1 - cos)

where s = +1 for spin up and -1 for spin down. At the Bohr radius
(lambda_c / r_o)^2 = alpha_fsc^2.

Everything here is in the DiracNatural frame unless constants are passed.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .constants import NATURAL, PhysicalConstants
from .dirac_packet import PacketSpec, Spin, alpha_momentum_matrix, build_packet
from .quadrature import DEFAULT_TOL, RNG_ALGORITHM, monte_carlo_gaussian
from .spinor import ALPHA_STACK
from .zbw import magnetic_moment, zbw_frequency

logger = logging.getLogger(__name__)

ORACLE_METHODS = ("quadrature", "monte-carlo")


@dataclass(frozen=True, eq=False)
class MomentResult:
    commutative: np.ndarray
    nc_correction: np.ndarray
    total: np.ndarray


def _theta(theta: Sequence[float]) -> np.ndarray:
    value = np.asarray(theta, dtype=float)
    if value.shape != (3,):
        raise ValueError(f"theta must have 3 components, got shape {value.shape}")
    return value


def _width(r_o: Optional[float], consts: PhysicalConstants) -> float:
    r_o = consts.bohr_radius if r_o is None else r_o
    if not r_o > 0:
        raise ValueError(f"r_o must be positive, got {r_o}")
    return r_o


def nc_moment(
    spin: Spin,
    theta: Sequence[float],
    t: float,
    r_o: Optional[float] = None,
    consts: PhysicalConstants = NATURAL,
) -> np.ndarray:
    """Leading-order theta correction to the moment.

    Args:
        spin: Packet spin
        theta: Space noncommutativity vector (length^2)
        t: Time
        r_o: Packet width; the Bohr radius when omitted
        consts: Constants fixing the units

    Returns:
        Moment correction (charge x length)
    """
    theta = _theta(theta)
    r_o = _width(r_o, consts)
    s = Spin(spin).sign
    phase = zbw_frequency(consts) * t
    one_minus_cos = 1.0 - math.cos(phase)
    half_sin = 0.5 * math.sin(phase)
    coefficient = consts.e / (2.0 * consts.lambda_c) * (consts.lambda_c / r_o) ** 2
    return -coefficient * np.array(
        [
            theta[0] * one_minus_cos + s * theta[1] * half_sin,
            theta[1] * one_minus_cos - s * theta[0] * half_sin,
            theta[2] * one_minus_cos,
        ]
    )


def moment_from_alpha_momentum(matrix: np.ndarray, theta: Sequence[float], charge: float, hbar: float = 1.0) -> np.ndarray:
    """(e / 4 hbar) <alpha x (p x theta)> from the table M[j, k] = <alpha_j p_k>.

    alpha x (p x theta) = p (alpha . theta) - theta (alpha . p), so
    mu_k = (e / 4 hbar) [sum_j theta_j M[j, k] - theta_k tr M].
    """
    theta = _theta(theta)
    return charge / (4.0 * hbar) * (theta @ matrix - theta * np.trace(matrix))


def oracle_nc_moment(
    spin: Spin,
    theta: Sequence[float],
    t: float,
    r_o: Optional[float] = None,
    method: str = "quadrature",
    seed: int = 0,
    samples: int = 1_000_000,
    tol: float = DEFAULT_TOL,
) -> np.ndarray:
    """Independent evaluation of :func:`nc_moment` over the packet (DiracNatural).

    ``quadrature`` integrates the packet on the spherical momentum grid;
    ``monte-carlo`` samples the squared profile with ``seed``.
    """
    if method not in ORACLE_METHODS:
        raise ValueError(f"Unknown oracle method {method!r}; expected one of {ORACLE_METHODS}")
    r_o = _width(r_o, NATURAL)
    packet = build_packet(PacketSpec(r_o=r_o, spin=Spin(spin)))

    if method == "quadrature":
        matrix = alpha_momentum_matrix(packet, t, tol=tol)
    else:
        matrix = np.empty((3, 3))
        for j in range(3):
            for k in range(3):

                def integrand(p: np.ndarray, j: int = j, k: int = k) -> np.ndarray:
                    s = packet.polynomial(p, t)
                    return np.einsum("na,ab,nb->n", s.conj(), ALPHA_STACK[j], s).real * p[:, k]

                matrix[j, k] = monte_carlo_gaussian(integrand, n=samples, seed=seed, p_o=packet.p_o).value
        logger.debug(f"monte carlo oracle used rng={RNG_ALGORITHM} seed={seed}")

    return moment_from_alpha_momentum(matrix, theta, packet.charge)


def nc_moment_result(
    spin: Spin,
    theta: Sequence[float],
    t: float,
    r_o: Optional[float] = None,
    consts: PhysicalConstants = NATURAL,
) -> MomentResult:
    """Commutative moment, its theta correction and their sum."""
    commutative = magnetic_moment(spin, t, consts)
    correction = nc_moment(spin, theta, t, r_o, consts)
    return MomentResult(commutative=commutative, nc_correction=correction, total=commutative + correction)


def bracketed_total_z(
    spin: Spin,
    theta3: float,
    t: float,
    r_o: Optional[float] = None,
    consts: PhysicalConstants = NATURAL,
) -> float:
    """Total z moment as one bracket, (e lambda_c / 2)(s - theta_3 / r_o^2)(1 - cos w_zbw t).

    At the Bohr radius and spin up the bracket is 1 - (alpha_fsc / lambda_c)^2 theta_3.
    """
    r_o = _width(r_o, consts)
    s = Spin(spin).sign
    one_minus_cos = 1.0 - math.cos(zbw_frequency(consts) * t)
    return 0.5 * consts.e * consts.lambda_c * (s - theta3 / r_o**2) * one_minus_cos


def oneloop_reference(theta: Sequence[float], spin: Spin, consts: PhysicalConstants = NATURAL) -> np.ndarray:
    """(e lambda_c / 2)[(1 + alpha / 2 pi) sigma + (m_e c alpha gamma_E / 3 pi lambda_c^2) theta]."""
    theta = _theta(theta)
    sigma = np.array([0.0, 0.0, float(Spin(spin).sign)])
    g_part = (1.0 + consts.alpha_fsc / (2.0 * math.pi)) * sigma
    theta_part = consts.m_e * consts.c * consts.alpha_fsc * consts.gamma_euler / (3.0 * math.pi * consts.lambda_c**2) * theta
    return 0.5 * consts.e * consts.lambda_c * (g_part + theta_part)


def oneloop_theta_term(theta: Sequence[float], consts: PhysicalConstants = NATURAL) -> np.ndarray:
    """The spin-independent theta part of :func:`oneloop_reference`."""
    return oneloop_reference(theta, Spin.UP, consts) - oneloop_reference(np.zeros(3), Spin.UP, consts)


def nc_moment_time_average(theta: Sequence[float], r_o: Optional[float] = None, consts: PhysicalConstants = NATURAL) -> np.ndarray:
    """Mean of :func:`nc_moment` over one period; the sine terms drop out."""
    theta = _theta(theta)
    r_o = _width(r_o, consts)
    return -consts.e / (2.0 * consts.lambda_c) * (consts.lambda_c / r_o) ** 2 * theta


def oneloop_ratio(theta3: float = 1.0, r_o: Optional[float] = None, consts: PhysicalConstants = NATURAL) -> dict:
    """Ratio of the time-averaged leading z correction to the one-loop theta term.

    The two coefficients differ by a factor with dimension
    1 / (mass x speed), so the ratio is only a number once the units are
    fixed; the bookkeeping is returned alongside it.
    """
    leading = float(nc_moment_time_average([0.0, 0.0, theta3], r_o, consts)[2])
    oneloop = float(oneloop_theta_term([0.0, 0.0, theta3], consts)[2])
    return {
        "leading_z": leading,
        "oneloop_z": oneloop,
        "ratio": leading / oneloop if oneloop != 0.0 else math.nan,
        "opposite_sign": leading * oneloop < 0.0,
        "units": "ratio carries 1/(m_e c); value quoted with m_e = c = 1",
    }


def zeeman_shift(
    theta: Sequence[float],
    B: Sequence[float],
    form_factor: float = 1.0,
    consts: PhysicalConstants = NATURAL,
) -> float:
    """NC Zeeman shift (e alpha gamma_E / 6 pi lambda_c)(1 - f m_p / m_e)(theta . B)."""
    theta = _theta(theta)
    field = np.asarray(B, dtype=float)
    prefactor = consts.e * consts.alpha_fsc * consts.gamma_euler / (6.0 * math.pi * consts.lambda_c)
    return float(prefactor * (1.0 - form_factor * consts.mass_ratio) * np.dot(theta, field))
