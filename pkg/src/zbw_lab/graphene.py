"""
Zitterbewegung of a Gaussian packet in monolayer graphene under the
effective field B_eta of momentum noncommutativity.

Inputs are SI (see :class:`GrapheneConfig`); the series machinery runs in the
GrapheneNatural frame where the magnetic radius L = hbar / sqrt|eta_3|, the
frequency Omega = sqrt(2) v_F / L and hbar are all 1, so v_F = 1/sqrt(2).
Wavenumbers are in 1/L, times in 1/Omega, lengths in L and velocities in
L Omega.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, NamedTuple, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy import linalg, special

from .constants import SI_CONSTANTS, PhysicalConstants, UnitFrame
from .quadrature import DEFAULT_TOL, integrate_1d, integrate_1d_gauss_hermite

logger = logging.getLogger(__name__)

# bound on the effective field quoted for graphene, in tesla
DEFAULT_B_ETA = 8.6e-14
DEFAULT_L_OVER_ELL = 4.0
DEFAULT_K0X_ELL = 1.0
INV_SQRT2 = 1.0 / math.sqrt(2.0)
V_F_NATURAL = INV_SQRT2
OVERLAP_METHODS = ("adaptive", "gauss-hermite")

Times = Union[float, np.ndarray]


class GrapheneConfig(BaseModel):
    """2+1D scenario parameters in SI units.

    Give either ``eta3`` or ``b_eta`` (both only if they agree), either
    ``ell`` or ``L_over_ell``, and either ``k0x`` or the dimensionless
    ``k0x_ell``. Missing values fall back to the field bound, L = 4 ell and
    ell k0x = 1; an unset ``v_f`` takes the constants' Fermi velocity.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    b_eta: Optional[float] = None
    eta3: Optional[float] = None
    ell: Optional[float] = Field(default=None, gt=0)
    L_over_ell: Optional[float] = Field(default=None, gt=0)
    k0x: Optional[float] = None
    k0x_ell: Optional[float] = None
    v_f: Optional[float] = Field(default=None, gt=0)
    u: float = INV_SQRT2
    d: float = INV_SQRT2
    m_max: int = Field(default=32, ge=1)

    @model_validator(mode="after")
    def _check_amplitudes(self) -> "GrapheneConfig":
        if abs(self.u**2 + self.d**2 - 1.0) > 1e-12:
            raise ValueError(f"u^2 + d^2 must equal 1, got {self.u**2 + self.d**2!r}")
        if self.eta3 == 0.0 or self.b_eta == 0.0:
            raise ValueError("The effective field must be nonzero")
        if self.k0x is not None and self.k0x_ell is not None:
            raise ValueError("Give k0x or k0x_ell, not both")
        return self


@dataclass(frozen=True)
class GrapheneScales:
    """Derived SI scales and the dimensionless parameters of a config."""

    eta3: float
    b_eta: float
    L: float
    omega: float
    v_f: float
    ell: float
    k0: float
    g: float

    @property
    def frame(self) -> UnitFrame:
        return UnitFrame.graphene(self.L, self.v_f)

    @property
    def ratio(self) -> float:
        """(L^2 - ell^2) / (L^2 + ell^2), the per-level decay of F_m."""
        return (1.0 - self.ell**2) / (1.0 + self.ell**2)


@lru_cache(maxsize=128)
def resolve_scales(config: GrapheneConfig, consts: PhysicalConstants = SI_CONSTANTS) -> GrapheneScales:
    """Derive L, Omega, g and the natural-unit packet parameters.

    Raises:
        ValueError: If eta3 and b_eta disagree, or L <= ell
    """
    e, hbar = consts.e, consts.hbar
    if config.eta3 is not None and config.b_eta is not None:
        implied = e * hbar * config.b_eta
        if abs(implied - config.eta3) > 1e-12 * abs(config.eta3):
            raise ValueError(f"eta3={config.eta3!r} and b_eta={config.b_eta!r} are inconsistent")
        eta3 = config.eta3
    elif config.eta3 is not None:
        eta3 = config.eta3
    else:
        b_eta = DEFAULT_B_ETA if config.b_eta is None else config.b_eta
        eta3 = e * hbar * b_eta
    b_eta = eta3 / (e * hbar)

    L = hbar / math.sqrt(abs(eta3))
    v_f = consts.v_f_default if config.v_f is None else config.v_f
    omega = math.sqrt(2.0) * v_f / L

    if config.ell is not None:
        ell_si = config.ell
        if config.L_over_ell is not None and abs(L / ell_si - config.L_over_ell) > 1e-9 * config.L_over_ell:
            raise ValueError(f"ell={ell_si!r} does not give L/ell={config.L_over_ell!r}")
    else:
        ell_si = L / (DEFAULT_L_OVER_ELL if config.L_over_ell is None else config.L_over_ell)
    if not L > ell_si:
        raise ValueError(f"Magnetic radius L={L!r} must exceed the packet width ell={ell_si!r}")

    ell = ell_si / L
    if config.k0x is not None:
        k0 = config.k0x * L
    else:
        k0 = (DEFAULT_K0X_ELL if config.k0x_ell is None else config.k0x_ell) / ell
    g = 1.0 / math.sqrt(1.0 - ell**4)
    if config.u != config.d:
        logger.warning("Series coefficients are those of the equal-amplitude packet u = d = 1/sqrt(2)")
    logger.debug(f"graphene scales: L={L!r} m, Omega={omega!r} 1/s, ell/L={ell!r}, k0 L={k0!r}")
    return GrapheneScales(eta3=eta3, b_eta=b_eta, L=L, omega=omega, v_f=v_f, ell=ell, k0=k0, g=g)


def big_omega_forms(config: GrapheneConfig, consts: PhysicalConstants = SI_CONSTANTS):
    """(sqrt(2 |e B_eta| / hbar) v_F, sqrt(2 |eta_3|) v_F / hbar) in 1/s."""
    scales = resolve_scales(config, consts)
    field_form = math.sqrt(2.0 * abs(consts.e * scales.b_eta) / consts.hbar) * scales.v_f
    eta_form = math.sqrt(2.0 * abs(scales.eta3)) * scales.v_f / consts.hbar
    return field_form, eta_form


def big_omega(config: GrapheneConfig, consts: PhysicalConstants = SI_CONSTANTS) -> float:
    """Landau frequency Omega in 1/s."""
    field_form, eta_form = big_omega_forms(config, consts)
    if abs(field_form - eta_form) > 1e-12 * eta_form:
        raise ValueError(f"Omega forms disagree: {field_form!r} vs {eta_form!r}")
    return eta_form


def magnetic_radius(config: GrapheneConfig, consts: PhysicalConstants = SI_CONSTANTS) -> float:
    return resolve_scales(config, consts).L


def g_factor(config: GrapheneConfig, consts: PhysicalConstants = SI_CONSTANTS) -> float:
    """g = L^3 / sqrt(L^4 - ell^4), in units of L."""
    return resolve_scales(config, consts).g


def graphene_energy(s: int, m: int, config: Optional[GrapheneConfig] = None) -> float:
    """E_sm = s sqrt(m) in units of hbar Omega."""
    if s not in (1, -1):
        raise ValueError(f"Band index must be +1 or -1, got {s}")
    if m < 0:
        raise ValueError(f"Landau index must be >= 0, got {m}")
    return s * math.sqrt(m)


def hermite_normalized(m: int, x):
    """H_m(x) / sqrt(2^m m!), stable for large m."""
    if m < 0:
        raise ValueError(f"Hermite order must be >= 0, got {m}")
    x = np.asarray(x, dtype=float)
    h_prev, h = np.ones_like(x), math.sqrt(2.0) * x
    if m == 0:
        return h_prev
    for n in range(1, m):
        h_prev, h = h, math.sqrt(2.0 / (n + 1)) * x * h - math.sqrt(n / (n + 1)) * h_prev
    return h


def _log_prefactor(m: int, ell: float, L: float = 1.0) -> float:
    """log of ell sqrt(L (L^2 - ell^2)^m) / sqrt(2^(m+1) (L^2 + ell^2)^(m+1) m! sqrt(pi))."""
    numerator = math.log(ell) + 0.5 * (math.log(L) + m * math.log(L**2 - ell**2))
    denominator = 0.5 * (
        (m + 1) * math.log(2.0) + (m + 1) * math.log(L**2 + ell**2) + special.gammaln(m + 1) + 0.5 * math.log(math.pi)
    )
    return numerator - denominator


def _f_m(kx, m: int, ell: float, k0: float, L: float = 1.0):
    kx = np.asarray(kx, dtype=float)
    g = L**3 / math.sqrt(L**4 - ell**4)
    # H_m = sqrt(2^m m!) h_m; the factorials are combined in log space
    log_norm = 0.5 * (m * math.log(2.0) + special.gammaln(m + 1))
    exponent = (
        _log_prefactor(m, ell, L)
        + log_norm
        - 0.5 * ell**2 * (kx - k0) ** 2
        - kx**2 * L**4 / (2.0 * (L**2 + ell**2))
    )
    return np.exp(exponent) * hermite_normalized(m, kx * g)


def f_m(kx, m: int, config: GrapheneConfig, consts: PhysicalConstants = SI_CONSTANTS):
    """F_m(k_x) with k_x in 1/L; F_{-1} is identically zero.

    Raises:
        ValueError: If m < -1 or L <= ell
    """
    if m < -1:
        raise ValueError(f"Landau index must be >= -1, got {m}")
    scales = resolve_scales(config, consts)
    if m == -1:
        return np.zeros_like(np.asarray(kx, dtype=float))
    return _f_m(kx, m, scales.ell, scales.k0)


def _overlap_window(scales: GrapheneScales):
    """Centre and width of F_m F_m' from its Gaussian envelope."""
    a = scales.ell**2 + 1.0 / (1.0 + scales.ell**2)
    return scales.ell**2 * scales.k0 / a, 1.0 / math.sqrt(a)


@lru_cache(maxsize=4096)
def overlap(
    m: int,
    m_prime: int,
    config: GrapheneConfig,
    consts: PhysicalConstants = SI_CONSTANTS,
    method: str = "adaptive",
    tol: float = DEFAULT_TOL,
) -> float:
    """V_{m,m'} = integral of F_m F_m' over k_x.

    Args:
        m: First index (>= -1)
        m_prime: Second index (>= -1)
        config: Scenario
        consts: SI constants
        method: ``adaptive`` or ``gauss-hermite``
        tol: Quadrature tolerance

    Returns:
        Overlap value
    """
    if min(m, m_prime) < -1:
        raise ValueError(f"Landau indices must be >= -1, got ({m}, {m_prime})")
    if method not in OVERLAP_METHODS:
        raise ValueError(f"Unknown overlap method {method!r}; expected one of {OVERLAP_METHODS}")
    if m == -1 or m_prime == -1:
        return 0.0
    scales = resolve_scales(config, consts)
    center, width = _overlap_window(scales)

    def integrand(k):
        return _f_m(k, m, scales.ell, scales.k0) * _f_m(k, m_prime, scales.ell, scales.k0)

    if method == "adaptive":
        result = integrate_1d(integrand, tol=tol, center=center, scale=width)
    else:
        result = integrate_1d_gauss_hermite(integrand, tol=tol, center=center, scale=width)
    return result.value


def analytic_overlap_00(config: GrapheneConfig, consts: PhysicalConstants = SI_CONSTANTS) -> float:
    """V_{0,0} by completing the square in F_0^2."""
    scales = resolve_scales(config, consts)
    ell, k0, L = scales.ell, scales.k0, 1.0
    D = L**4 + L**2 * ell**2 + ell**4
    return ell**2 * L / (2.0 * math.sqrt((L**2 + ell**2) * D)) * math.exp(-(ell**2) * k0**2 * L**4 / D)


def uncorrected_overlap_00(config: GrapheneConfig, consts: PhysicalConstants = SI_CONSTANTS) -> float:
    """V_{0,0} with (ell^2 - 1) in the exponent instead of the completed square, in GrapheneNatural units."""
    scales = resolve_scales(config, consts)
    ell, k0, L = scales.ell, scales.k0, 1.0
    D = L**4 + L**2 * ell**2 + ell**4
    prefactor = L * ell**2 / (2.0 * math.sqrt((L**2 + ell**2) * D))
    return prefactor * math.exp(ell**2 * k0**2 * (ell**2 - 1.0) * (L**2 + ell**2) / D)


def overlap_ratio_01_closed_form(config: GrapheneConfig, consts: PhysicalConstants = SI_CONSTANTS) -> float:
    """V_{0,1} / V_{0,0} = sqrt(2) L^3 ell^2 k0x / (L^4 + L^2 ell^2 + ell^4)."""
    scales = resolve_scales(config, consts)
    ell, k0, L = scales.ell, scales.k0, 1.0
    return math.sqrt(2.0) * L**3 * ell**2 * k0 / (L**4 + L**2 * ell**2 + ell**4)


def amplitude_estimates(config: GrapheneConfig, consts: PhysicalConstants = SI_CONSTANTS) -> Dict[str, float]:
    """Rough zero-level amplitude scalings, in units of L, for reporting only."""
    scales = resolve_scales(config, consts)
    damping = math.exp(-((scales.ell * scales.k0) ** 2))
    return {
        "x": scales.ell**2 * damping,
        "y": scales.ell**4 * scales.k0 * damping,
    }


@dataclass(frozen=True, eq=False)
class SeriesCoefficients:
    """Per-level coefficients for m = 0..m_max (frequencies in units of Omega)."""

    m: np.ndarray
    alpha_plus: np.ndarray
    alpha_minus: np.ndarray
    beta_plus: np.ndarray
    beta_minus: np.ndarray
    omega_cyc: np.ndarray
    omega_zbw: np.ndarray

    @property
    def m_max(self) -> int:
        return int(self.m[-1])

    def rows(self) -> List[Dict[str, float]]:
        return [
            {
                "m": int(self.m[i]),
                "alpha_plus": float(self.alpha_plus[i]),
                "alpha_minus": float(self.alpha_minus[i]),
                "beta_plus": float(self.beta_plus[i]),
                "beta_minus": float(self.beta_minus[i]),
                "omega_cyc": float(self.omega_cyc[i]),
                "omega_zbw": float(self.omega_zbw[i]),
            }
            for i in range(self.m.size)
        ]


def series_coefficients(
    config: GrapheneConfig,
    consts: PhysicalConstants = SI_CONSTANTS,
    method: str = "adaptive",
    m_max: Optional[int] = None,
) -> SeriesCoefficients:
    """alpha_m^+- = 2(V_mm +- V_{m-1,m+1}), beta_m^+- = -2(V_{m,m+1} +- V_{m,m-1}) and the two ladders."""
    m_max = config.m_max if m_max is None else m_max
    if m_max < 0:
        raise ValueError(f"m_max must be >= 0, got {m_max}")
    m = np.arange(m_max + 1)

    def v(a: int, b: int) -> float:
        return overlap(a, b, config, consts, method)

    diag = np.array([v(i, i) for i in m])
    skip = np.array([v(i - 1, i + 1) for i in m])
    up = np.array([v(i, i + 1) for i in m])
    down = np.array([v(i, i - 1) for i in m])
    root, root_next = np.sqrt(m), np.sqrt(m + 1)
    logger.debug(f"series coefficients up to m={m_max} ({4 * (m_max + 1)} overlaps)")
    return SeriesCoefficients(
        m=m,
        alpha_plus=2.0 * (diag + skip),
        alpha_minus=2.0 * (diag - skip),
        beta_plus=-2.0 * (up + down),
        beta_minus=-2.0 * (up - down),
        omega_cyc=root_next - root,
        omega_zbw=root_next + root,
    )


class SeriesValue(NamedTuple):
    """Two in-plane components and the truncation-tail estimate."""

    first: Times
    second: Times
    tail: float


def tail_estimate(magnitudes: np.ndarray) -> float:
    """Remainder beyond the last term, extrapolated geometrically from the last two."""
    if magnitudes.size == 0:
        return 0.0
    last = float(magnitudes[-1])
    if magnitudes.size == 1 or last == 0.0:
        return last
    previous = float(magnitudes[-2])
    q = last / previous if previous > 0.0 else math.inf
    if q >= 1.0:
        logger.warning(f"Series terms are not decreasing (ratio {q:.3g}); tail estimate is the last two terms")
        return last + previous
    return last / (1.0 - q)


def _coefficients(config, consts, coefficients, m_max):
    if coefficients is not None:
        return coefficients
    return series_coefficients(config, consts, m_max=m_max)


def _select(coefficients: SeriesCoefficients, levels: Optional[np.ndarray]) -> SeriesCoefficients:
    if levels is None:
        return coefficients
    return SeriesCoefficients(
        **{name: getattr(coefficients, name)[levels] for name in SeriesCoefficients.__dataclass_fields__}
    )


def _velocity_terms(c: SeriesCoefficients, t: Times, include_zbw: bool):
    wt_c = np.multiply.outer(np.asarray(t, dtype=float), c.omega_cyc)
    wt_z = np.multiply.outer(np.asarray(t, dtype=float), c.omega_zbw)
    zbw = 1.0 if include_zbw else 0.0
    v1 = V_F_NATURAL * (c.alpha_plus * np.cos(wt_c) + zbw * c.alpha_minus * np.cos(wt_z))
    v2 = V_F_NATURAL * (c.beta_plus * np.sin(wt_c) + zbw * c.beta_minus * np.sin(wt_z))
    magnitude = V_F_NATURAL * np.maximum(
        np.abs(c.alpha_plus) + zbw * np.abs(c.alpha_minus),
        np.abs(c.beta_plus) + zbw * np.abs(c.beta_minus),
    )
    return v1, v2, magnitude


def _position_terms(c: SeriesCoefficients, t: Times, include_zbw: bool):
    wt_c = np.multiply.outer(np.asarray(t, dtype=float), c.omega_cyc)
    wt_z = np.multiply.outer(np.asarray(t, dtype=float), c.omega_zbw)
    zbw = 1.0 if include_zbw else 0.0
    r1 = V_F_NATURAL * (c.alpha_plus / c.omega_cyc * np.sin(wt_c) + zbw * c.alpha_minus / c.omega_zbw * np.sin(wt_z))
    r2 = -V_F_NATURAL * (c.beta_plus / c.omega_cyc * np.cos(wt_c) + zbw * c.beta_minus / c.omega_zbw * np.cos(wt_z))
    magnitude = V_F_NATURAL * np.maximum(
        np.abs(c.alpha_plus) / c.omega_cyc + zbw * np.abs(c.alpha_minus) / c.omega_zbw,
        np.abs(c.beta_plus) / c.omega_cyc + zbw * np.abs(c.beta_minus) / c.omega_zbw,
    )
    return r1, r2, magnitude


def velocity_series(
    config: GrapheneConfig,
    t: Times,
    include_zbw: bool = True,
    consts: PhysicalConstants = SI_CONSTANTS,
    coefficients: Optional[SeriesCoefficients] = None,
    m_max: Optional[int] = None,
) -> SeriesValue:
    """<dr_1/dt>, <dr_2/dt> truncated at m_max, in units of L Omega."""
    c = _coefficients(config, consts, coefficients, m_max)
    v1, v2, magnitude = _velocity_terms(c, t, include_zbw)
    return SeriesValue(first=v1.sum(axis=-1), second=v2.sum(axis=-1), tail=tail_estimate(magnitude))


def position_series(
    config: GrapheneConfig,
    t: Times,
    include_zbw: bool = True,
    consts: PhysicalConstants = SI_CONSTANTS,
    coefficients: Optional[SeriesCoefficients] = None,
    m_max: Optional[int] = None,
) -> SeriesValue:
    """<r_1>, <r_2> truncated at m_max, in units of L."""
    c = _coefficients(config, consts, coefficients, m_max)
    r1, r2, magnitude = _position_terms(c, t, include_zbw)
    return SeriesValue(first=r1.sum(axis=-1), second=r2.sum(axis=-1), tail=tail_estimate(magnitude))


def single_level_position(
    m0: int,
    config: GrapheneConfig,
    t: Times,
    include_zbw: bool = True,
    consts: PhysicalConstants = SI_CONSTANTS,
    coefficients: Optional[SeriesCoefficients] = None,
) -> SeriesValue:
    """Position keeping only the m = m0 terms of the series."""
    c = _coefficients(config, consts, coefficients, None)
    if not 0 <= m0 <= c.m_max:
        raise ValueError(f"m0 must lie in 0..{c.m_max}, got {m0}")
    r1, r2, _ = _position_terms(_select(c, np.array([m0])), t, include_zbw)
    return SeriesValue(first=r1.sum(axis=-1), second=r2.sum(axis=-1), tail=0.0)


def zero_level_closed_form(
    config: GrapheneConfig,
    t: Times,
    include_zbw: bool = True,
    consts: PhysicalConstants = SI_CONSTANTS,
) -> SeriesValue:
    """r_1 = (4 v_F V_00 / Omega) sin(Omega t), r_2 = (4 v_F V_01 / Omega) cos(Omega t).

    Overlaps come from quadrature. Without the ZBW terms both amplitudes halve.
    """
    weight = 4.0 if include_zbw else 2.0
    v00 = overlap(0, 0, config, consts)
    v01 = overlap(0, 1, config, consts)
    t = np.asarray(t, dtype=float)
    r1 = weight * V_F_NATURAL * v00 * np.sin(t)
    r2 = weight * V_F_NATURAL * v01 * np.cos(t)
    return SeriesValue(first=r1, second=r2, tail=0.0)


def truncated_hamiltonian_oracle(
    config: Optional[GrapheneConfig],
    dim: int,
    levels: Optional[int] = None,
    consts: PhysicalConstants = SI_CONSTANTS,
) -> np.ndarray:
    """Sorted eigenvalues (units of hbar Omega) of v_F (sigma_1 pi_1 + sigma_2 pi_2) on a truncated basis.

    pi_1 = (a + a^dagger) / sqrt(2) and pi_2 = -i s (a - a^dagger) / sqrt(2) in
    units of hbar / L, with s the sign of e B_eta, so [pi_1, pi_2] = i s.

    Args:
        config: Scenario (only the field sign is used); None means s = +1
        dim: Matrix size, 2 x oscillator states
        levels: Highest Landau level the caller will read off

    Raises:
        ValueError: If dim is odd, below 2, or too small for ``levels``
    """
    if dim < 2 or dim % 2:
        raise ValueError(f"dim must be an even number >= 2, got {dim}")
    if levels is not None and levels > dim // 4:
        raise ValueError(f"dim={dim} resolves levels up to {dim // 4}, requested {levels}")
    sign = 1.0
    if config is not None:
        sign = math.copysign(1.0, resolve_scales(config, consts).eta3)

    n = dim // 2
    a = np.diag(np.sqrt(np.arange(1, n)), k=1).astype(np.complex128)
    pi1 = (a + a.conj().T) / math.sqrt(2.0)
    pi2 = -1j * sign * (a - a.conj().T) / math.sqrt(2.0)
    sigma1 = np.array([[0, 1], [1, 0]], dtype=np.complex128)
    sigma2 = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
    hamiltonian = V_F_NATURAL * (np.kron(sigma1, pi1) + np.kron(sigma2, pi2))
    return np.sort(linalg.eigvalsh(hamiltonian))
