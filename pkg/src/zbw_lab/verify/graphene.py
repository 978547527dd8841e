"""Checks for the graphene zitterbewegung series."""

import math

import numpy as np

from ..constants import SI_CONSTANTS
from ..graphene import (
    V_F_NATURAL,
    GrapheneConfig,
    analytic_overlap_00,
    big_omega_forms,
    graphene_energy,
    overlap,
    overlap_ratio_01_closed_form,
    position_series,
    resolve_scales,
    series_coefficients,
    single_level_position,
    truncated_hamiltonian_oracle,
    uncorrected_overlap_00,
    velocity_series,
    zero_level_closed_form,
)
from .base import Comparison, check

MODULE = "graphene-zbw"

DEFAULT = GrapheneConfig()
# wide packet, no drift: fast and strictly decreasing series
COMPACT = GrapheneConfig(L_over_ell=1.5, k0x_ell=0.0)


@check(MODULE, "B_eta = 8.6e-14 T gives L ~ 8.7 cm")
def magnetic_radius_bound() -> Comparison:
    return Comparison(expected=0.087, actual=resolve_scales(DEFAULT, SI_CONSTANTS).L, tolerance=2e-2)


@check(MODULE, "B_eta = 8.6e-14 T gives Omega ~ 1.6e7 1/s")
def landau_frequency_bound() -> Comparison:
    return Comparison(expected=1.6e7, actual=big_omega_forms(DEFAULT)[1], tolerance=2e-2)


@check(MODULE, "Omega = sqrt(2 |e B_eta| / hbar) v_F = sqrt(2 |eta_3|) v_F / hbar")
def omega_forms_agree() -> Comparison:
    field_form, eta_form = big_omega_forms(DEFAULT)
    return Comparison(expected=eta_form, actual=field_form, tolerance=1e-12)


@check(MODULE, "V_mm' = V_m'm")
def overlap_symmetry() -> Comparison:
    pairs = [(m, n) for m in range(9) for n in range(m + 1, 9)]
    return Comparison(
        expected=[overlap(m, n, DEFAULT) for m, n in pairs],
        actual=[overlap(n, m, DEFAULT) for m, n in pairs],
        tolerance=1e-12,
    )


@check(MODULE, "w_cyc w_zbw = Omega^2")
def frequency_product() -> Comparison:
    c = series_coefficients(COMPACT, m_max=32)
    return Comparison(expected=np.ones(c.m.size), actual=c.omega_cyc * c.omega_zbw, tolerance=1e-12)


@check(MODULE, "velocity series is the time derivative of the position series")
def velocity_is_derivative() -> Comparison:
    c = series_coefficients(DEFAULT)
    t = np.linspace(0.1, 6.0, 20)
    h = 1e-5
    ahead = position_series(DEFAULT, t + h, coefficients=c)
    behind = position_series(DEFAULT, t - h, coefficients=c)
    velocity = velocity_series(DEFAULT, t, coefficients=c)
    return Comparison(
        expected=np.stack([velocity.first, velocity.second]),
        actual=np.stack([(ahead.first - behind.first) / (2 * h), (ahead.second - behind.second) / (2 * h)]),
        tolerance=1e-6,
    )


@check(MODULE, "alpha_0^+ = alpha_0^- and w_0^cyc = w_0^zbw = Omega")
def zero_level_coefficients() -> bool:
    c = series_coefficients(DEFAULT, m_max=1)
    return bool(c.alpha_plus[0] == c.alpha_minus[0] and c.omega_cyc[0] == c.omega_zbw[0] == 1.0)


@check(MODULE, "without the ZBW terms the amplitude of the motion is halved")
def zero_level_halving() -> Comparison:
    t = np.linspace(0.0, 2.0 * math.pi, 40)
    full = single_level_position(0, DEFAULT, t)
    cyclotron = single_level_position(0, DEFAULT, t, include_zbw=False)
    return Comparison(expected=2.0 * cyclotron.first, actual=full.first, tolerance=0.0, mode="absolute")


@check(MODULE, "the zero-level packet moves on a closed ellipse")
def ellipse_closure() -> Comparison:
    t = np.linspace(0.0, 2.0 * math.pi, 50)
    r = zero_level_closed_form(DEFAULT, t)
    a = 4.0 * V_F_NATURAL * overlap(0, 0, DEFAULT)
    b = 4.0 * V_F_NATURAL * overlap(0, 1, DEFAULT)
    return Comparison(expected=np.ones(t.size), actual=(r.first / a) ** 2 + (r.second / b) ** 2, tolerance=1e-10)


@check(MODULE, "truncation tail shrinks as more levels are kept")
def tail_decreases() -> bool:
    tails = [
        position_series(COMPACT, 0.0, coefficients=series_coefficients(COMPACT, m_max=m)).tail for m in (4, 8, 16, 32)
    ]
    return all(later < earlier for earlier, later in zip(tails, tails[1:]))


@check(MODULE, "E_sm = s hbar Omega sqrt(m)")
def hamiltonian_spectrum() -> Comparison:
    dim = 64
    n = dim // 2
    expected = sorted([graphene_energy(s, m) for s in (1, -1) for m in range(1, n)] + [0.0, 0.0])
    return Comparison(
        expected=np.array(expected),
        actual=truncated_hamiltonian_oracle(None, dim, levels=dim // 4),
        tolerance=1e-6,
        mode="absolute",
    )


@check(MODULE, "V_00 by completing the square")
def overlap_00_closed_form() -> Comparison:
    return Comparison(expected=overlap(0, 0, DEFAULT), actual=analytic_overlap_00(DEFAULT), tolerance=1e-10)


@check(MODULE, "V_00 closed form with (ell^2 - 1) in the exponent")
def uncorrected_overlap_00_audit() -> Comparison:
    return Comparison(
        expected=overlap(0, 0, DEFAULT),
        actual=uncorrected_overlap_00(DEFAULT),
        tolerance=1e-8,
        informational=True,
        detail="the exponent mixes a length^2 with a pure number; quadrature is the operative value",
    )


@check(MODULE, "V_01 / V_00 = sqrt(2) L^3 ell^2 k0x / (L^4 + L^2 ell^2 + ell^4)")
def overlap_ratio_01_audit() -> Comparison:
    return Comparison(
        expected=overlap(0, 1, DEFAULT) / overlap(0, 0, DEFAULT),
        actual=overlap_ratio_01_closed_form(DEFAULT),
        tolerance=1e-8,
        informational=True,
        detail="agreement here with disagreement on V_00 places the error in the uncorrected V_00 exponent",
    )
