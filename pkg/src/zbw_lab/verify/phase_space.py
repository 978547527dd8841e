"""Checks for the noncommutative phase-space algebra."""

import numpy as np

from ..nc_phase_space import (
    NCParams,
    PhasePoint,
    bopp_roundtrip_residual,
    build_symplectic,
    closed_form_brackets,
    verify_brackets,
)
from .base import Comparison, check

MODULE = "nc-phase-space"

PARAMS = NCParams(theta=[0.3, -0.2, 0.5], eta=[0.1, 0.4, -0.25])


def _stack(table) -> np.ndarray:
    return np.stack([table.xx, table.pp, table.xp])


@check(MODULE, "[x_i, x_j] = i theta_ij, [p_i, p_j] = i eta_ij, [x_i, p_j] = i hbar (delta_ij + theta_ik eta_jk / 4 hbar^2)")
def bracket_families() -> Comparison:
    return Comparison(
        expected=_stack(closed_form_brackets(PARAMS)),
        actual=_stack(verify_brackets(PARAMS)),
        tolerance=1e-14,
    )


@check(MODULE, "symplectic matrix matches the bracket table")
def symplectic_structure() -> Comparison:
    table = verify_brackets(PARAMS)
    # {z_a, z_b} = -i [z_a, z_b] / hbar with hbar = 1
    brackets = -1j * np.block([[table.xx, table.xp], [-table.xp.T, table.pp]])
    return Comparison(expected=brackets.real, actual=build_symplectic(PARAMS).alpha_matrix, tolerance=1e-14)


@check(MODULE, "the Bopp shift inverts up to second order in the parameters")
def bopp_roundtrip_quadratic() -> Comparison:
    point = PhasePoint(x=np.array([0.7, -1.2, 0.4]), p=np.array([0.5, 0.3, -0.9]))
    full = bopp_roundtrip_residual(point, PARAMS)
    half = bopp_roundtrip_residual(point, PARAMS.scaled(0.5))
    return Comparison(expected=4.0, actual=full / half, tolerance=1e-10)
