"""Checks for the Dirac matrices."""

import numpy as np

from ..spinor import ALPHA_STACK, GAMMA0, anticommutator, identity
from .base import Comparison, check

MODULE = "spinor-algebra"


@check(MODULE, "{alpha_i, alpha_j} = 2 delta_ij")
def alpha_clifford() -> Comparison:
    actual = np.array([[anticommutator(a, b) for b in ALPHA_STACK] for a in ALPHA_STACK])
    expected = np.array([[2.0 * (i == j) * identity(4) for j in range(3)] for i in range(3)])
    return Comparison(expected=expected, actual=actual, tolerance=0.0, mode="absolute")


@check(MODULE, "{alpha_i, beta} = 0 and beta^2 = 1")
def alpha_beta_anticommute() -> Comparison:
    actual = np.array([anticommutator(a, GAMMA0) for a in ALPHA_STACK] + [GAMMA0 @ GAMMA0 - identity(4)])
    return Comparison(expected=np.zeros_like(actual), actual=actual, tolerance=0.0, mode="absolute")


@check(MODULE, "alpha_i and beta are Hermitian")
def hermitian() -> Comparison:
    matrices = np.concatenate([ALPHA_STACK, GAMMA0[None]])
    return Comparison(
        expected=matrices,
        actual=np.conj(np.swapaxes(matrices, -1, -2)),
        tolerance=0.0,
        mode="absolute",
    )
