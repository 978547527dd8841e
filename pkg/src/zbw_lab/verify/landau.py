"""Checks for the Landau spectrum with and without eta."""

import numpy as np

from ..constants import NATURAL
from ..dirac_packet import Spin
from ..landau import LandauQuery, landau_energy, landau_level, nc_landau_level
from .base import Comparison, check

MODULE = "nc-momentum-landau"

DRAWS = 20


@check(MODULE, "spin up with n - l = 2(k - 1) and spin down with n - l = 2k share E^2")
def degeneracy_identity() -> Comparison:
    rng = np.random.default_rng(1)
    up, down = [], []
    for _ in range(DRAWS):
        k = int(rng.integers(1, 12))
        B3 = float(rng.uniform(0.01, 5.0))
        p3 = float(rng.normal())
        # |l| <= k - 1 keeps n >= |l| for both states
        l = int(rng.integers(-(k - 1), k))
        up.append(landau_energy(LandauQuery(p3=p3, B3=B3, n=2 * (k - 1) + l, l=l, spin=Spin.UP)))
        down.append(landau_energy(LandauQuery(p3=p3, B3=B3, n=2 * k + l, l=l, spin=Spin.DOWN)))
    return Comparison(expected=down, actual=up, tolerance=1e-14)


@check(MODULE, "the degeneracy is lifted at the zero level: one spin branch")
def zero_level_single_branch() -> bool:
    level = landau_level(0, p3=0.0, B3=1.0)
    expected = [(n, n, Spin.DOWN.value) for n in range(7)]
    return level.branches == [Spin.DOWN.value] and level.degenerate_states == expected


@check(MODULE, "the eta spectrum does not depend on the sign of the charge")
def charge_independent() -> Comparison:
    electron = [nc_landau_level(k, 0.3, 0.8, charge=-1.0).energy for k in range(6)]
    positron = [nc_landau_level(k, 0.3, 0.8, charge=1.0).energy for k in range(6)]
    return Comparison(expected=electron, actual=positron, tolerance=0.0, mode="absolute")


@check(MODULE, "E >= m_e c^2 at p_3 = 0")
def above_rest_energy() -> bool:
    rest = NATURAL.m_e * NATURAL.c**2
    return all(
        landau_level(k, 0.0, B3, charge=charge).energy >= rest
        for k in range(5)
        for B3 in (0.1, 2.0, -1.5)
        for charge in (-1.0, 1.0)
    )
