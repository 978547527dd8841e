"""Verification suite: closed forms against independent oracles.

Importing this package registers every check.
"""

from typing import Any, Dict, Optional

from ..constants import NATURAL, SI_CONSTANTS
from ..nc_phase_space import SYMPLECTIC_CONVENTION
from ..quadrature import DEFAULT_TOL, RNG_ALGORITHM
from . import graphene, landau, moment, packet, phase_space, quadrature, spinor, units, zbw  # noqa: F401
from .base import MODULES, Check, CheckRegistry, CheckResult, Comparison, VerifyReport, check, registry


def verify(suite: str = "all", metadata: Optional[Dict[str, Any]] = None) -> VerifyReport:
    """Run the checks of one module, or all of them.

    Args:
        suite: ``all`` or a module name from :data:`MODULES`
        metadata: Extra entries for the report metadata

    Returns:
        Report whose ``failed`` list is empty when every check passed
    """
    context = {
        "constants": {"SI": SI_CONSTANTS.model_dump(), "natural": NATURAL.model_dump()},
        "frames": {"dirac": "DiracNatural", "graphene": "GrapheneNatural"},
        "tolerance": DEFAULT_TOL,
        "rng": RNG_ALGORITHM,
        "seeds": {"degeneracy_draws": 1, "packet_samples": 0, "monte_carlo": 0},
        "truncation": {"graphene_m_max": 32},
        "symplectic_convention": SYMPLECTIC_CONVENTION,
        **(metadata or {}),
    }
    return registry.run(suite, metadata=context)


__all__ = [
    "MODULES",
    "Check",
    "CheckRegistry",
    "CheckResult",
    "Comparison",
    "VerifyReport",
    "check",
    "registry",
    "verify",
]
