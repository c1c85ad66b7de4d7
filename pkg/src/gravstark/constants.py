"""Physical constants (CODATA 2018, frozen) and Hartree atomic-unit scales.

Every other module obtains hbar, c, alpha, charges and reference masses from
here.  Internal numerics run in atomic units built from the reduced mass of
the active mass configuration; SI values appear only at module boundaries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "PhysicalConstants",
    "AtomicUnitScale",
    "codata_defaults",
    "atomic_scale",
]


@dataclass(frozen=True)
class PhysicalConstants:
    """A mutually consistent set of SI constants."""

    hbar: float      # J s
    c: float         # m / s
    alpha: float     # dimensionless fine-structure constant
    e_charge: float  # C
    eps0: float      # F / m
    m_e_ref: float   # kg, reference electron mass
    m_p_ref: float   # kg, reference proton mass

    def __post_init__(self) -> None:
        for name in ("hbar", "c", "alpha", "e_charge", "eps0", "m_e_ref", "m_p_ref"):
            value = getattr(self, name)
            if not (value > 0.0 and math.isfinite(value)):
                raise ValueError(f"{name} must be strictly positive and finite")
        derived = self.e_charge**2 / (4.0 * math.pi * self.eps0 * self.hbar * self.c)
        if abs(derived - self.alpha) > 1e-9 * self.alpha:
            raise ValueError("alpha disagrees with e^2/(4 pi eps0 hbar c)")


@dataclass(frozen=True)
class AtomicUnitScale:
    """Hartree-style unit scales built from one reduced mass.

    energy_hartree = mu c^2 alpha^2 and length_bohr = hbar/(mu c alpha); the
    remaining scales follow from those two.
    """

    reduced_mass: float    # kg
    energy_hartree: float  # J
    length_bohr: float     # m
    time_atomic: float     # s
    force_atomic: float    # N

    def __post_init__(self) -> None:
        for name in ("reduced_mass", "energy_hartree", "length_bohr", "time_atomic", "force_atomic"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be strictly positive")
        if abs(self.force_atomic - self.energy_hartree / self.length_bohr) > 1e-12 * self.force_atomic:
            raise ValueError("force_atomic disagrees with energy_hartree / length_bohr")


def codata_defaults() -> PhysicalConstants:
    """CODATA 2018 values (exact where the SI defines them exactly)."""
    return PhysicalConstants(
        hbar=1.0545718176461565e-34,  # h / (2 pi), h = 6.62607015e-34 J s exact
        c=299792458.0,
        alpha=7.2973525693e-3,
        e_charge=1.602176634e-19,
        eps0=8.8541878128e-12,
        m_e_ref=9.1093837015e-31,
        m_p_ref=1.67262192369e-27,
    )


def atomic_scale(constants: PhysicalConstants, mu: float) -> AtomicUnitScale:
    """Atomic-unit scales for the reduced mass ``mu`` (kg)."""
    if not (mu > 0.0 and math.isfinite(mu)):
        raise ValueError("reduced mass must be strictly positive and finite")
    energy = mu * constants.c**2 * constants.alpha**2
    length = constants.hbar / (mu * constants.c * constants.alpha)
    return AtomicUnitScale(
        reduced_mass=mu,
        energy_hartree=energy,
        length_bohr=length,
        time_atomic=constants.hbar / energy,
        force_atomic=energy / length,
    )
