"""Uniformly accelerated frames and the exact phase map between them.

The coordinate change x = x' + Z(t), t = t' to a rigidly accelerating frame
maps solutions of the inertial Schroedinger equation onto solutions of the
accelerated-frame equation once the wavefunction is multiplied by

    exp( i [ -m Zdot . x' - (m/2) integral_0^t Zdot^2 ds ] / hbar ).

For a two-particle system the induced potential regroups as
M Zdotdot . R': the acceleration couples only to the center of mass, with
effective gravitational mass equal to the total inertial mass M, and leaves
the internal dynamics untouched for every mass configuration.  That is the
structural contrast with a real uniform field, whose internal coupling is
the mass asymmetry times g.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainEscapeError, UndefinedRatioError
from .masses import MassModel, derive_composites
from .wavepacket import (
    PropagationSpec,
    Wavefunction1D,
    fidelity,
    gaussian_packet,
    propagate,
)

__all__ = [
    "FrameTrajectory",
    "PhaseField",
    "AcceleratedHamiltonian",
    "FrameDiscrepancy",
    "FrameCheckResult",
    "phase_field",
    "accelerated_hamiltonian",
    "frame_discrepancy",
    "transform_wavefunction",
    "frame_equivalence_check",
]

SUPPORT_REL_TOL = 1e-9
EDGE_MARGIN_CELLS = 8


@dataclass(frozen=True)
class FrameTrajectory:
    """Rigid frame with constant acceleration, coincident and at rest at t = 0."""

    acceleration: tuple[float, float, float]

    def __post_init__(self) -> None:
        if len(self.acceleration) != 3 or not all(map(math.isfinite, self.acceleration)):
            raise ValueError("acceleration must be a finite 3-vector")

    def displacement(self, t: float) -> np.ndarray:
        """Z(t) = a t^2 / 2."""
        return 0.5 * np.asarray(self.acceleration) * t * t

    def velocity(self, t: float) -> np.ndarray:
        """Zdot(t) = a t."""
        return np.asarray(self.acceleration) * t

    def speed_squared_integral(self, t: float) -> float:
        """integral_0^t |Zdot|^2 ds = |a|^2 t^3 / 3."""
        a2 = float(np.dot(self.acceleration, self.acceleration))
        return a2 * t**3 / 3.0


@dataclass(frozen=True)
class PhaseField:
    """Coefficients of the frame-change phase for a two-particle state.

    The gradient of the phase with respect to each particle coordinate is the
    linear coefficient divided by hbar; the time part collects the kinetic
    action of the frame motion.
    """

    electron_coefficient: tuple[float, float, float]  # -m_e Zdot, momentum units
    proton_coefficient: tuple[float, float, float]    # -m_p Zdot
    time_part: float                                  # -(M/2) integral Zdot^2, action units


def phase_field(model: MassModel, trajectory: FrameTrajectory, t: float) -> PhaseField:
    """Phase coefficients of the frame change at time ``t``."""
    v = trajectory.velocity(t)
    total = model.m_e + model.m_p
    return PhaseField(
        electron_coefficient=tuple(-model.m_e * v),
        proton_coefficient=tuple(-model.m_p * v),
        time_part=-0.5 * total * trajectory.speed_squared_integral(t),
    )


@dataclass(frozen=True)
class AcceleratedHamiltonian:
    """Coupling structure seen by a uniformly accelerated observer."""

    cm_coupling: float          # N, = M |a|
    internal_coupling: float    # N, identically zero
    effective_grav_mass: float  # kg, = M for every configuration


def accelerated_hamiltonian(model: MassModel, accel) -> AcceleratedHamiltonian:
    """Coupling record in the frame accelerating with ``accel`` (m/s^2 3-vector)."""
    a = np.asarray(accel, dtype=float)
    if a.shape != (3,) or not np.all(np.isfinite(a)):
        raise ValueError("acceleration must be a finite 3-vector")
    total = model.m_e + model.m_p
    return AcceleratedHamiltonian(
        cm_coupling=total * float(np.linalg.norm(a)),
        internal_coupling=0.0,
        effective_grav_mass=total,
    )


@dataclass(frozen=True)
class FrameDiscrepancy:
    """How a real field and an equal-magnitude acceleration differ."""

    cm_mass_ratio: float                 # M / Mbar
    internal_coupling_difference: float  # N, |A| * magnitude


def frame_discrepancy(model: MassModel, magnitude: float) -> FrameDiscrepancy:
    """Field-versus-acceleration contrast for a field/acceleration of ``magnitude``."""
    if magnitude < 0.0:
        raise ValueError("magnitude must be non-negative")
    comp = derive_composites(model)
    if comp.grav_total_mass == 0.0:
        raise UndefinedRatioError("total gravitational mass is zero; ratio undefined")
    return FrameDiscrepancy(
        cm_mass_ratio=comp.total_mass / comp.grav_total_mass,
        internal_coupling_difference=abs(comp.mass_asymmetry) * magnitude,
    )


def transform_wavefunction(
    state: Wavefunction1D,
    trajectory: FrameTrajectory,
    particle_mass: float,
    t: float,
    axis: tuple[float, float, float] = (0.0, 0.0, 1.0),
    hbar: float = 1.0,
) -> Wavefunction1D:
    """View a 1D single-particle state from the accelerated frame at time ``t``.

    Returns exp(i Phi) psi(x' + Z(t)) with
    Phi = [-m Zdot x' - (m/2) integral_0^t Zdot^2 ds] / hbar, the trajectory
    projected on the grid axis.  The coordinate shift uses band-limited
    (spectral) interpolation, so the map is unitary up to rounding.  Raises
    ``DomainEscapeError`` when the shifted support would leave the grid.
    """
    if t < 0.0:
        raise ValueError("t must be non-negative")
    if particle_mass <= 0.0:
        raise ValueError("particle mass must be positive")
    a = float(np.dot(trajectory.acceleration, axis))
    z = 0.5 * a * t * t
    v = a * t
    action = a * a * t**3 / 3.0

    psi = state.samples
    peak = float(np.max(np.abs(psi)))
    x = state.grid()
    if peak > 0.0 and z != 0.0:
        support = np.nonzero(np.abs(psi) >= SUPPORT_REL_TOL * peak)[0]
        lo = x[support[0]] - z
        hi = x[support[-1]] - z
        margin = EDGE_MARGIN_CELLS * state.dx
        if lo < state.x_min + margin or hi > state.x_max - margin:
            raise DomainEscapeError(
                f"support shifted by {-z:+.3g} leaves the grid "
                f"[{state.x_min}, {state.x_max}]"
            )

    k = 2.0 * math.pi * np.fft.fftfreq(state.point_count, d=state.dx)
    shifted = np.fft.ifft(np.fft.fft(psi) * np.exp(1j * k * z))
    phase = np.exp(1j * (-particle_mass * v * x - 0.5 * particle_mass * action) / hbar)
    return Wavefunction1D(
        samples=phase * shifted,
        x_min=state.x_min,
        x_max=state.x_max,
        point_count=state.point_count,
    )


@dataclass(frozen=True)
class FrameCheckResult:
    fidelity: float
    max_pointwise_error: float
    grid: int
    steps: int


def _free_potential(x: np.ndarray, t: float) -> np.ndarray:
    return np.zeros_like(x)


def frame_equivalence_check(
    acceleration: float = 1.0,
    total_time: float = 1.0,
    grid_points: int = 2048,
    steps: int = 4096,
    mass: float = 1.0,
    hbar: float = 1.0,
    x_min: float = -24.0,
    x_max: float = 24.0,
    sigma: float = 1.0,
    center: float = 0.0,
    momentum: float = 0.0,
) -> FrameCheckResult:
    """Numerical check that the frame map commutes with time evolution.

    Path A propagates freely in the inertial frame and transforms at the final
    time; path B transforms the initial data (the identity at t = 0) and
    propagates under the accelerated-frame potential m a x'.  Exact frame
    equivalence means the two paths agree.
    """
    trajectory = FrameTrajectory(acceleration=(0.0, 0.0, float(acceleration)))
    initial = gaussian_packet(
        x_min, x_max, grid_points, center=center, sigma=sigma, momentum=momentum
    )
    dt = total_time / steps

    inertial = propagate(
        initial, PropagationSpec(potential=_free_potential, mass=mass, dt=dt, steps=steps, hbar=hbar)
    )
    path_a = transform_wavefunction(inertial, trajectory, mass, total_time, hbar=hbar)

    def accelerated_potential(x: np.ndarray, t: float) -> np.ndarray:
        return mass * acceleration * x

    path_b = propagate(
        initial,
        PropagationSpec(potential=accelerated_potential, mass=mass, dt=dt, steps=steps, hbar=hbar),
    )
    err = float(np.max(np.abs(path_a.samples - path_b.samples)))
    return FrameCheckResult(
        fidelity=fidelity(path_a, path_b),
        max_pointwise_error=err,
        grid=grid_points,
        steps=steps,
    )
