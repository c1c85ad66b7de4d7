"""1D time-dependent Schroedinger propagation with a spectral kinetic step.

Strang splitting per step,

    exp(-i V dt / 2 hbar) exp(-i T dt / hbar) exp(-i V dt / 2 hbar),

with the kinetic factor applied in momentum space on a periodic grid.  The
potential is sampled at the midpoint of each step, which keeps second-order
accuracy for time-dependent potentials.  The grid must be a power of two and
sized so the wavepacket support stays at least eight grid spacings away from
the boundary; this is asserted while propagating.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (
    BoundaryEscapeError,
    PropagationError,
    StabilityBoundError,
)

__all__ = [
    "Wavefunction1D",
    "PropagationSpec",
    "gaussian_packet",
    "propagate",
    "fidelity",
    "mean_momentum",
]

BOUNDARY_CELLS = 8
BOUNDARY_REL_TOL = 1e-9
CHECK_INTERVAL = 64


def _is_power_of_two(n: int) -> bool:
    return n > 0 and (n & (n - 1)) == 0


@dataclass(eq=False)
class Wavefunction1D:
    """Complex amplitudes on a uniform periodic grid x_min + j dx, j = 0..N-1."""

    samples: np.ndarray
    x_min: float
    x_max: float
    point_count: int

    def __post_init__(self) -> None:
        if not _is_power_of_two(self.point_count) or self.point_count < 256:
            raise ValueError("point_count must be a power of two, at least 256")
        if not self.x_max > self.x_min:
            raise ValueError("need x_max > x_min")
        self.samples = np.asarray(self.samples, dtype=np.complex128)
        if self.samples.shape != (self.point_count,):
            raise ValueError("sample count disagrees with point_count")
        if not np.all(np.isfinite(self.samples.view(float))):
            raise ValueError("samples must be finite")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / self.point_count

    def grid(self) -> np.ndarray:
        return self.x_min + self.dx * np.arange(self.point_count)

    def norm(self) -> float:
        return math.sqrt(float(np.sum(np.abs(self.samples) ** 2)) * self.dx)


def gaussian_packet(
    x_min: float,
    x_max: float,
    point_count: int,
    center: float = 0.0,
    sigma: float = 1.0,
    momentum: float = 0.0,
) -> Wavefunction1D:
    """Normalized Gaussian of position width ``sigma`` carrying mean ``momentum``."""
    state = Wavefunction1D(
        samples=np.zeros(point_count, dtype=np.complex128),
        x_min=x_min,
        x_max=x_max,
        point_count=point_count,
    )
    x = state.grid()
    psi = np.exp(-((x - center) ** 2) / (4.0 * sigma**2) + 1j * momentum * (x - center))
    state.samples = psi / (math.sqrt(float(np.sum(np.abs(psi) ** 2)) * state.dx))
    return state


@dataclass(frozen=True)
class PropagationSpec:
    """Potential, mass, and stepping of one propagation run.

    ``potential(x, t)`` must be evaluable on the whole grid at every midpoint
    time.  ``dt`` may be negative (backward propagation); the spectral
    stability bound |dt| E_kin_max / hbar < pi is enforced when propagation
    starts.
    """

    potential: Callable[[np.ndarray, float], np.ndarray]
    mass: float
    dt: float
    steps: int
    hbar: float = 1.0
    t0: float = 0.0

    def __post_init__(self) -> None:
        if self.dt == 0.0 or not math.isfinite(self.dt):
            raise ValueError("dt must be nonzero and finite")
        if self.steps < 1:
            raise ValueError("steps must be at least 1")
        if self.mass <= 0.0 or self.hbar <= 0.0:
            raise ValueError("mass and hbar must be positive")


def _check_health(psi: np.ndarray, step: int) -> None:
    peak = float(np.max(np.abs(psi)))
    if not math.isfinite(peak) or peak == 0.0:
        raise PropagationError(f"non-finite or vanished amplitudes at step {step}")
    edge = max(
        float(np.max(np.abs(psi[:BOUNDARY_CELLS]))),
        float(np.max(np.abs(psi[-BOUNDARY_CELLS:]))),
    )
    if edge > BOUNDARY_REL_TOL * peak:
        raise BoundaryEscapeError(
            f"wavepacket reached the grid boundary at step {step} "
            f"(edge/peak = {edge / peak:.2e})"
        )


def propagate(state: Wavefunction1D, spec: PropagationSpec) -> Wavefunction1D:
    """Evolve ``state`` through ``spec.steps`` Strang-split steps."""
    dx = state.dx
    x = state.grid()
    k = 2.0 * math.pi * np.fft.fftfreq(state.point_count, d=dx)
    k_max = math.pi / dx
    if abs(spec.dt) * spec.hbar * k_max**2 / (2.0 * spec.mass) >= math.pi:
        raise StabilityBoundError(
            "time step violates |dt| * E_kin_max / hbar < pi; "
            "shrink dt or coarsen the grid"
        )
    kinetic = np.exp(-1j * spec.hbar * k**2 * spec.dt / (2.0 * spec.mass))

    psi = state.samples.copy()
    for step in range(spec.steps):
        t_mid = spec.t0 + (step + 0.5) * spec.dt
        v = np.asarray(spec.potential(x, t_mid), dtype=float)
        half = np.exp(-0.5j * v * spec.dt / spec.hbar)
        psi *= half
        psi = np.fft.ifft(np.fft.fft(psi) * kinetic)
        psi *= half
        if step % CHECK_INTERVAL == CHECK_INTERVAL - 1 or step == spec.steps - 1:
            _check_health(psi, step)
    return Wavefunction1D(
        samples=psi, x_min=state.x_min, x_max=state.x_max, point_count=state.point_count
    )


def fidelity(a: Wavefunction1D, b: Wavefunction1D) -> float:
    """|<a|b>| / (||a|| ||b||), in [0, 1]; global phases drop out."""
    if (a.x_min, a.x_max, a.point_count) != (b.x_min, b.x_max, b.point_count):
        raise ValueError("states live on different grids")
    norm_a = a.norm()
    norm_b = b.norm()
    if norm_a == 0.0 or norm_b == 0.0:
        raise ValueError("fidelity of a zero-norm state is undefined")
    overlap = abs(complex(np.sum(np.conj(a.samples) * b.samples)) * a.dx)
    return min(1.0, overlap / (norm_a * norm_b))


def mean_momentum(state: Wavefunction1D, hbar: float = 1.0) -> float:
    """Expectation of the momentum operator via the spectral representation."""
    k = 2.0 * math.pi * np.fft.fftfreq(state.point_count, d=state.dx)
    spectrum = np.abs(np.fft.fft(state.samples)) ** 2
    total = float(np.sum(spectrum))
    if total == 0.0:
        raise ValueError("zero-norm state has no mean momentum")
    return float(hbar * np.sum(k * spectrum) / total)
