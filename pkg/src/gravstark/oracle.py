"""Grid-based spectral machinery that cross-checks the closed forms.

Everything here works in Hartree atomic units of whichever reduced mass the
caller's unit scale was built from: lengths in Bohr radii, energies in
Hartree.  The radial equation for u(r) = r R(r),

    -(1/2) u'' + [ l(l+1)/(2 r^2) - 1/r ] u = E u,

is discretized with second-order central differences on a uniform grid whose
first point sits one spacing away from the origin, so the left Dirichlet
ghost node lies exactly at r = 0.  Quoted energies are Richardson
extrapolated over spacings h and h/2.

The n-manifold dipole matrix is assembled in the spherical (n, l, m) basis
from numerically computed radial states, diagonalized, and grouped into
distinct shifts; the closed-form splitting emerges from the diagonalization
instead of being assumed.  ``stabilization_scan`` diagnoses bound versus
continuum character by diagonalizing a half-axis model with a hard wall at
increasing box sizes: continuum level spacings shrink like 1/L, bound levels
converge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eigh_tridiagonal, eigvalsh_tridiagonal

from .constants import PhysicalConstants, atomic_scale
from .errors import (
    EigensolverError,
    EmptyWindowError,
    GridResolutionError,
)
from .masses import CompositeMasses
from .separation import FieldSpec

__all__ = [
    "RadialGrid",
    "SphericalState",
    "ManifoldMatrix",
    "ScanPoint",
    "radial_eigensolve",
    "dipole_matrix_element",
    "manifold_matrix",
    "degenerate_pt",
    "stabilization_scan",
]

RESIDUAL_CERTIFICATE = 1e-10   # per eigenpair, relative to a norm bound of H
DISCRETIZATION_GATE = 1e-5     # Hartree, estimated truncation error per level
GROUPING_REL_TOL = 1e-10       # relative tolerance for merging equal shifts


@dataclass(frozen=True)
class RadialGrid:
    """Uniform radial grid; the left Dirichlet ghost node sits at r_min - spacing."""

    r_min: float
    r_max: float
    point_count: int
    spacing: float

    def __post_init__(self) -> None:
        if not 0.0 < self.r_min < self.r_max:
            raise ValueError("need 0 < r_min < r_max")
        if self.point_count < 200:
            raise ValueError("point_count must be at least 200")
        implied = (self.r_max - self.r_min) / (self.point_count - 1)
        if abs(implied - self.spacing) > 1e-12 * self.spacing:
            raise ValueError("spacing disagrees with (r_max - r_min)/(point_count - 1)")

    @classmethod
    def from_spacing(cls, spacing: float, r_max: float) -> "RadialGrid":
        """Grid starting one spacing from the origin (hydrogen boundary layout)."""
        count = round(r_max / spacing)
        return cls(r_min=spacing, r_max=count * spacing, point_count=count, spacing=spacing)

    def points(self) -> np.ndarray:
        return self.r_min + self.spacing * np.arange(self.point_count)

    def refined(self) -> "RadialGrid":
        return RadialGrid.from_spacing(self.spacing / 2.0, self.r_max)


@dataclass(frozen=True, eq=False)
class SphericalState:
    """Radial samples R_nl(r) on a grid, with trapezoidal norm of R^2 r^2 equal to 1."""

    n: int
    l: int
    m: int
    grid: RadialGrid
    radial_samples: np.ndarray

    def __post_init__(self) -> None:
        if not 0 <= self.l < self.n:
            raise ValueError("need 0 <= l < n")
        if abs(self.m) > self.l:
            raise ValueError("need |m| <= l")
        if len(self.radial_samples) != self.grid.point_count:
            raise ValueError("sample count disagrees with grid")
        r = self.grid.points()
        norm = np.trapezoid(self.radial_samples**2 * r**2, dx=self.grid.spacing)
        if abs(norm - 1.0) > 1e-8:
            raise ValueError("radial samples are not normalized")


def _solve_radial(spacing: float, r_max: float, l: int, count: int):
    """Lowest ``count`` raw finite-difference eigenpairs at one spacing.

    Returns (energies, u-columns normalized by trapezoid, radii).  The sign
    convention makes each u positive just outside the origin.
    """
    n_points = round(r_max / spacing)
    if count > n_points - 1:
        raise ValueError("grid too small for the requested number of states")
    r = spacing * np.arange(1, n_points + 1)
    diag = 1.0 / spacing**2 + l * (l + 1) / (2.0 * r**2) - 1.0 / r
    off = np.full(n_points - 1, -0.5 / spacing**2)
    try:
        energies, vectors = eigh_tridiagonal(diag, off, select="i", select_range=(0, count - 1))
    except np.linalg.LinAlgError as exc:  # pragma: no cover - LAPACK failure path
        raise EigensolverError(f"tridiagonal eigensolver failed: {exc}") from exc

    # Certify each returned pair against a Gershgorin bound on ||H||.
    h_norm = float(np.max(np.abs(diag))) + 1.0 / spacing**2
    for i in range(count):
        v = vectors[:, i]
        hv = diag * v
        hv[:-1] += off * v[1:]
        hv[1:] += off * v[:-1]
        residual = float(np.linalg.norm(hv - energies[i] * v))
        if residual > RESIDUAL_CERTIFICATE * h_norm * float(np.linalg.norm(v)):
            raise EigensolverError(
                f"eigenpair {i} residual {residual:.3e} exceeds certificate"
            )

    for i in range(count):
        column = vectors[:, i]
        peak = np.max(np.abs(column))
        lead = column[np.argmax(np.abs(column) > 1e-6 * peak)]
        if lead < 0.0:
            vectors[:, i] = -column
        norm = math.sqrt(np.trapezoid(vectors[:, i] ** 2, dx=spacing))
        vectors[:, i] /= norm
    return energies, vectors, r


def radial_eigensolve(
    grid: RadialGrid, l: int, count: int
) -> list[tuple[float, SphericalState]]:
    """Lowest ``count`` eigenpairs of the radial Coulomb problem for angular momentum l.

    Energies (Hartree) are Richardson extrapolated over the grid spacing and
    half of it; states are sampled on the grid as given.  Raises
    ``GridResolutionError`` when the estimated truncation error of any level
    exceeds the accuracy gate, or when the box is too small to hold the
    highest requested state.
    """
    if not 1 <= count <= 10:
        raise ValueError("count must be in 1..10")
    if l < 0:
        raise ValueError("l must be non-negative")
    if abs(grid.r_min - grid.spacing) > 1e-9 * grid.spacing:
        raise ValueError("grid must start one spacing away from the origin")

    coarse, vectors, r = _solve_radial(grid.spacing, grid.r_max, l, count)
    fine, _, _ = _solve_radial(grid.spacing / 2.0, grid.r_max, l, count)
    estimate = np.abs(coarse - fine) / 3.0
    if np.max(estimate) > DISCRETIZATION_GATE:
        raise GridResolutionError(
            f"estimated discretization error {np.max(estimate):.3e} Hartree exceeds "
            f"{DISCRETIZATION_GATE:.0e}; refine the grid"
        )
    tail_start = int(0.95 * grid.point_count)
    for i in range(count):
        tail = float(np.trapezoid(vectors[tail_start:, i] ** 2, dx=grid.spacing))
        if tail > 1e-8:
            raise GridResolutionError(
                f"state {i} carries {tail:.2e} of its norm in the outer 5% of the box; "
                "increase r_max"
            )
    extrapolated = (4.0 * fine - coarse) / 3.0

    out = []
    for i in range(count):
        samples = vectors[:, i] / r
        state = SphericalState(n=l + 1 + i, l=l, m=0, grid=grid, radial_samples=samples)
        out.append((float(extrapolated[i]), state))
    return out


def _angular_z_factor(l_low: int, m: int) -> float:
    """<l_low + 1, m | cos(theta) | l_low, m> for spherical harmonics."""
    l_up = l_low + 1
    return math.sqrt((l_up**2 - m**2) / ((2.0 * l_low + 1.0) * (2.0 * l_low + 3.0)))


def dipole_matrix_element(bra: SphericalState, ket: SphericalState) -> float:
    """<bra| z |ket> in Bohr radii: radial quadrature times the analytic angular factor.

    Zero unless |l_bra - l_ket| = 1 and m_bra = m_ket.
    """
    if bra.grid != ket.grid:
        raise ValueError("states live on different grids")
    if bra.m != ket.m or abs(bra.l - ket.l) != 1:
        return 0.0
    r = bra.grid.points()
    radial = float(
        np.trapezoid(bra.radial_samples * ket.radial_samples * r**3, dx=bra.grid.spacing)
    )
    return radial * _angular_z_factor(min(bra.l, ket.l), bra.m)


@dataclass(frozen=True, eq=False)
class ManifoldMatrix:
    """The field coupling restricted to one n-manifold, in Hartree."""

    n: int
    dimension: int
    entries: np.ndarray

    def __post_init__(self) -> None:
        if self.dimension != self.n**2:
            raise ValueError("dimension must equal n^2")
        if self.entries.shape != (self.dimension, self.dimension):
            raise ValueError("entries shape disagrees with dimension")
        scale = float(np.max(np.abs(self.entries)))
        if float(np.max(np.abs(self.entries - self.entries.T))) > 1e-12 * (scale + 1e-300):
            raise ValueError("entries must be symmetric")


def _manifold_basis(n: int) -> list[tuple[int, int]]:
    return [(l, m) for l in range(n) for m in range(-l, l + 1)]


def _manifold_entries(n: int, force_atomic_units: float, spacing: float, r_max: float) -> np.ndarray:
    """Matrix of -F z within the n-manifold at one grid spacing, in Hartree."""
    u_states = {}
    r = None
    for l in range(n):
        _, vectors, r = _solve_radial(spacing, r_max, l, n - l)
        u_states[l] = vectors[:, n - l - 1]
    radial = {
        l: float(np.trapezoid(u_states[l] * u_states[l + 1] * r, dx=spacing))
        for l in range(n - 1)
    }
    basis = _manifold_basis(n)
    index = {p: i for i, p in enumerate(basis)}
    z = np.zeros((len(basis), len(basis)))
    for l in range(n - 1):
        for m in range(-l, l + 1):
            value = radial[l] * _angular_z_factor(l, m)
            i, j = index[(l, m)], index[(l + 1, m)]
            z[i, j] = value
            z[j, i] = value
    return -force_atomic_units * z


def _default_manifold_grid(n: int) -> tuple[float, float]:
    return 0.02, max(80.0, 40.0 * n)


def manifold_matrix(
    n: int,
    composites: CompositeMasses,
    field: FieldSpec,
    constants: PhysicalConstants,
    spacing: float | None = None,
    r_max: float | None = None,
) -> ManifoldMatrix:
    """The n-manifold coupling matrix in the spherical basis, in Hartree."""
    if not 1 <= n <= 4:
        raise ValueError("dense manifold construction supports n in 1..4")
    h0, box = _default_manifold_grid(n)
    spacing = h0 if spacing is None else spacing
    r_max = box if r_max is None else r_max
    scale = atomic_scale(constants, composites.reduced_mass)
    force = composites.mass_asymmetry * field.magnitude / scale.force_atomic
    return ManifoldMatrix(
        n=n, dimension=n**2, entries=_manifold_entries(n, force, spacing, r_max)
    )


def degenerate_pt(
    n: int,
    composites: CompositeMasses,
    field: FieldSpec,
    constants: PhysicalConstants,
    spacing: float | None = None,
    r_max: float | None = None,
) -> list[tuple[float, int]]:
    """Distinct first-order shifts (J) with multiplicities from dense diagonalization.

    Builds the n-manifold coupling matrix from numerically computed radial
    states at three nested spacings, diagonalizes each, extrapolates the
    sorted eigenvalues, and merges shifts that agree to ``GROUPING_REL_TOL``
    of the largest one.  Returned shifts ascend.
    """
    if not 1 <= n <= 4:
        raise ValueError("dense diagonalization supports n in 1..4")
    h0, box = _default_manifold_grid(n)
    spacing = h0 if spacing is None else spacing
    r_max = box if r_max is None else r_max

    scale = atomic_scale(constants, composites.reduced_mass)
    force = composites.mass_asymmetry * field.magnitude / scale.force_atomic

    def sorted_shifts(h: float) -> np.ndarray:
        return np.sort(np.linalg.eigvalsh(_manifold_entries(n, force, h, r_max)))

    s_h = sorted_shifts(spacing)
    s_h2 = sorted_shifts(spacing / 2.0)
    s_h4 = sorted_shifts(spacing / 4.0)
    # Two Richardson stages: the first removes the h^2 error, the second the
    # next surviving order.
    first_a = (4.0 * s_h2 - s_h) / 3.0
    first_b = (4.0 * s_h4 - s_h2) / 3.0
    shifts = (8.0 * first_b - first_a) / 7.0

    tol = GROUPING_REL_TOL * (float(np.max(np.abs(shifts))) + 1e-30)
    groups: list[tuple[float, int]] = []
    start = 0
    for i in range(1, len(shifts) + 1):
        if i == len(shifts) or shifts[i] - shifts[i - 1] > tol:
            block = shifts[start:i]
            groups.append((float(np.mean(block)) * scale.energy_hartree, len(block)))
            start = i
    return groups


@dataclass(frozen=True)
class ScanPoint:
    """One box size of a stabilization scan (atomic units)."""

    box_size: float
    energy: float
    level_spacing: float


def stabilization_scan(
    box_sizes,
    field_force: float,
    state_energy_window: tuple[float, float],
    spacing: float = 0.05,
) -> list[ScanPoint]:
    """Hard-wall spectra of the half-axis model -1/x - F x at growing box sizes.

    For each box the eigenvalue nearest the window center is reported together
    with the local level spacing around it.  With F > 0 the spacing in the
    downhill continuum shrinks like 1/L; with F = 0 a bound level in the
    window converges as the box grows.
    """
    sizes = [float(b) for b in box_sizes]
    if len(sizes) < 3:
        raise ValueError("need at least three box sizes")
    if any(b2 <= b1 for b1, b2 in zip(sizes, sizes[1:])):
        raise ValueError("box sizes must be strictly increasing (no duplicates)")
    if field_force < 0.0:
        raise ValueError("field force must be non-negative")
    lo, hi = float(state_energy_window[0]), float(state_energy_window[1])
    if not lo < hi:
        raise ValueError("energy window must have lo < hi")
    center = 0.5 * (lo + hi)

    out = []
    for box in sizes:
        count = round(box / spacing)
        x = spacing * np.arange(1, count)
        diag = 1.0 / spacing**2 - 1.0 / x - field_force * x
        off = np.full(count - 2, -0.5 / spacing**2)
        values = eigvalsh_tridiagonal(
            diag, off, select="v", select_range=(lo - 0.6, hi + 0.6)
        )
        inside = values[(values >= lo) & (values <= hi)]
        if inside.size == 0:
            raise EmptyWindowError(
                f"no eigenvalue in [{lo}, {hi}] for box size {box}"
            )
        if values.size < 2:
            raise EmptyWindowError(
                f"no neighboring eigenvalue around the window for box size {box}"
            )
        nearest = int(np.argmin(np.abs(values - center)))
        if nearest + 1 < values.size:
            gap = float(values[nearest + 1] - values[nearest])
        else:
            gap = float(values[nearest] - values[nearest - 1])
        out.append(ScanPoint(box_size=box, energy=float(values[nearest]), level_spacing=gap))
    return out
