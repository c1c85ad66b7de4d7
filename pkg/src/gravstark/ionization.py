"""Quasi-stationary lifetime of the ground state and a WKB cross-estimate.

With a residual internal force F = |A| g (A the mass asymmetry) the internal
potential -1/r - F z has no bound states: the ground level becomes a
resonance that decays by tunneling through the Coulomb-plus-linear barrier.

Two estimates are provided and compared:

* the closed-form lifetime

      tau = [A g hbar^2 / (4 m_e^3 c^5 alpha^5)] * exp( m_e^2 c^3 alpha^3 / (A g hbar) )

  evaluated exactly as written, in log space so astronomically large values
  never overflow, and

* a WKB rate through the 1D barrier V(x) = -1/x - F x at the unperturbed
  ground energy E = -1/2 Hartree,

      rate = nu * exp( -2 * integral sqrt(2 (V - E)) dx ),  nu = |E| / (pi hbar),

  with turning points located by bisection and the barrier integral done by
  adaptive quadrature after a substitution that removes the square-root
  endpoints.

The two exponents agree only up to an order-one factor; the comparison report
surfaces the ratio instead of folding it into either estimate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.integrate import quad

from .constants import PhysicalConstants, atomic_scale
from .errors import NoBarrierError, QuadratureError, StableAtomSignal
from .masses import CompositeMasses
from .separation import FieldSpec

__all__ = [
    "ResonanceEstimate",
    "LifetimeComparison",
    "closed_form_lifetime",
    "wkb_rate",
    "compare_lifetimes",
]

GROUND_ENERGY = -0.5          # Hartree, unperturbed ground state
EXP_OVERFLOW = 700.0          # beyond this the lifetime is reported in log10 only
ORDER_UNITY_WINDOW = (0.1, 10.0)
WKB_FORCE_CEILING = 1e-2      # atomic units; certified perturbative-barrier regime


@dataclass(frozen=True)
class ResonanceEstimate:
    """Closed-form lifetime pieces, optionally joined by the WKB estimate.

    ``tau_closed_form`` is ``inf`` once the exponent passes the overflow
    threshold; ``log10_tau_closed_form`` is always finite.
    """

    internal_force: float           # N, |A| g
    tau_prefactor: float            # s
    closed_form_exponent: float     # dimensionless
    tau_closed_form: float          # s (inf when not representable)
    log10_tau_closed_form: float    # log10 of seconds
    wkb_exponent: float | None = None
    wkb_rate: float | None = None   # 1 / s
    log10_tau_wkb: float | None = None


@dataclass(frozen=True)
class LifetimeComparison:
    """Side-by-side report of the two lifetime estimates."""

    stable: bool
    mass_asymmetry: float           # kg
    field_magnitude: float          # m / s^2
    internal_force_atomic: float | None = None
    closed_form_exponent: float | None = None
    log10_tau_closed_form: float | None = None
    wkb_exponent: float | None = None
    log10_tau_wkb: float | None = None
    exponent_ratio: float | None = None
    within_order_unity: bool | None = None


def closed_form_lifetime(
    composites: CompositeMasses,
    field: FieldSpec,
    constants: PhysicalConstants,
) -> ResonanceEstimate:
    """Evaluate the closed-form ground-state lifetime.

    Raises ``StableAtomSignal`` when the internal coupling vanishes: with no
    residual force there is no decay channel and the lifetime is infinite.
    The force magnitude |A| g enters both factors, so the sign of the
    asymmetry is irrelevant.
    """
    force = abs(composites.mass_asymmetry) * field.magnitude
    if force == 0.0:
        raise StableAtomSignal(
            "mass asymmetry times field vanishes: stationary states persist, "
            "lifetime is infinite"
        )
    m_e = constants.m_e_ref
    exponent = m_e**2 * constants.c**3 * constants.alpha**3 / (force * constants.hbar)
    prefactor = force * constants.hbar**2 / (4.0 * m_e**3 * constants.c**5 * constants.alpha**5)
    log10_tau = math.log10(prefactor) + exponent / math.log(10.0)
    tau = prefactor * math.exp(exponent) if exponent <= EXP_OVERFLOW else math.inf
    return ResonanceEstimate(
        internal_force=force,
        tau_prefactor=prefactor,
        closed_form_exponent=exponent,
        tau_closed_form=tau,
        log10_tau_closed_form=log10_tau,
    )


def _barrier_turning_points(force: float, softening: float) -> tuple[float, float]:
    """Roots of V(x) - E = 0 around the barrier, by bisection to 1e-12 relative."""

    def gap(x: float) -> float:
        coulomb = -1.0 / math.sqrt(x * x + softening * softening) if softening else -1.0 / x
        return coulomb - force * x - GROUND_ENERGY

    top = 1.0 / math.sqrt(force)
    if gap(top) <= 0.0:
        raise NoBarrierError(
            f"turning points merged at force {force:.3e} a.u.; no barrier below the "
            "ground energy"
        )

    def bisect(a: float, b: float) -> float:
        fa = gap(a)
        while b - a > 1e-12 * max(1.0, abs(b)):
            mid = 0.5 * (a + b)
            fm = gap(mid)
            if fm == 0.0:
                return mid
            if (fa > 0.0) == (fm > 0.0):
                a, fa = mid, fm
            else:
                b = mid
        return 0.5 * (a + b)

    inner = bisect(min(1.0, top / 2.0), top)
    outer = bisect(top, max(2.0 / force, 2.0 * top))
    return inner, outer


def wkb_rate(
    composites: CompositeMasses,
    field: FieldSpec,
    constants: PhysicalConstants,
    softening: float = 0.0,
) -> tuple[float, float]:
    """(decay rate in 1/s, barrier exponent) from the semiclassical integral.

    The certified regime is an internal force of at most ``WKB_FORCE_CEILING``
    atomic units; weaker forces are handled on a best-effort basis (the
    substitution keeps the quadrature well conditioned down to arbitrarily
    small forces).  Stronger forces suppress the barrier and raise
    ``NoBarrierError`` once the turning points merge.
    """
    force_si = abs(composites.mass_asymmetry) * field.magnitude
    if force_si == 0.0:
        raise StableAtomSignal("no internal force: nothing tunnels")
    if softening < 0.0:
        raise ValueError("softening must be non-negative")
    scale = atomic_scale(constants, composites.reduced_mass)
    force = force_si / scale.force_atomic
    inner, outer = _barrier_turning_points(force, softening)
    width = outer - inner

    if softening == 0.0:
        # Exact factorization V - E = (F/x)(x - inner)(outer - x) removes the
        # endpoint square roots after x = inner + width sin^2(theta).
        def integrand(theta: float) -> float:
            s = math.sin(theta)
            c = math.cos(theta)
            x = inner + width * s * s
            return 2.0 * width * width * math.sqrt(2.0 * force / x) * (s * c) ** 2
    else:
        def integrand(theta: float) -> float:
            s = math.sin(theta)
            c = math.cos(theta)
            x = inner + width * s * s
            gap = -1.0 / math.sqrt(x * x + softening * softening) - force * x - GROUND_ENERGY
            return 2.0 * width * math.sqrt(2.0 * max(gap, 0.0)) * s * c

    value, estimate = quad(integrand, 0.0, 0.5 * math.pi, epsabs=0.0, epsrel=1e-10, limit=200)
    exponent = 2.0 * value
    if estimate > 1e-8 * abs(value) + 1e-300:
        raise QuadratureError(
            f"barrier integral error estimate {estimate:.3e} too large"
        )

    attempt_rate_au = abs(GROUND_ENERGY) / math.pi
    rate_au = attempt_rate_au * math.exp(-exponent) if exponent < 745.0 else 0.0
    return rate_au / scale.time_atomic, exponent


def compare_lifetimes(
    composites: CompositeMasses,
    field: FieldSpec,
    constants: PhysicalConstants,
    softening: float = 0.0,
) -> LifetimeComparison:
    """Closed-form and WKB exponents side by side, with their ratio flagged.

    A vanishing internal coupling short-circuits into a stable report; no
    comparison is attempted.
    """
    try:
        closed = closed_form_lifetime(composites, field, constants)
    except StableAtomSignal:
        return LifetimeComparison(
            stable=True,
            mass_asymmetry=composites.mass_asymmetry,
            field_magnitude=field.magnitude,
        )
    scale = atomic_scale(constants, composites.reduced_mass)
    _, exponent = wkb_rate(composites, field, constants, softening=softening)
    attempt_rate_si = (abs(GROUND_ENERGY) / math.pi) / scale.time_atomic
    log10_tau_wkb = exponent / math.log(10.0) - math.log10(attempt_rate_si)
    ratio = exponent / closed.closed_form_exponent
    return LifetimeComparison(
        stable=False,
        mass_asymmetry=composites.mass_asymmetry,
        field_magnitude=field.magnitude,
        internal_force_atomic=closed.internal_force / scale.force_atomic,
        closed_form_exponent=closed.closed_form_exponent,
        log10_tau_closed_form=closed.log10_tau_closed_form,
        wkb_exponent=exponent,
        log10_tau_wkb=log10_tau_wkb,
        exponent_ratio=ratio,
        within_order_unity=bool(ORDER_UNITY_WINDOW[0] <= ratio <= ORDER_UNITY_WINDOW[1]),
    )
