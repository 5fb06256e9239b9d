"""
force.py
========

Sphere–plate Casimir force at finite temperature in the proximity force
approximation:

    F(a) = −(kTR/4a²) Σ'ₙ ∫_{x_n}^∞ x ln[(1 − G1e⁻ˣ)(1 − G2e⁻ˣ)] dx,

with x_n = nτ and the n = 0 term taken with weight ½, together with its
zero-temperature integral replacement and the plate–plate pressure.
Forces are returned as attraction magnitudes (positive numbers).
"""
from __future__ import annotations

import logging
import math

from thermocasimir.dielectric import DielectricModel, StaticLimit
from thermocasimir.errors import ConvergenceError, ModelDomainError
from thermocasimir.lifshitz.reflection import mode_integrand
from thermocasimir.lifshitz.types import (
    ForceEstimate,
    ForceResult,
    Geometry,
    Prescription,
    PressureResult,
    ThermalState,
)
from thermocasimir.numerics import (
    DEFAULT_REL_TOL,
    QuadratureResult,
    differentiate,
    integrate_adaptive,
    sum_until,
)
from thermocasimir.util.constants import HBAR, SPEED_OF_LIGHT, ZETA_3

__all__ = [
    "X_WINDOW",
    "X_CUTOFF",
    "MODE_SCALE",
    "permittivity_at",
    "static_reflection",
    "mode_integral",
    "n_zero_term",
    "matsubara_force",
    "zero_temperature_force",
    "plate_plate_pressure",
    "ideal_mirror_force",
    "replacement_error_estimate",
]

logger = logging.getLogger(__name__)

#: width of the integration window above x_n; the integrand is < 1e-24 of its peak beyond
X_WINDOW = 60.0
#: Matsubara terms with x_n above this are dropped
X_CUTOFF = 45.0
DEFAULT_MAX_TERMS = 200_000
#: relative step of the finite difference used for the pressure
PRESSURE_STEP = 1e-4
#: |mode integral| at x = 0 for ideal mirrors; bounds every mode integral
MODE_SCALE = 2.0 * ZETA_3
#: |∫₀^∞ φ(y) dy| for ideal mirrors
PROFILE_AREA = 2.0 * math.pi ** 4 / 45.0


# --------------------------------------------------------------------------- #
# Building blocks
# --------------------------------------------------------------------------- #
def permittivity_at(model: DielectricModel, separation: float, z: float) -> tuple[float, float]:
    """
    ``(ε, κ²)`` at the dimensionless frequency ``z = 2aζ/c > 0``.

    κ² = z²(ε − 1) is infinite for an ideal reflector.
    """
    eps = float(model.epsilon(SPEED_OF_LIGHT * z / (2.0 * separation)))
    if math.isinf(eps):
        return eps, math.inf
    return eps, z * z * (eps - 1.0)


def static_reflection(
    model: DielectricModel, separation: float, prescription: Prescription
) -> StaticLimit:
    """Zero-frequency ``(κ², ε)`` pair used by the n = 0 term."""
    if Prescription(prescription) is Prescription.SCHWINGER:
        return StaticLimit(math.inf, math.inf)
    return model.static_limit(separation)


def mode_integral(
    eps: float, kappa_sq: float, x_lo: float, rel_tol: float = DEFAULT_REL_TOL
) -> QuadratureResult:
    """
    ∫ x ln[(1 − G1e⁻ˣ)(1 − G2e⁻ˣ)] dx over ``[x_lo, x_lo + X_WINDOW]``.

    The value is negative.  Integration runs in ``u = x − x_lo``.  The
    error target is relative to ``MODE_SCALE``, so terms far above x = 0
    carry an absolute error comparable to the leading term's.
    """
    return integrate_adaptive(
        lambda u: mode_integrand(x_lo + u, eps, kappa_sq),
        0.0,
        X_WINDOW,
        rel_tol,
        scale=MODE_SCALE,
    )


def _thermal_prefactor(geom: Geometry, thermal: ThermalState) -> float:
    """kTR/4a²."""
    return thermal.thermal_energy * geom.radius / (4.0 * geom.separation ** 2)


def _require_temperature(thermal: ThermalState) -> None:
    if not thermal.temperature > 0:
        raise ModelDomainError("the Matsubara sum needs T > 0; use zero_temperature_force for T = 0")


# --------------------------------------------------------------------------- #
# Public API
# --------------------------------------------------------------------------- #
def n_zero_term(
    model: DielectricModel,
    geom: Geometry,
    thermal: ThermalState,
    prescription: Prescription = Prescription.SCHWINGER,
    tol: float = DEFAULT_REL_TOL,
    *,
    strict: bool = False,
) -> ForceEstimate:
    """
    Half-weight zero-frequency term of the Matsubara sum.

    Equals α·kTRζ(3)/4a², with α = 1 under the Schwinger prescription and
    fixed by :meth:`DielectricModel.static_limit` under the direct one.
    """
    _require_temperature(thermal)
    static = static_reflection(model, geom.separation, prescription)
    result = mode_integral(static.eps_static, static.kappa_sq, 0.0, tol)
    if strict:
        result.require_converged("n = 0 mode integral")
    scaled = result.scaled(-0.5 * _thermal_prefactor(geom, thermal))
    return ForceEstimate(scaled.value, scaled.abs_error, scaled.converged)


def matsubara_force(
    model: DielectricModel,
    geom: Geometry,
    thermal: ThermalState,
    prescription: Prescription = Prescription.SCHWINGER,
    tol: float = DEFAULT_REL_TOL,
    *,
    max_terms: int = DEFAULT_MAX_TERMS,
    strict: bool = False,
) -> ForceResult:
    """
    Sphere–plate force as the full Matsubara sum.

    Terms are added in index order until ``x_n > X_CUTOFF`` or the last
    three terms each fell below ``tol/10`` of the partial sum.  When
    ``max_terms`` runs out first the partial result carries
    ``converged=False`` (or :class:`ConvergenceError` is raised with
    ``strict=True``).
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    _require_temperature(thermal)
    a = geom.separation
    tau = thermal.tau(a)
    prefactor = _thermal_prefactor(geom, thermal)
    zero = n_zero_term(model, geom, thermal, prescription, tol, strict=strict)

    n_cut = int(X_CUTOFF // tau)
    budget = min(n_cut, max_terms)
    quadratures: list[QuadratureResult] = []

    def term(n: int) -> float:
        x_n = n * tau
        eps, kappa_sq = permittivity_at(model, a, x_n)
        # up to X_CUTOFF/τ terms accumulate their quadrature errors
        q = mode_integral(eps, kappa_sq, x_n, 0.1 * tol)
        quadratures.append(q)
        return -prefactor * q.value

    series = sum_until(term, 1, 0.1 * tol, budget, initial=zero.value)
    reached_cutoff = series.terms_used == n_cut
    quadrature_ok = all(q.converged for q in quadratures)
    converged = (series.converged or reached_cutoff) and quadrature_ok and zero.converged

    # geometric tail beyond the last term kept
    tail = series.last_term / math.expm1(tau) if series.terms_used and not reached_cutoff else 0.0
    abs_error = zero.abs_error + prefactor * math.fsum(q.abs_error for q in quadratures) + tail
    logger.debug(
        "Matsubara sum at a=%.4g m, tau=%.4g: %d terms (cutoff index %d)",
        a, tau, series.terms_used, n_cut,
    )

    if not converged:
        logger.warning(
            "Matsubara sum at a=%.4g m not converged after %d terms; result flagged invalid",
            a, series.terms_used,
        )
        if strict:
            raise ConvergenceError("Matsubara sum did not converge", abs_error)

    return ForceResult(
        total=series.value,
        n_zero=zero.value,
        contributions=series.terms,
        n_max=series.terms_used,
        abs_error=abs_error,
        converged=converged,
    )


def zero_temperature_force(
    model: DielectricModel,
    geom: Geometry,
    tol: float = DEFAULT_REL_TOL,
    *,
    strict: bool = False,
) -> ForceEstimate:
    """
    Force with the Matsubara sum replaced by a frequency integral.

    F = −(ℏcR/16πa³) ∫₀^∞ φ(y) dy, where φ(y) is the mode integral above
    the dimensionless frequency y = 2aζ/c.  Independent of temperature.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = geom.separation
    inner_error = [0.0]
    inner_ok = [True]

    def profile(y: float) -> float:
        eps, kappa_sq = permittivity_at(model, a, y)
        q = mode_integral(eps, kappa_sq, y, 0.1 * tol)
        inner_error[0] = max(inner_error[0], q.abs_error)
        inner_ok[0] = inner_ok[0] and q.converged
        return q.value

    outer = integrate_adaptive(profile, 0.0, X_WINDOW, tol, scale=PROFILE_AREA)
    prefactor = HBAR * SPEED_OF_LIGHT * geom.radius / (16.0 * math.pi * a ** 3)
    abs_error = prefactor * (outer.abs_error + X_WINDOW * inner_error[0])
    converged = outer.converged and inner_ok[0]
    if strict and not converged:
        raise ConvergenceError("zero-temperature frequency integral did not converge", abs_error)
    return ForceEstimate(-prefactor * outer.value, abs_error, converged)


def plate_plate_pressure(
    model: DielectricModel,
    separation: float,
    thermal: ThermalState,
    prescription: Prescription = Prescription.SCHWINGER,
    tol: float = DEFAULT_REL_TOL,
) -> PressureResult:
    """
    Plate–plate pressure [N/m²] as −F′(a)/2πR of the sphere–plate force.

    The radius cancels; a reference sphere of radius 10⁶·a is used.  For
    ``T = 0`` the zero-temperature force is differentiated.
    """
    radius = 1e6 * separation
    step = PRESSURE_STEP * separation
    sample_error = [0.0]
    sample_ok = [True]

    def force(a: float) -> float:
        geom = Geometry(a, radius)
        if thermal.temperature > 0:
            result = matsubara_force(model, geom, thermal, prescription, 0.01 * tol)
            estimate = ForceEstimate(result.total, result.abs_error, result.converged)
        else:
            estimate = zero_temperature_force(model, geom, 0.01 * tol)
        sample_error[0] = max(sample_error[0], estimate.abs_error)
        sample_ok[0] = sample_ok[0] and estimate.converged
        return estimate.value

    derivative, fd_error = differentiate(force, separation, step)
    scale = 2.0 * math.pi * radius
    abs_error = (fd_error + sample_error[0] / step) / scale
    return PressureResult(-derivative / scale, abs_error, step, sample_ok[0])


def ideal_mirror_force(geom: Geometry) -> float:
    """F₀ = π³ℏcR/360a³, the zero-temperature force between ideal mirrors."""
    return math.pi ** 3 * HBAR * SPEED_OF_LIGHT * geom.radius / (360.0 * geom.separation ** 3)


def replacement_error_estimate(geom: Geometry, thermal: ThermalState) -> float:
    """
    Naive size of the sum-to-integral replacement error, F₀·T/T_eff [N].

    Real corrections for ideal mirrors start at (T/T_eff)³; the linear
    estimate is what dissipative and plasma metals approach.
    """
    return ideal_mirror_force(geom) * thermal.reduced(geom.separation)
