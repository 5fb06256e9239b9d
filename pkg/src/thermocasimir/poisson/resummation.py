"""
resummation.py
==============

The Matsubara sum after Poisson resummation,

    F = −(kTR/2a²) Σ'ₘ cₘ,    cₘ = (1/τ) ∫₀^∞ cos(2πmz/τ) φ(z) dz,

and its partial sums written with the Dirichlet kernel, which show how
the zero-frequency term re-emerges from the Fourier series when the
number of harmonics grows far beyond τ.

The profile φ is continuous at z = 0 and carries the model's own static
limit, so the resummed series reproduces the direct prescription; the
Schwinger result is obtained by adding the difference of the two n = 0
terms.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import zeta

from thermocasimir.dielectric import DielectricModel
from thermocasimir.errors import ConvergenceError, ModelDomainError
from thermocasimir.lifshitz import Geometry, Prescription, ThermalState, n_zero_term
from thermocasimir.numerics import euler_transform, integrate_panels, richardson_extrapolate
from thermocasimir.poisson.profile import DEFAULT_PROFILE_TOL, PhiProfile

__all__ = [
    "PoissonResult",
    "StaticPartialSum",
    "StaticLimitStudy",
    "default_m_max",
    "fourier_coefficients",
    "poisson_force",
    "static_limit_partial_sum",
    "extrapolate_static_limit",
]

logger = logging.getLogger(__name__)

DEFAULT_M_MAX = 64
M_PER_TAU = 40
#: lobes integrated one by one before the alternating tail is Euler-summed
LOBE_CAP = 2048
EULER_LOBES = 24
#: powers of 1/m describing the large-m behaviour of cₘ
TAIL_EXPONENTS = (2.0, 2.5, 3.0, 4.0)
STATIC_MIN_TAU = 10.0
STATIC_MIN_ORDER = 10.0


@dataclass(frozen=True)
class PoissonResult:
    """Resummed force [N] and the coefficients it was built from."""

    value: float
    abs_error: float
    coefficients: tuple[float, ...]
    tail: float
    m_max: int
    converged: bool


@dataclass(frozen=True)
class StaticPartialSum:
    """Dirichlet-kernel partial sum at order *order* and its small-angle form [N]."""

    order: int
    value: float
    small_angle: float


@dataclass(frozen=True)
class StaticLimitStudy:
    """Partial sums over increasing orders and their extrapolation to infinite order."""

    orders: tuple[int, ...]
    values: tuple[float, ...]
    small_angle: tuple[float, ...]
    extrapolated: float
    abs_error: float
    n_zero: float


def default_m_max(tau: float) -> int:
    return max(DEFAULT_M_MAX, math.ceil(M_PER_TAU * tau))


# --------------------------------------------------------------------------- #
# Fourier coefficients
# --------------------------------------------------------------------------- #
def _panel_edges(lobe_edges: np.ndarray, nodes: np.ndarray) -> np.ndarray:
    """Lobe edges merged with the profile nodes lying between them."""
    inside = nodes[(nodes > lobe_edges[0]) & (nodes < lobe_edges[-1])]
    return np.union1d(lobe_edges, inside)


def _cosine_integral(profile: PhiProfile, k: float) -> float:
    """∫₀^Z cos(kz) φ(z) dz, split at the zeros of the cosine."""
    z_max = profile.Z_MAX
    nodes = profile.nodes

    def integrand(z):
        return np.cos(k * z) * profile(z)

    if k == 0:
        return float(integrate_panels(profile, nodes).sum())

    half_period = math.pi / k
    n_zeros = int((z_max - 0.5 * half_period) // half_period) + 1
    zeros = (np.arange(n_zeros) + 0.5) * half_period
    zeros = zeros[zeros < z_max]

    if zeros.size <= LOBE_CAP + EULER_LOBES:
        edges = _panel_edges(np.concatenate(([0.0], zeros, [z_max])), nodes)
        return float(integrate_panels(integrand, edges).sum())

    head_edges = _panel_edges(np.concatenate(([0.0], zeros[:LOBE_CAP])), nodes)
    head = float(integrate_panels(integrand, head_edges).sum())
    lobes = integrate_panels(integrand, zeros[LOBE_CAP - 1:LOBE_CAP + EULER_LOBES])
    return head + euler_transform(lobes)


def fourier_coefficients(profile: PhiProfile, tau: float, m_max: int) -> np.ndarray:
    """cₘ for m = 0 … m_max."""
    return np.array(
        [_cosine_integral(profile, 2.0 * math.pi * m / tau) / tau for m in range(m_max + 1)]
    )


def _tail(coefficients: np.ndarray, end: int) -> float:
    """
    Σ_{m > end} cₘ from a fit of cₘ over ``[end/2, end]`` to powers of 1/m,
    summed with the Hurwitz zeta function.
    """
    start = max(1, end // 2)
    m = np.arange(start, end + 1, dtype=float)
    if m.size < 2 * len(TAIL_EXPONENTS):
        return 0.0
    basis = np.stack([m ** -p for p in TAIL_EXPONENTS], axis=1)
    weight = m ** 2
    amplitudes, *_ = np.linalg.lstsq(basis * weight[:, None], coefficients[start:end + 1] * weight, rcond=None)
    return float(sum(a * zeta(p, end + 1) for a, p in zip(amplitudes, TAIL_EXPONENTS)))


# --------------------------------------------------------------------------- #
# Public API
# --------------------------------------------------------------------------- #
def _zero_term_shift(
    model: DielectricModel, geom: Geometry, thermal: ThermalState, prescription: Prescription, tol: float
) -> float:
    if Prescription(prescription) is Prescription.DIRECT:
        return 0.0
    return (
        n_zero_term(model, geom, thermal, prescription, tol).value
        - n_zero_term(model, geom, thermal, Prescription.DIRECT, tol).value
    )


def _matching_profile(
    profile: PhiProfile | None, model: DielectricModel, separation: float, tol: float
) -> PhiProfile:
    if profile is None:
        return PhiProfile(model, separation, tol)
    if profile.model != model or profile.separation != separation:
        raise ModelDomainError(
            f"profile was built for {profile.model.kind} at a={profile.separation:.4g} m, "
            f"not {model.kind} at a={separation:.4g} m"
        )
    return profile


def poisson_force(
    model: DielectricModel,
    geom: Geometry,
    thermal: ThermalState,
    m_max: int | None = None,
    tol: float = DEFAULT_PROFILE_TOL,
    *,
    prescription: Prescription = Prescription.DIRECT,
    series_tol: float = 1e-6,
    profile: PhiProfile | None = None,
    strict: bool = False,
) -> PoissonResult:
    """
    Force [N] from the Poisson-resummed series truncated at ``m_max``.

    The remainder beyond ``m_max`` is estimated from the decay of the last
    coefficients.  The series counts as converged when the corrected
    partial sums ending at ``m_max − 2``, ``m_max − 1`` and ``m_max`` agree
    to ``series_tol``.
    """
    if not thermal.temperature > 0:
        raise ModelDomainError("the resummed series needs T > 0")
    a = geom.separation
    tau = thermal.tau(a)
    m_max = default_m_max(tau) if m_max is None else int(m_max)
    if m_max < 0:
        raise ModelDomainError(f"m_max must be >= 0 (got {m_max})")
    profile = _matching_profile(profile, model, a, tol)

    c = fourier_coefficients(profile, tau, m_max)
    partial = np.cumsum(c) - 0.5 * c[0]
    corrected = [partial[end] + _tail(c, end) for end in range(max(0, m_max - 2), m_max + 1)]
    total = corrected[-1]
    spread = max(corrected) - min(corrected)
    converged = profile.converged and m_max >= 2 and spread <= series_tol * abs(total)

    prefactor = thermal.thermal_energy * geom.radius / (2.0 * a ** 2)
    value = -prefactor * total + _zero_term_shift(model, geom, thermal, prescription, tol)
    abs_error = prefactor * (spread + tol * abs(profile.at_zero))
    if not converged:
        logger.warning(
            "resummed series at a=%.4g m, tau=%.4g not converged at m_max=%d (spread %.3e)",
            a, tau, m_max, spread,
        )
        if strict:
            raise ConvergenceError("resummed series did not converge", abs_error)
    return PoissonResult(
        value=value,
        abs_error=abs_error,
        coefficients=tuple(float(x) for x in c),
        tail=float(total - partial[m_max]),
        m_max=m_max,
        converged=converged,
    )


def static_limit_partial_sum(
    model: DielectricModel,
    geom: Geometry,
    thermal: ThermalState,
    order: int,
    tol: float = DEFAULT_PROFILE_TOL,
    *,
    prescription: Prescription = Prescription.DIRECT,
    profile: PhiProfile | None = None,
) -> StaticPartialSum:
    """
    Partial sum of the resummed series up to ``order`` harmonics,

        F_M = −(kTR/4a²τ) ∫₀^∞ D_M(z) φ(z) dz,
        D_M(z) = sin(π(2M+1)z/τ) / sin(πz/τ),

    together with the small-angle form in which sin(πz/τ) → πz/τ.
    Requires τ ≥ 10 and M ≥ 10τ.
    """
    a = geom.separation
    tau = thermal.tau(a)
    if tau < STATIC_MIN_TAU:
        raise ModelDomainError(f"static-limit partial sums need tau >= {STATIC_MIN_TAU} (got {tau:.4g})")
    if order < STATIC_MIN_ORDER * tau:
        raise ModelDomainError(f"order {order} is below {STATIC_MIN_ORDER}*tau = {STATIC_MIN_ORDER * tau:.4g}")
    profile = _matching_profile(profile, model, a, tol)

    width = 2 * order + 1
    z_max = profile.Z_MAX
    lobe_edges = np.arange(0.0, z_max, tau / width)
    edges = _panel_edges(np.append(lobe_edges, z_max), profile.nodes)

    def dirichlet(z):
        u = (z - np.round(z / tau) * tau) / tau
        return width * np.sinc(width * u) / np.sinc(u) * profile(z)

    wavenumber = math.pi * width / tau

    def small_angle(z):
        return wavenumber * np.sinc(wavenumber * z / math.pi) * profile(z)

    kernel = float(integrate_panels(dirichlet, edges).sum())
    sinc_form = float(integrate_panels(small_angle, edges).sum())

    base = thermal.thermal_energy * geom.radius / (4.0 * a ** 2)
    shift = _zero_term_shift(model, geom, thermal, prescription, tol)
    return StaticPartialSum(
        order=order,
        value=-base / tau * kernel + shift,
        small_angle=-base / math.pi * sinc_form + shift,
    )


def extrapolate_static_limit(
    model: DielectricModel,
    geom: Geometry,
    thermal: ThermalState,
    tol: float = DEFAULT_PROFILE_TOL,
    *,
    multipliers: tuple[float, ...] = (10.0, 30.0, 100.0),
    prescription: Prescription = Prescription.DIRECT,
) -> StaticLimitStudy:
    """
    Partial sums at orders ``M = ⌈kτ⌉`` for each multiplier k, extrapolated
    to infinite order by Richardson extrapolation in 1/M.
    """
    tau = thermal.tau(geom.separation)
    profile = PhiProfile(model, geom.separation, tol)
    orders = tuple(math.ceil(k * tau) for k in multipliers)
    sums = [
        static_limit_partial_sum(model, geom, thermal, m, tol, prescription=prescription, profile=profile)
        for m in orders
    ]
    values = tuple(s.value for s in sums)
    extrapolated, error = richardson_extrapolate([1.0 / m for m in orders], values)
    zero = n_zero_term(model, geom, thermal, prescription, tol)
    logger.debug("static-limit partial sums %s extrapolate to %.6g N", values, extrapolated)
    return StaticLimitStudy(
        orders=orders,
        values=values,
        small_angle=tuple(s.small_angle for s in sums),
        extrapolated=extrapolated,
        abs_error=error,
        n_zero=zero.value,
    )
