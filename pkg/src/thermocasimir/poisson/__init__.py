"""Poisson-resummed form of the Matsubara sum."""
from thermocasimir.poisson.profile import DEFAULT_PROFILE_TOL, PhiProfile, phi
from thermocasimir.poisson.resummation import (
    PoissonResult,
    StaticLimitStudy,
    StaticPartialSum,
    default_m_max,
    extrapolate_static_limit,
    fourier_coefficients,
    poisson_force,
    static_limit_partial_sum,
)

__all__ = [
    "DEFAULT_PROFILE_TOL",
    "PhiProfile",
    "PoissonResult",
    "StaticLimitStudy",
    "StaticPartialSum",
    "default_m_max",
    "extrapolate_static_limit",
    "fourier_coefficients",
    "phi",
    "poisson_force",
    "static_limit_partial_sum",
]
