"""
temperature.py
==============

Temperature correction Δ_T F to the Casimir force, both by definition
(Matsubara sum minus its zero-temperature integral) and through the
closed forms available for the plasma metal and for ideal mirrors.

Every result is an attraction magnitude in newtons.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from thermocasimir.dielectric import DielectricModel
from thermocasimir.errors import ModelDomainError
from thermocasimir.lifshitz import (
    ForceEstimate,
    Geometry,
    Prescription,
    ThermalState,
    ideal_mirror_force,
    matsubara_force,
    mode_integral,
    n_zero_term,
    zero_temperature_force,
)
from thermocasimir.numerics import DEFAULT_REL_TOL
from thermocasimir.util.constants import SPEED_OF_LIGHT, ZETA_3

__all__ = [
    "BetaParameter",
    "classical_force",
    "temperature_correction",
    "linear_correction_plasma",
    "linear_correction_expansion",
    "ideal_metal_small_T",
    "alpha_for_plasma_direct",
    "extract_alpha",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BetaParameter:
    """
    Penetration-depth ratio β = c/2aω_p.

    The β-expansion of the plasma correction is trusted below
    ``WARN_ABOVE`` and refused from ``REJECT_FROM`` on.
    """

    value: float

    WARN_ABOVE = 0.2
    REJECT_FROM = 0.5

    def __post_init__(self) -> None:
        if not self.value > 0:
            raise ModelDomainError(f"beta must be positive (got {self.value})")

    @classmethod
    def from_plasma(cls, omega_p: float, separation: float) -> "BetaParameter":
        if not omega_p > 0:
            raise ModelDomainError(f"plasma frequency must be positive (got {omega_p})")
        return cls(SPEED_OF_LIGHT / (2.0 * separation * omega_p))

    @property
    def kappa_sq(self) -> float:
        """β⁻², the static TE screening parameter of the plasma metal."""
        return self.value ** -2

    def check_expansion(self) -> None:
        if self.value >= self.REJECT_FROM:
            raise ModelDomainError(
                f"beta = {self.value:.3g} >= {self.REJECT_FROM}: the expansion in beta is invalid"
            )
        if self.value > self.WARN_ABOVE:
            logger.warning("beta = %.3g: the expansion in beta converges poorly", self.value)


def classical_force(geom: Geometry, thermal: ThermalState) -> float:
    """kTRζ(3)/4a², the zero-frequency force with α = 1."""
    return thermal.thermal_energy * geom.radius * ZETA_3 / (4.0 * geom.separation ** 2)


# --------------------------------------------------------------------------- #
# Corrections
# --------------------------------------------------------------------------- #
def temperature_correction(
    model: DielectricModel,
    geom: Geometry,
    thermal: ThermalState,
    prescription: Prescription = Prescription.SCHWINGER,
    tol: float = DEFAULT_REL_TOL,
) -> ForceEstimate:
    """Matsubara-sum force minus the zero-temperature force, each at ``tol/2``."""
    total = matsubara_force(model, geom, thermal, prescription, 0.5 * tol)
    zero_t = zero_temperature_force(model, geom, 0.5 * tol)
    return ForceEstimate(total.total, total.abs_error, total.converged) - zero_t


def linear_correction_plasma(
    omega_p: float,
    geom: Geometry,
    thermal: ThermalState,
    tol: float = DEFAULT_REL_TOL,
) -> ForceEstimate:
    """
    Correction linear in T for the plasma metal.

    Δ_T F = (kTR/8a²)[ζ(3) + ∫₀^∞ x ln(1 − G1e⁻ˣ) dx] with the static TE
    factor G1 screened by β⁻².  The mode integral is taken with an ideal TM
    factor, whose share is exactly −ζ(3), so the bracket is that integral
    plus 2ζ(3).
    """
    if not thermal.temperature > 0:
        raise ModelDomainError("the linear correction needs T > 0")
    beta = BetaParameter.from_plasma(omega_p, geom.separation)
    result = mode_integral(math.inf, beta.kappa_sq, 0.0, tol)
    prefactor = thermal.thermal_energy * geom.radius / (8.0 * geom.separation ** 2)
    return ForceEstimate(
        prefactor * (result.value + 2.0 * ZETA_3),
        prefactor * result.abs_error,
        result.converged,
    )


def linear_correction_expansion(omega_p: float, geom: Geometry, thermal: ThermalState) -> float:
    """(kTR/8a²)·ζ(3)·8β(1 − 3β), the plasma correction to second order in β."""
    beta = BetaParameter.from_plasma(omega_p, geom.separation)
    beta.check_expansion()
    b = beta.value
    return 0.5 * classical_force(geom, thermal) * 8.0 * b * (1.0 - 3.0 * b)


def ideal_metal_small_T(geom: Geometry, thermal: ThermalState) -> float:
    """
    Low-temperature force between ideal mirrors,
    F₀[1 + (45ζ(3)/π³)t³ − t⁴] with t = T/T_eff.
    """
    t = thermal.reduced(geom.separation)
    if t >= 1.0:
        raise ModelDomainError(f"T/T_eff = {t:.3g} >= 1: the low-temperature expansion is invalid")
    return ideal_mirror_force(geom) * (1.0 + 45.0 * ZETA_3 / math.pi ** 3 * t ** 3 - t ** 4)


# --------------------------------------------------------------------------- #
# Zero-frequency parameter α
# --------------------------------------------------------------------------- #
def alpha_for_plasma_direct(beta: float) -> float:
    """Leading behaviour 1 − 4β of α for the plasma metal without the Schwinger prescription."""
    return 1.0 - 4.0 * BetaParameter(beta).value


def extract_alpha(
    model: DielectricModel,
    geom: Geometry,
    thermal: ThermalState,
    prescription: Prescription = Prescription.SCHWINGER,
    tol: float = DEFAULT_REL_TOL,
) -> float:
    """α = (n = 0 term)·4a²/(kTRζ(3))."""
    zero = n_zero_term(model, geom, thermal, prescription, tol)
    return zero.value / classical_force(geom, thermal)
