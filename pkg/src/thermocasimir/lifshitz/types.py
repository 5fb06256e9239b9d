"""
types.py
========

Immutable value objects shared by the force calculations.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace
from enum import Enum

from thermocasimir.errors import ModelDomainError
from thermocasimir.util.constants import BOLTZMANN, HBAR, SPEED_OF_LIGHT

__all__ = [
    "Configuration",
    "Prescription",
    "Geometry",
    "ThermalState",
    "ForceResult",
    "ForceEstimate",
    "PressureResult",
    "effective_temperature",
]

logger = logging.getLogger(__name__)

# proximity force theorem is trusted up to this a/R
_PFT_LIMIT = 0.01


class Configuration(str, Enum):
    SPHERE_PLATE = "sphere_plate"
    PLATE_PLATE = "plate_plate"


class Prescription(str, Enum):
    """How the zero-frequency term is taken."""

    #: ε → ∞ before ζ → 0: both reflection factors equal one
    SCHWINGER = "schwinger"
    #: the model's own ζ → 0 limit
    DIRECT = "direct"


@dataclass(frozen=True)
class Geometry:
    """Sphere of radius ``radius`` [m] at closest separation ``separation`` [m]."""

    separation: float
    radius: float
    configuration: Configuration = Configuration.SPHERE_PLATE

    def __post_init__(self) -> None:
        if not self.separation > 0:
            raise ModelDomainError(f"separation must be positive (got {self.separation})")
        if not self.radius > 0:
            raise ModelDomainError(f"sphere radius must be positive (got {self.radius})")
        object.__setattr__(self, "configuration", Configuration(self.configuration))
        if self.separation / self.radius > _PFT_LIMIT:
            logger.warning(
                "a/R = %.3g exceeds %.2g; the proximity force theorem is unreliable",
                self.separation / self.radius, _PFT_LIMIT,
            )

    def with_separation(self, separation: float) -> "Geometry":
        return replace(self, separation=separation)


@dataclass(frozen=True)
class ThermalState:
    """
    Temperature ``temperature`` [K].

    The effective temperature kT_eff = ℏc/2a and τ = 2πT/T_eff depend on
    the separation, so they are computed on demand rather than stored.
    """

    temperature: float

    def __post_init__(self) -> None:
        if not self.temperature >= 0:
            raise ModelDomainError(f"temperature must be >= 0 K (got {self.temperature})")

    @classmethod
    def from_tau(cls, tau: float, separation: float) -> "ThermalState":
        """State whose τ at *separation* equals *tau*."""
        return cls(tau * effective_temperature(separation) / (2.0 * math.pi))

    def effective_temperature(self, separation: float) -> float:
        return effective_temperature(separation)

    def reduced(self, separation: float) -> float:
        """T/T_eff."""
        return self.temperature / effective_temperature(separation)

    def tau(self, separation: float) -> float:
        """τ = 2πT/T_eff, also the spacing x₁ of the dimensionless Matsubara grid."""
        return 2.0 * math.pi * self.reduced(separation)

    @property
    def thermal_energy(self) -> float:
        """kT [J]."""
        return BOLTZMANN * self.temperature


def effective_temperature(separation: float) -> float:
    """T_eff [K] from kT_eff = ℏc/2a."""
    return HBAR * SPEED_OF_LIGHT / (2.0 * separation * BOLTZMANN)


@dataclass(frozen=True)
class ForceResult:
    """
    Matsubara-sum force with its breakdown.

    All values are attraction magnitudes in newtons.  ``contributions``
    holds the n ≥ 1 terms in index order; ``n_max`` is the last index used.
    """

    total: float
    n_zero: float
    contributions: tuple[float, ...]
    n_max: int
    abs_error: float
    converged: bool

    @property
    def positive_sum(self) -> float:
        """Σ of the n ≥ 1 contributions."""
        return math.fsum(self.contributions)

    @property
    def value(self) -> float:
        return self.total


@dataclass(frozen=True)
class ForceEstimate:
    """A force (or any derived quantity) with its absolute error estimate."""

    value: float
    abs_error: float
    converged: bool = True

    def __sub__(self, other: "ForceEstimate") -> "ForceEstimate":
        return ForceEstimate(
            self.value - other.value,
            self.abs_error + other.abs_error,
            self.converged and other.converged,
        )


@dataclass(frozen=True)
class PressureResult:
    """Plate–plate pressure [N/m²] obtained as −F′(a)/2πR."""

    value: float
    abs_error: float
    step: float
    converged: bool = True
