"""
models.py
=========

Dielectric functions ε(iζ) of metals on the imaginary frequency axis.

Every model is an immutable object with the same public API:

* :meth:`DielectricModel.epsilon`: ε(iζ) for ζ > 0 (scalar or array),
* :meth:`DielectricModel.static_limit`: the ζ → 0 behaviour needed by the
  zero-frequency term, expressed as ``(κ², ε_s)``.

ζ = 0 is never evaluated; the static term is a prescription handled by
:mod:`thermocasimir.lifshitz`, not an evaluation.

The functional forms are also exposed as plain functions
(:func:`eval_plasma`, :func:`eval_drude`, :func:`eval_conductor`) so that
the formulas can be checked without building a model.
"""
from __future__ import annotations

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from pathlib import Path
from typing import Any, ClassVar, Mapping

import numpy as np

from thermocasimir.errors import ModelDomainError
from thermocasimir.util.constants import EPSILON_0, SPEED_OF_LIGHT

__all__ = [
    "StaticLimit",
    "DielectricModel",
    "IdealMirror",
    "PlasmaModel",
    "DrudeModel",
    "ConductorModel",
    "eval_plasma",
    "eval_drude",
    "eval_conductor",
    "conductivity_length_scale",
    "model_from_spec",
]


# --------------------------------------------------------------------------- #
# Closed forms
# --------------------------------------------------------------------------- #
def _check_frequency(zeta):
    zeta = np.asarray(zeta, dtype=float)
    if np.any(~(zeta > 0)):
        raise ModelDomainError(
            "ε(iζ) is only evaluated for ζ > 0; the static limit is a prescription"
        )
    return zeta


def _scalar_or_array(value: np.ndarray):
    return float(value) if value.ndim == 0 else value


def eval_plasma(omega_p: float, zeta):
    """ε(iζ) = 1 + ω_p²/ζ² for the dissipationless plasma model."""
    if not omega_p > 0:
        raise ModelDomainError(f"plasma frequency must be positive (got {omega_p})")
    zeta = _check_frequency(zeta)
    return _scalar_or_array(1.0 + (omega_p / zeta) ** 2)


def eval_drude(omega_p: float, omega_tau: float, zeta):
    """ε(iζ) = 1 + ω_p²/(ζ(ζ+ω_τ)) for the Drude metal."""
    if not omega_p > 0:
        raise ModelDomainError(f"plasma frequency must be positive (got {omega_p})")
    if not omega_tau >= 0:
        raise ModelDomainError(f"relaxation frequency must be >= 0 (got {omega_tau})")
    zeta = _check_frequency(zeta)
    if omega_tau == 0:
        # identical to the plasma expression, bit for bit
        return _scalar_or_array(1.0 + (omega_p / zeta) ** 2)
    return _scalar_or_array(1.0 + omega_p ** 2 / (zeta * (zeta + omega_tau)))


def eval_conductor(resistivity: float, zeta):
    """ε(iζ) = 1 + 1/(ε₀ρζ), the low-frequency limit of a conductor."""
    if not resistivity > 0:
        raise ModelDomainError(f"resistivity must be positive (got {resistivity})")
    zeta = _check_frequency(zeta)
    return _scalar_or_array(1.0 + 1.0 / (EPSILON_0 * resistivity * zeta))


def conductivity_length_scale(resistivity: float) -> float:
    """
    L = cρε₀, the only length a static conductor carries.

    The static coefficient of the force can depend on the metal only
    through L/a; for good metals L is a few ångström.
    """
    if resistivity < 0:
        raise ModelDomainError(f"resistivity must be >= 0 (got {resistivity})")
    return SPEED_OF_LIGHT * resistivity * EPSILON_0


# --------------------------------------------------------------------------- #
# Model objects
# --------------------------------------------------------------------------- #
@dataclass(frozen=True)
class StaticLimit:
    """
    Zero-frequency behaviour of a model at separation *a*.

    ``kappa_sq`` is lim x_n²(ε−1) and ``eps_static`` is lim ε as ζ → 0
    (``math.inf`` for metals).  Together they fix the reflection factors of
    the n = 0 term under the direct prescription.
    """

    kappa_sq: float
    eps_static: float


class DielectricModel(ABC):
    """Common interface of all dielectric models."""

    kind: ClassVar[str]
    #: True when ε(iζ) is a cheap closed form that can be called on large arrays.
    closed_form: ClassVar[bool] = True

    @abstractmethod
    def epsilon(self, zeta):
        """ε(iζ) for ζ > 0 [rad/s]."""

    @abstractmethod
    def static_limit(self, separation: float) -> StaticLimit:
        """Behaviour of the model as ζ → 0 at the given separation [m]."""

    def describe(self) -> dict[str, Any]:
        """Flat, JSON-friendly description of the model parameters."""
        return {"kind": self.kind}


@dataclass(frozen=True)
class IdealMirror(DielectricModel):
    """Perfect conductor, ε = ∞ at every frequency."""

    kind: ClassVar[str] = "ideal"

    def epsilon(self, zeta):
        zeta = _check_frequency(zeta)
        return _scalar_or_array(np.full(zeta.shape, math.inf))

    def static_limit(self, separation: float) -> StaticLimit:
        return StaticLimit(math.inf, math.inf)


@dataclass(frozen=True)
class PlasmaModel(DielectricModel):
    """Dissipationless electron gas with plasma frequency ``omega_p`` [rad/s]."""

    omega_p: float
    kind: ClassVar[str] = "plasma"

    def __post_init__(self) -> None:
        if not self.omega_p > 0:
            raise ModelDomainError(f"plasma frequency must be positive (got {self.omega_p})")

    def epsilon(self, zeta):
        return eval_plasma(self.omega_p, zeta)

    def static_limit(self, separation: float) -> StaticLimit:
        # x_n²(ε−1) → (2aω_p/c)² = β⁻²
        return StaticLimit((2.0 * separation * self.omega_p / SPEED_OF_LIGHT) ** 2, math.inf)

    def describe(self) -> dict[str, Any]:
        return {"kind": self.kind, "omega_p_rad_s": self.omega_p}


@dataclass(frozen=True)
class DrudeModel(DielectricModel):
    """Drude metal: plasma frequency ``omega_p`` and relaxation ``omega_tau`` [rad/s]."""

    omega_p: float
    omega_tau: float
    kind: ClassVar[str] = "drude"

    def __post_init__(self) -> None:
        if not self.omega_p > 0:
            raise ModelDomainError(f"plasma frequency must be positive (got {self.omega_p})")
        if not self.omega_tau >= 0:
            raise ModelDomainError(f"relaxation frequency must be >= 0 (got {self.omega_tau})")

    def epsilon(self, zeta):
        return eval_drude(self.omega_p, self.omega_tau, zeta)

    def static_limit(self, separation: float) -> StaticLimit:
        if self.omega_tau == 0:
            return PlasmaModel(self.omega_p).static_limit(separation)
        return StaticLimit(0.0, math.inf)

    @property
    def resistivity(self) -> float:
        """DC resistivity ρ = ω_τ/(ε₀ω_p²) [Ω·m] of the same metal."""
        return self.omega_tau / (EPSILON_0 * self.omega_p ** 2)

    def describe(self) -> dict[str, Any]:
        return {
            "kind": self.kind,
            "omega_p_rad_s": self.omega_p,
            "omega_tau_rad_s": self.omega_tau,
        }


@dataclass(frozen=True)
class ConductorModel(DielectricModel):
    """Ohmic conductor of resistivity ``resistivity`` [Ω·m]."""

    resistivity: float
    kind: ClassVar[str] = "conductor"

    def __post_init__(self) -> None:
        if not self.resistivity > 0:
            raise ModelDomainError(f"resistivity must be positive (got {self.resistivity})")

    def epsilon(self, zeta):
        return eval_conductor(self.resistivity, zeta)

    def static_limit(self, separation: float) -> StaticLimit:
        return StaticLimit(0.0, math.inf)

    @property
    def length_scale(self) -> float:
        return conductivity_length_scale(self.resistivity)

    def describe(self) -> dict[str, Any]:
        return {"kind": self.kind, "resistivity_ohm_m": self.resistivity}


# --------------------------------------------------------------------------- #
# Construction from configuration tables
# --------------------------------------------------------------------------- #
def _required(spec: Mapping[str, Any], key: str) -> float:
    try:
        return float(spec[key])
    except KeyError:
        raise ModelDomainError(f"model of kind {spec.get('kind')!r} needs {key!r}") from None
    except (TypeError, ValueError):
        raise ModelDomainError(f"{key!r} must be a number (got {spec[key]!r})") from None


def model_from_spec(spec: Mapping[str, Any], base_dir=None) -> DielectricModel:
    """
    Build a model from a mapping such as a TOML ``[model]`` table.

    Keys carry their units: ``omega_p_rad_s``, ``omega_tau_rad_s``,
    ``resistivity_ohm_m``; tabulated models name ``table_csv`` (resolved
    against *base_dir* when relative).
    """
    kind = str(spec.get("kind", "")).lower()
    if kind == "ideal":
        return IdealMirror()
    if kind == "plasma":
        return PlasmaModel(_required(spec, "omega_p_rad_s"))
    if kind == "drude":
        return DrudeModel(_required(spec, "omega_p_rad_s"), _required(spec, "omega_tau_rad_s"))
    if kind == "conductor":
        return ConductorModel(_required(spec, "resistivity_ohm_m"))
    if kind == "tabulated":
        from thermocasimir.dielectric.tabulated import TabulatedAbsorption

        path = Path(str(spec.get("table_csv", "")))
        if base_dir is not None and not path.is_absolute():
            path = Path(base_dir) / path
        return TabulatedAbsorption.from_csv(
            path,
            omega_p=float(spec.get("omega_p_rad_s", 0.0)),
            omega_tau=float(spec.get("omega_tau_rad_s", 0.0)),
        )
    raise ModelDomainError(f"unknown dielectric model kind {spec.get('kind')!r}")
