"""
verify_controller.py
====================

Self-check suite behind ``casimir verify``: the ζ(3) identity, the
zero-frequency parameter α under both prescriptions, the ideal-mirror
closed form and the equivalence of the Matsubara and resummed series.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable

from thermocasimir.corrections import alpha_for_plasma_direct, extract_alpha
from thermocasimir.dielectric import DrudeModel, IdealMirror, PlasmaModel
from thermocasimir.errors import CasimirError
from thermocasimir.lifshitz import (
    Geometry,
    Prescription,
    ThermalState,
    ideal_mirror_force,
    matsubara_force,
    mode_integral,
    zero_temperature_force,
)
from thermocasimir.poisson import poisson_force
from thermocasimir.util.constants import SPEED_OF_LIGHT, ZETA_3

__all__ = ["CheckResult", "run_checks"]

logger = logging.getLogger(__name__)

_AFM_GEOMETRY = Geometry(1e-7, 1e-4)
_ROOM = ThermalState(300.0)
_GOLD = DrudeModel(2e16, 5e13)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _zeta_identity() -> tuple[bool, str]:
    # both factors ideal: twice ∫ x ln(1 − e⁻ˣ) dx
    value = 0.5 * mode_integral(math.inf, math.inf, 0.0, 1e-10).value
    return abs(value + ZETA_3) <= 1e-9 * ZETA_3, f"integral = {value:.12f}"


def _alpha_schwinger() -> tuple[bool, str]:
    alpha = extract_alpha(_GOLD, _AFM_GEOMETRY, _ROOM, Prescription.SCHWINGER)
    return abs(alpha - 1.0) <= 1e-6, f"alpha = {alpha:.6f}"


def _alpha_drude_direct() -> tuple[bool, str]:
    alpha = extract_alpha(_GOLD, _AFM_GEOMETRY, _ROOM, Prescription.DIRECT)
    return abs(alpha - 0.5) <= 1e-3, f"alpha = {alpha:.6f}"


def _alpha_plasma_direct() -> tuple[bool, str]:
    beta = 0.05
    omega_p = SPEED_OF_LIGHT / (2.0 * _AFM_GEOMETRY.separation * beta)
    alpha = extract_alpha(PlasmaModel(omega_p), _AFM_GEOMETRY, _ROOM, Prescription.DIRECT)
    reference = alpha_for_plasma_direct(beta)
    return 0.0 < alpha - reference <= 30.0 * beta ** 2, f"alpha = {alpha:.6f}, 1-4beta = {reference:.6f}"


def _ideal_closed_form() -> tuple[bool, str]:
    estimate = zero_temperature_force(IdealMirror(), _AFM_GEOMETRY)
    exact = ideal_mirror_force(_AFM_GEOMETRY)
    rel = abs(estimate.value - exact) / exact
    return rel <= 1e-6, f"relative deviation {rel:.2e}"


def _representation() -> tuple[bool, str]:
    geometry = Geometry(1e-6, 1e-3)
    thermal = ThermalState.from_tau(0.5, geometry.separation)
    reference = matsubara_force(IdealMirror(), geometry, thermal).total
    resummed = poisson_force(IdealMirror(), geometry, thermal, prescription=Prescription.SCHWINGER).value
    rel = abs(resummed - reference) / reference
    return rel <= 1e-5, f"relative difference {rel:.2e}"


_CHECKS: dict[str, Callable[[], tuple[bool, str]]] = {
    "zeta3_identity": _zeta_identity,
    "alpha_schwinger": _alpha_schwinger,
    "alpha_drude_direct": _alpha_drude_direct,
    "alpha_plasma_direct": _alpha_plasma_direct,
    "ideal_zero_temperature": _ideal_closed_form,
    "poisson_equivalence": _representation,
}


def run_checks() -> list[CheckResult]:
    """Run every check; an exception counts as a failure of that check."""
    results = []
    for name, check in _CHECKS.items():
        try:
            passed, detail = check()
        except CasimirError as exc:
            passed, detail = False, f"raised {type(exc).__name__}: {exc}"
        level = logging.INFO if passed else logging.ERROR
        logger.log(level, "%s: %s (%s)", name, "pass" if passed else "FAIL", detail)
        results.append(CheckResult(name, passed, detail))
    return results
