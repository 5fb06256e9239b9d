"""Lifshitz force between a sphere and a plate in the proximity force approximation."""
from thermocasimir.lifshitz.force import (
    MODE_SCALE,
    X_CUTOFF,
    X_WINDOW,
    ideal_mirror_force,
    matsubara_force,
    mode_integral,
    n_zero_term,
    permittivity_at,
    plate_plate_pressure,
    replacement_error_estimate,
    static_reflection,
    zero_temperature_force,
)
from thermocasimir.lifshitz.reflection import (
    log_factor,
    log_factor_array,
    mode_integrand,
    reflection_factors,
)
from thermocasimir.lifshitz.types import (
    Configuration,
    ForceEstimate,
    ForceResult,
    Geometry,
    Prescription,
    PressureResult,
    ThermalState,
    effective_temperature,
)

__all__ = [
    "MODE_SCALE",
    "Configuration",
    "ForceEstimate",
    "ForceResult",
    "Geometry",
    "Prescription",
    "PressureResult",
    "ThermalState",
    "X_CUTOFF",
    "X_WINDOW",
    "effective_temperature",
    "ideal_mirror_force",
    "log_factor",
    "log_factor_array",
    "matsubara_force",
    "mode_integral",
    "mode_integrand",
    "n_zero_term",
    "permittivity_at",
    "plate_plate_pressure",
    "reflection_factors",
    "replacement_error_estimate",
    "static_reflection",
    "zero_temperature_force",
]
