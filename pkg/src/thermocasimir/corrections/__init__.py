"""Temperature corrections to the Casimir force."""
from thermocasimir.corrections.temperature import (
    BetaParameter,
    alpha_for_plasma_direct,
    classical_force,
    extract_alpha,
    ideal_metal_small_T,
    linear_correction_expansion,
    linear_correction_plasma,
    temperature_correction,
)

__all__ = [
    "BetaParameter",
    "alpha_for_plasma_direct",
    "classical_force",
    "extract_alpha",
    "ideal_metal_small_T",
    "linear_correction_expansion",
    "linear_correction_plasma",
    "temperature_correction",
]
