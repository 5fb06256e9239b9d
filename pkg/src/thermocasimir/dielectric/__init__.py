"""Dielectric functions ε(iζ) on the imaginary frequency axis."""
from thermocasimir.dielectric.models import (
    ConductorModel,
    DielectricModel,
    DrudeModel,
    IdealMirror,
    PlasmaModel,
    StaticLimit,
    conductivity_length_scale,
    eval_conductor,
    eval_drude,
    eval_plasma,
    model_from_spec,
)
from thermocasimir.dielectric.tabulated import (
    TabulatedAbsorption,
    eval_tabulated,
    synthesize_drude_table,
)

__all__ = [
    "ConductorModel",
    "DielectricModel",
    "DrudeModel",
    "IdealMirror",
    "PlasmaModel",
    "StaticLimit",
    "TabulatedAbsorption",
    "conductivity_length_scale",
    "eval_conductor",
    "eval_drude",
    "eval_plasma",
    "eval_tabulated",
    "model_from_spec",
    "synthesize_drude_table",
]
