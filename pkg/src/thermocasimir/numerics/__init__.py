"""Shared numerical kernels."""
from thermocasimir.numerics.differentiation import differentiate
from thermocasimir.numerics.quadrature import (
    DEFAULT_REL_TOL,
    QuadratureResult,
    integrate_adaptive,
    integrate_adaptive_batch,
    integrate_panels,
    integrate_semi_infinite,
)
from thermocasimir.numerics.series import (
    SeriesResult,
    euler_transform,
    richardson_extrapolate,
    sum_until,
)

__all__ = [
    "DEFAULT_REL_TOL",
    "QuadratureResult",
    "SeriesResult",
    "differentiate",
    "euler_transform",
    "integrate_adaptive",
    "integrate_adaptive_batch",
    "integrate_panels",
    "integrate_semi_infinite",
    "richardson_extrapolate",
    "sum_until",
]
