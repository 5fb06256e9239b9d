"""
Physical constants used throughout the package.

Values are frozen at CODATA 2018 so that results are bit-reproducible
regardless of the installed scipy release (``scipy.constants`` follows the
newest CODATA adjustment).
"""
from __future__ import annotations

import math

__all__ = [
    "CONSTANTS_VERSION",
    "SPEED_OF_LIGHT",
    "HBAR",
    "BOLTZMANN",
    "EPSILON_0",
    "ZETA_3",
    "ZETA_4",
]

CONSTANTS_VERSION = "CODATA 2018"

SPEED_OF_LIGHT = 2.99792458e8      # m/s
HBAR = 1.054571817e-34             # J·s
BOLTZMANN = 1.380649e-23           # J/K
EPSILON_0 = 8.8541878128e-12       # F/m

# Apéry's constant
ZETA_3 = 1.2020569031595942854

# π⁴/90, used by the ideal-mirror zero-temperature checks
ZETA_4 = math.pi ** 4 / 90.0
