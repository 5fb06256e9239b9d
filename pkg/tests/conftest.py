import matplotlib

matplotlib.use("Agg")

import numpy as np
import pytest

from thermocasimir.dielectric import DrudeModel, IdealMirror, PlasmaModel
from thermocasimir.lifshitz import Geometry, ThermalState
from thermocasimir.util.constants import SPEED_OF_LIGHT

# Parameter sets quoted for the measurements the presets reproduce.
AFM_OMEGA_P = 2.0e16
AFM_OMEGA_TAU = 5.0e13
AFM_SEPARATION = 1.0e-7
AFM_RADIUS = 1.0e-4
TORSION_OMEGA_P = 1.4e16
TORSION_SEPARATION = 6.0e-7
TORSION_RADIUS = 0.125
ROOM_TEMPERATURE = 300.0


@pytest.fixture
def afm_geometry():
    return Geometry(AFM_SEPARATION, AFM_RADIUS)


@pytest.fixture
def torsion_geometry():
    return Geometry(TORSION_SEPARATION, TORSION_RADIUS)


@pytest.fixture
def room():
    return ThermalState(ROOM_TEMPERATURE)


@pytest.fixture
def ideal():
    return IdealMirror()


@pytest.fixture
def gold():
    return DrudeModel(AFM_OMEGA_P, AFM_OMEGA_TAU)


@pytest.fixture
def gold_plasma():
    return PlasmaModel(AFM_OMEGA_P)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def plasma_for_beta(beta: float, separation: float) -> PlasmaModel:
    """Plasma metal with penetration ratio c/2aω_p equal to *beta* at *separation*."""
    return PlasmaModel(SPEED_OF_LIGHT / (2.0 * separation * beta))


def poor_drude(separation: float, beta: float = 0.3, z_tau: float = 2.0) -> DrudeModel:
    """
    Weakly conducting Drude medium whose zero-frequency structure in the mode
    profile is about as wide as the dimensionless frequency 2aω_τ/c = z_tau.
    """
    omega_p = SPEED_OF_LIGHT / (2.0 * separation * beta)
    omega_tau = z_tau * SPEED_OF_LIGHT / (2.0 * separation)
    return DrudeModel(omega_p, omega_tau)


def rel(a: float, b: float) -> float:
    return abs(a - b) / abs(b)


