import logging
import math

import numpy as np
import pytest

from conftest import plasma_for_beta
from thermocasimir.corrections import classical_force
from thermocasimir.dielectric import DrudeModel, IdealMirror
from thermocasimir.errors import ConvergenceError, ModelDomainError
from thermocasimir.lifshitz import (
    MODE_SCALE,
    X_CUTOFF,
    Configuration,
    ForceEstimate,
    Geometry,
    Prescription,
    ThermalState,
    effective_temperature,
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
from thermocasimir.util.constants import BOLTZMANN, HBAR, SPEED_OF_LIGHT, ZETA_3


# ---------------------------------------------------------------- value objects
def test_geometry_validation():
    with pytest.raises(ModelDomainError):
        Geometry(0.0, 1e-4)
    with pytest.raises(ModelDomainError):
        Geometry(1e-7, -1.0)
    geom = Geometry(1e-7, 1e-4, "plate_plate")
    assert geom.configuration is Configuration.PLATE_PLATE
    assert geom.with_separation(2e-7).radius == 1e-4


def test_geometry_warns_beyond_proximity_limit(caplog):
    with caplog.at_level(logging.WARNING, logger="thermocasimir.lifshitz.types"):
        Geometry(1e-5, 1e-4)
    assert "proximity force" in caplog.text


def test_thermal_state():
    with pytest.raises(ModelDomainError):
        ThermalState(-1.0)
    a = 1e-7
    t_eff = effective_temperature(a)
    assert t_eff == pytest.approx(HBAR * SPEED_OF_LIGHT / (2 * a * BOLTZMANN), rel=1e-15)
    assert t_eff == pytest.approx(1.1449e4, rel=1e-3)
    room = ThermalState(300.0)
    assert room.tau(a) == pytest.approx(2 * math.pi * 300.0 / t_eff, rel=1e-15)
    assert room.thermal_energy == pytest.approx(300.0 * BOLTZMANN)
    assert ThermalState.from_tau(0.5, a).tau(a) == pytest.approx(0.5, rel=1e-14)


def test_force_estimate_difference():
    diff = ForceEstimate(5.0, 0.1) - ForceEstimate(2.0, 0.2, converged=False)
    assert diff.value == 3.0
    assert diff.abs_error == pytest.approx(0.3)
    assert not diff.converged


# ---------------------------------------------------------------- building blocks
def test_permittivity_at_and_static_reflection():
    a = 1e-7
    eps, kappa_sq = permittivity_at(DrudeModel(2e16, 5e13), a, 0.5)
    zeta = SPEED_OF_LIGHT * 0.5 / (2 * a)
    assert eps == pytest.approx(1 + 4e32 / (zeta * (zeta + 5e13)), rel=1e-14)
    assert kappa_sq == pytest.approx(0.25 * (eps - 1), rel=1e-14)
    assert permittivity_at(IdealMirror(), a, 0.5) == (math.inf, math.inf)

    schwinger = static_reflection(DrudeModel(2e16, 5e13), a, Prescription.SCHWINGER)
    assert math.isinf(schwinger.kappa_sq) and math.isinf(schwinger.eps_static)
    direct = static_reflection(DrudeModel(2e16, 5e13), a, "direct")
    assert direct.kappa_sq == 0.0


# ---------------------------------------------------------------- zero-frequency term
def test_n_zero_term_is_classical_under_schwinger(afm_geometry, room, gold):
    expected = classical_force(afm_geometry, room)
    assert expected == pytest.approx(room.thermal_energy * 1e-4 * ZETA_3 / (4 * 1e-14), rel=1e-14)
    for model in (IdealMirror(), gold):
        zero = n_zero_term(model, afm_geometry, room, Prescription.SCHWINGER)
        assert zero.converged
        assert zero.value == pytest.approx(expected, rel=1e-8)


def test_n_zero_term_needs_temperature(afm_geometry, gold):
    with pytest.raises(ModelDomainError):
        n_zero_term(gold, afm_geometry, ThermalState(0.0))


# ---------------------------------------------------------------- Matsubara sum
def test_ideal_mirrors_at_high_temperature_are_classical():
    geom = Geometry(1e-6, 1e-3)
    thermal = ThermalState.from_tau(50.0, geom.separation)
    result = matsubara_force(IdealMirror(), geom, thermal)
    assert result.converged
    assert result.total == pytest.approx(classical_force(geom, thermal), rel=1e-6)


def test_breakdown_is_consistent(afm_geometry, room, gold):
    result = matsubara_force(gold, afm_geometry, room)
    assert result.converged
    assert result.n_max == len(result.contributions)
    assert all(c > 0 for c in result.contributions)
    assert result.n_zero > 0
    assert abs(result.total - (result.n_zero + result.positive_sum)) <= result.abs_error
    assert result.value == result.total
    # terms decay once x_n is past the peak of the mode integrand
    tail = np.array(result.contributions[20:])
    assert np.all(np.diff(tail) < 0)


@pytest.mark.parametrize("x_n", [0.5, 5.0, 20.0, X_CUTOFF])
def test_mode_integrals_converge_at_the_default_tolerance(gold, afm_geometry, x_n):
    eps, kappa_sq = permittivity_at(gold, afm_geometry.separation, x_n)
    result = mode_integral(eps, kappa_sq, x_n)
    assert result.converged
    assert result.abs_error <= 1e-9 * MODE_SCALE
    assert result.value < 0


def test_prescription_only_touches_the_zero_term(afm_geometry, room, gold):
    schwinger = matsubara_force(gold, afm_geometry, room, Prescription.SCHWINGER)
    direct = matsubara_force(gold, afm_geometry, room, Prescription.DIRECT)
    common = min(schwinger.n_max, direct.n_max)
    assert schwinger.contributions[:common] == direct.contributions[:common]
    assert direct.n_zero == pytest.approx(0.5 * schwinger.n_zero, rel=1e-8)


def test_ideal_mirror_bounds_real_metals(afm_geometry, room, gold):
    ideal = matsubara_force(IdealMirror(), afm_geometry, room)
    real = matsubara_force(gold, afm_geometry, room)
    assert real.total < ideal.total
    common = min(ideal.n_max, real.n_max)
    assert all(r <= i for r, i in zip(real.contributions[:common], ideal.contributions[:common]))


@pytest.mark.parametrize("model", [IdealMirror(), DrudeModel(2e16, 5e13), plasma_for_beta(0.075, 1e-7)],
                         ids=["ideal", "drude", "plasma"])
def test_force_decreases_with_separation(model, room):
    forces = [matsubara_force(model, Geometry(a, 1e-4), room, tol=1e-7).total for a in (1e-7, 2e-7, 4e-7)]
    assert forces[0] > forces[1] > forces[2] > 0


def test_budget_exhaustion_is_flagged():
    geom = Geometry(1e-6, 1e-3)
    thermal = ThermalState.from_tau(0.1, geom.separation)
    result = matsubara_force(IdealMirror(), geom, thermal, max_terms=3)
    assert not result.converged
    assert result.n_max == 3
    with pytest.raises(ConvergenceError):
        matsubara_force(IdealMirror(), geom, thermal, max_terms=3, strict=True)


def test_matsubara_force_rejects_bad_input(afm_geometry, gold):
    with pytest.raises(ValueError):
        matsubara_force(gold, afm_geometry, ThermalState(300.0), tol=0.0)
    with pytest.raises(ModelDomainError):
        matsubara_force(gold, afm_geometry, ThermalState(0.0))


def test_deterministic(afm_geometry, room, gold):
    first = matsubara_force(gold, afm_geometry, room, tol=1e-7)
    second = matsubara_force(gold, afm_geometry, room, tol=1e-7)
    assert first == second


# ---------------------------------------------------------------- zero temperature
def test_ideal_zero_temperature_force(afm_geometry):
    exact = math.pi ** 3 * HBAR * SPEED_OF_LIGHT * 1e-4 / (360 * 1e-21)
    assert ideal_mirror_force(afm_geometry) == pytest.approx(exact, rel=1e-14)
    assert exact == pytest.approx(2.72e-10, rel=2e-3)
    estimate = zero_temperature_force(IdealMirror(), afm_geometry)
    assert estimate.converged
    assert estimate.value == pytest.approx(exact, rel=1e-6)


def test_plasma_approaches_ideal_mirrors():
    geom = Geometry(1e-6, 1e-3)
    ideal = ideal_mirror_force(geom)
    deficits = []
    for beta in (0.02, 0.005, 0.00125):
        value = zero_temperature_force(plasma_for_beta(beta, geom.separation), geom).value
        deficit = 1.0 - value / ideal
        # leading penetration-depth correction is 8β
        assert 4.0 * beta <= deficit <= 8.0 * beta
        deficits.append(deficit)
    assert deficits[0] > deficits[1] > deficits[2] > 0


@pytest.mark.parametrize("tau", [0.1, 0.3, 0.5])
def test_ideal_sum_to_integral_difference_is_below_linear_estimate(tau):
    geom = Geometry(1e-6, 1e-3)
    thermal = ThermalState.from_tau(tau, geom.separation)
    total = matsubara_force(IdealMirror(), geom, thermal).total
    zero_t = ideal_mirror_force(geom)
    assert total > zero_t
    assert (total - zero_t) <= replacement_error_estimate(geom, thermal)


# ---------------------------------------------------------------- plate-plate
def test_ideal_pressure_at_zero_temperature():
    a = 1e-7
    pressure = plate_plate_pressure(IdealMirror(), a, ThermalState(0.0))
    expected = math.pi ** 2 * HBAR * SPEED_OF_LIGHT / (240 * a ** 4)
    assert pressure.value == pytest.approx(expected, rel=1e-6)
    assert pressure.step == pytest.approx(1e-4 * a)


def test_ideal_pressure_in_the_classical_limit():
    a = 1e-6
    thermal = ThermalState.from_tau(50.0, a)
    pressure = plate_plate_pressure(IdealMirror(), a, thermal)
    expected = thermal.thermal_energy * ZETA_3 / (4 * math.pi * a ** 3)
    assert pressure.value == pytest.approx(expected, rel=1e-6)
