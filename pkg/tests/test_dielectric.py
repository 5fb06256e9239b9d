import math

import numpy as np
import pytest

from thermocasimir.dielectric import (
    ConductorModel,
    DrudeModel,
    IdealMirror,
    PlasmaModel,
    conductivity_length_scale,
    eval_conductor,
    eval_drude,
    eval_plasma,
    model_from_spec,
)
from thermocasimir.errors import ModelDomainError
from thermocasimir.util.constants import EPSILON_0

ZETA_GRID = np.geomspace(1e8, 1e18, 241)


# ---------------------------------------------------------------- closed forms
def test_plasma_values():
    omega_p = 3.7e15
    assert eval_plasma(omega_p, omega_p) == pytest.approx(2.0, rel=1e-15)
    assert eval_plasma(omega_p, omega_p / 2) == pytest.approx(5.0, rel=1e-15)
    assert eval_plasma(2e16, 1e15) == pytest.approx(401.0, rel=1e-15)


def test_drude_value():
    assert eval_drude(2e16, 5e13, 2e16) == pytest.approx(1.0 + 4e32 / (2e16 * 2.005e16), rel=1e-14)
    assert eval_drude(2e16, 5e13, 2e16) == pytest.approx(1.99750, rel=1e-5)


def test_drude_without_relaxation_is_plasma_bit_for_bit():
    for omega_p in (1e14, 2e16, 7.3e16):
        drude = eval_drude(omega_p, 0.0, ZETA_GRID)
        plasma = eval_plasma(omega_p, ZETA_GRID)
        assert np.array_equal(drude, plasma)


def test_conductor_values():
    assert eval_conductor(1e-7, 1e10) == pytest.approx(1.0 + 1.0 / (EPSILON_0 * 1e-7 * 1e10), rel=1e-14)
    assert eval_conductor(1e-7, 1e10) == pytest.approx(1.1294e8, rel=1e-4)
    assert eval_conductor(1e-7, 1e13) == pytest.approx(1.1294e5, rel=1e-4)


def test_drude_approaches_conductor_at_low_frequency():
    omega_p, omega_tau = 2e16, 5e13
    rho = DrudeModel(omega_p, omega_tau).resistivity
    assert rho == pytest.approx(omega_tau / (EPSILON_0 * omega_p ** 2))
    zeta = np.geomspace(omega_tau * 1e-7, omega_tau * 1e-3, 50)
    drude = eval_drude(omega_p, omega_tau, zeta)
    conductor = eval_conductor(rho, zeta)
    assert np.all(np.abs(drude - conductor) / drude <= 1e-3)


@pytest.mark.parametrize("evaluate", [
    lambda z: eval_plasma(2e16, z),
    lambda z: eval_drude(2e16, 5e13, z),
    lambda z: eval_conductor(1e-7, z),
])
def test_zero_frequency_is_rejected(evaluate):
    with pytest.raises(ModelDomainError):
        evaluate(0.0)
    with pytest.raises(ModelDomainError):
        evaluate(np.array([1e10, 0.0]))


def test_invalid_parameters_rejected():
    with pytest.raises(ModelDomainError):
        PlasmaModel(0.0)
    with pytest.raises(ModelDomainError):
        DrudeModel(2e16, -1.0)
    with pytest.raises(ModelDomainError):
        ConductorModel(0.0)
    with pytest.raises(ModelDomainError):
        eval_drude(-1.0, 0.0, 1e10)


def test_scalar_in_scalar_out():
    assert isinstance(eval_drude(2e16, 5e13, 1e14), float)
    assert eval_drude(2e16, 5e13, np.array([1e14, 1e15])).shape == (2,)


# ---------------------------------------------------------------- length scale
def test_conductivity_length_scale():
    length = conductivity_length_scale(1e-7)
    assert length == pytest.approx(2.66e-10, rel=3e-3)
    assert length <= 3e-10
    assert conductivity_length_scale(0.0) == 0.0
    assert conductivity_length_scale(2e-7) == pytest.approx(2.0 * length, rel=1e-15)
    assert ConductorModel(1e-7).length_scale == length


# ---------------------------------------------------------------- properties
def _random_models(rng, count=8):
    models = []
    for _ in range(count):
        omega_p = 10 ** rng.uniform(14.5, 17.0)
        omega_tau = 10 ** rng.uniform(11.0, 15.0)
        rho = 10 ** rng.uniform(-8.5, -5.0)
        models += [PlasmaModel(omega_p), DrudeModel(omega_p, omega_tau), ConductorModel(rho)]
    return models


def test_epsilon_at_least_one_and_decreasing(rng):
    for model in _random_models(rng):
        eps = model.epsilon(ZETA_GRID)
        assert np.all(eps >= 1.0), model
        assert np.all(np.diff(eps) < 0), model


def test_ideal_mirror():
    mirror = IdealMirror()
    assert math.isinf(mirror.epsilon(1e12))
    assert np.all(np.isinf(mirror.epsilon(ZETA_GRID)))
    static = mirror.static_limit(1e-7)
    assert math.isinf(static.kappa_sq) and math.isinf(static.eps_static)


def test_static_limits():
    a = 1e-7
    plasma = PlasmaModel(2e16).static_limit(a)
    beta = 2.99792458e8 / (2 * a * 2e16)
    assert plasma.kappa_sq == pytest.approx(beta ** -2, rel=1e-14)
    assert math.isinf(plasma.eps_static)

    drude = DrudeModel(2e16, 5e13).static_limit(a)
    assert drude.kappa_sq == 0.0 and math.isinf(drude.eps_static)
    assert DrudeModel(2e16, 0.0).static_limit(a) == plasma
    assert ConductorModel(1e-7).static_limit(a) == drude


# ---------------------------------------------------------------- construction
def test_model_from_spec():
    assert model_from_spec({"kind": "ideal"}) == IdealMirror()
    assert model_from_spec({"kind": "plasma", "omega_p_rad_s": 1.4e16}) == PlasmaModel(1.4e16)
    assert model_from_spec(
        {"kind": "Drude", "omega_p_rad_s": 2e16, "omega_tau_rad_s": 5e13}
    ) == DrudeModel(2e16, 5e13)
    assert model_from_spec({"kind": "conductor", "resistivity_ohm_m": 2e-8}) == ConductorModel(2e-8)


def test_model_from_spec_errors():
    with pytest.raises(ModelDomainError, match="omega_tau_rad_s"):
        model_from_spec({"kind": "drude", "omega_p_rad_s": 2e16})
    with pytest.raises(ModelDomainError, match="must be a number"):
        model_from_spec({"kind": "plasma", "omega_p_rad_s": "fast"})
    with pytest.raises(ModelDomainError, match="unknown"):
        model_from_spec({"kind": "graphene"})


def test_describe_carries_units():
    assert DrudeModel(2e16, 5e13).describe() == {
        "kind": "drude", "omega_p_rad_s": 2e16, "omega_tau_rad_s": 5e13,
    }
    assert ConductorModel(1e-7).describe()["resistivity_ohm_m"] == 1e-7
