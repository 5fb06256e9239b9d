import math

import numpy as np
import pytest

from thermocasimir.errors import ModelDomainError
from thermocasimir.lifshitz import log_factor, log_factor_array, mode_integrand, reflection_factors


def _naive_log(x, eps, x_n):
    g1, g2 = reflection_factors(eps, x, x_n)
    return math.log((1 - g1 * math.exp(-x)) * (1 - g2 * math.exp(-x)))


def test_ideal_reflector():
    assert reflection_factors(math.inf, 3.0, 1.0) == (1.0, 1.0)


def test_zero_frequency_factors():
    eps = 9.0
    g1, g2 = reflection_factors(eps, 2.0, 0.0)
    assert g1 == 0.0
    assert g2 == pytest.approx(((eps - 1) / (eps + 1)) ** 2, rel=1e-15)


def test_worked_example():
    g1, g2 = reflection_factors(401.0, 1.0, 0.05)
    root2 = math.sqrt(2.0)
    assert g1 == pytest.approx(((1 - root2) / (1 + root2)) ** 2, rel=1e-12)
    assert g1 == pytest.approx(0.029437, abs=1e-6)
    assert g2 == pytest.approx(((401 - root2) / (401 + root2)) ** 2, rel=1e-12)
    assert g2 == pytest.approx(0.9859921, abs=1e-7)


@pytest.mark.parametrize("x, x_n, eps", [(1.0, 2.0, 5.0), (1.0, -0.1, 5.0), (1.0, 0.5, 0.5)])
def test_domain_errors(x, x_n, eps):
    with pytest.raises(ModelDomainError):
        reflection_factors(eps, x, x_n)


def test_tm_factor_dominates_te(rng):
    eps = 1.0 + 10 ** rng.uniform(-3, 6, 300)
    x_n = 10 ** rng.uniform(-4, 1.5, 300)
    x = x_n + 10 ** rng.uniform(-2, 1.5, 300)
    for e, xi, xn in zip(eps, x, x_n):
        g1, g2 = reflection_factors(e, xi, xn)
        assert 0.0 <= g1 <= g2 <= 1.0


def test_log_factor_matches_naive_form(rng):
    for _ in range(200):
        eps = 1.0 + 10 ** rng.uniform(-2, 5)
        x_n = 10 ** rng.uniform(-3, 1)
        x = x_n + 10 ** rng.uniform(-3, 1)
        kappa_sq = x_n ** 2 * (eps - 1)
        assert log_factor(x, eps, kappa_sq) == pytest.approx(_naive_log(x, eps, x_n), rel=1e-9, abs=1e-14)


def test_log_factor_is_negative_and_bounded_by_ideal(rng):
    for _ in range(200):
        eps = 1.0 + 10 ** rng.uniform(-2, 8)
        x_n = 10 ** rng.uniform(-3, 1)
        x = x_n + 10 ** rng.uniform(-3, 0.5)
        value = log_factor(x, eps, x_n ** 2 * (eps - 1))
        assert 2.0 * math.log(-math.expm1(-x)) <= value < 0.0


def test_ideal_log_factor_is_stable_at_small_x():
    x = 1e-12
    assert log_factor(x, math.inf, math.inf) == pytest.approx(2.0 * math.log(x), rel=1e-9)


def test_plasma_static_te_factor_is_stable():
    # the n = 0 term of a plasma metal: G1 → 1 and x → 0 together
    kappa_sq = 400.0
    x = 1e-9
    value = log_factor(x, math.inf, kappa_sq)
    # ln(1 − G1e⁻ˣ) ≈ ln(4x/κ + x) for x ≪ κ, plus the ideal TM part ln(x)
    expected = math.log(4.0 * x / math.sqrt(kappa_sq) + x) + math.log(-math.expm1(-x))
    assert value == pytest.approx(expected, rel=1e-6)


def test_drude_static_te_factor_vanishes():
    # κ² = 0: G1 = 0, only the ideal TM part remains
    assert log_factor(0.7, math.inf, 0.0) == pytest.approx(math.log(-math.expm1(-0.7)), rel=1e-15)


def test_infinite_kappa_needs_infinite_eps():
    with pytest.raises(ModelDomainError):
        log_factor(1.0, 10.0, math.inf)


def test_non_positive_x_contributes_nothing():
    assert log_factor(0.0, 5.0, 1.0) == 0.0
    assert mode_integrand(0.0, math.inf, math.inf) == 0.0


def test_array_form_matches_scalar(rng):
    x = 10 ** rng.uniform(-4, 1.7, 64)
    eps = np.concatenate([1.0 + 10 ** rng.uniform(-2, 8, 48), np.full(16, math.inf)])
    kappa_sq = np.where(np.isinf(eps), math.inf, (0.3 * x) ** 2 * (eps - 1))
    kappa_sq[:8] = 0.0
    kappa_sq[8:16] = 25.0
    eps[8:16] = math.inf
    vector = log_factor_array(x, eps, kappa_sq)
    scalar = [log_factor(xi, ei, ki) for xi, ei, ki in zip(x, eps, kappa_sq)]
    np.testing.assert_allclose(vector, scalar, rtol=1e-13, atol=1e-15)
    assert log_factor_array(np.array([0.0, -1.0]), 4.0, 1.0).tolist() == [0.0, 0.0]


def test_mode_integrand():
    assert mode_integrand(2.0, math.inf, math.inf) == pytest.approx(4.0 * math.log(-math.expm1(-2.0)))
