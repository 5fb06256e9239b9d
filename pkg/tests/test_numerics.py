import math

import numpy as np
import pytest

from thermocasimir.errors import ConvergenceError
from thermocasimir.numerics import (
    differentiate,
    euler_transform,
    integrate_adaptive,
    integrate_adaptive_batch,
    integrate_panels,
    integrate_semi_infinite,
    richardson_extrapolate,
    sum_until,
)
from thermocasimir.util.constants import ZETA_3


# ---------------------------------------------------------------- quadrature
def test_linear_integral_is_exact():
    result = integrate_adaptive(lambda x: x, 0.0, 1.0)
    assert result.converged
    assert result.value == pytest.approx(0.5, rel=1e-14)


def test_zeta3_identity():
    result = integrate_semi_infinite(lambda x: x * math.log(-math.expm1(-x)), 0.0, 1e-10, window=60.0)
    assert result.converged
    assert result.value == pytest.approx(-ZETA_3, rel=1e-9)


def test_gamma_two():
    result = integrate_semi_infinite(lambda x: x * math.exp(-x), 0.0, 1e-10)
    assert result.value == pytest.approx(1.0, rel=1e-9)


def test_shifted_exponential_tail():
    result = integrate_semi_infinite(lambda x: x * math.exp(-x), 5.0, 1e-10)
    assert result.value == pytest.approx(6.0 * math.exp(-5.0), rel=1e-9)
    assert result.value == pytest.approx(0.040428, rel=1e-4)


def test_compact_support_matches_finite_interval():
    def f(x):
        return x * (1.0 - x) if x < 1.0 else 0.0

    finite = integrate_adaptive(f, 0.0, 1.0, 1e-10)
    semi = integrate_semi_infinite(f, 0.0, 1e-10, window=1.0)
    assert semi.value == pytest.approx(finite.value, rel=1e-12)
    assert finite.value == pytest.approx(1.0 / 6.0, rel=1e-10)


def test_integrand_without_decay_raises():
    with pytest.raises(ConvergenceError):
        integrate_semi_infinite(lambda x: 1.0, 0.0, 1e-8)


def test_invalid_limits_rejected():
    with pytest.raises(ValueError):
        integrate_adaptive(lambda x: x, 1.0, 1.0)
    with pytest.raises(ValueError):
        integrate_adaptive(lambda x: x, 0.0, 1.0, rel_tol=0.0)


def test_converged_results_within_own_error():
    cases = [
        (lambda x: x ** 3 - 2 * x, 0.0, 2.0, 0.0),
        (lambda x: math.exp(-3 * x), 0.0, 4.0, (1 - math.exp(-12)) / 3),
        (lambda x: math.cos(x), 0.0, math.pi / 2, 1.0),
    ]
    for f, lo, hi, exact in cases:
        result = integrate_adaptive(f, lo, hi, 1e-10, 1e-14)
        assert result.converged
        assert abs(result.value - exact) <= max(result.abs_error, 1e-14)


def test_integral_of_zero_value_is_converged():
    result = integrate_adaptive(lambda x: x ** 3, -1.0, 1.0, 1e-9)
    assert result.converged
    assert abs(result.value) <= 1e-12


def test_scale_sets_the_absolute_target():
    # ∫ x e^{-x} over [40, 100] is 41e^{-40} ≈ 1.7e-16
    exact = 41.0 * math.exp(-40.0) - 101.0 * math.exp(-100.0)
    loose = integrate_adaptive(lambda x: x * math.exp(-x), 40.0, 100.0, 1e-9)
    tight = integrate_adaptive(lambda x: x * math.exp(-x), 40.0, 100.0, 1e-9, scale=exact)
    assert loose.converged and tight.converged
    assert loose.abs_error <= 1e-9
    assert tight.value == pytest.approx(exact, rel=1e-8)
    with pytest.raises(ValueError):
        integrate_adaptive(lambda x: x, 0.0, 1.0, scale=0.0)


def test_tighter_tolerance_not_worse():
    f = lambda x: math.exp(-x) * math.sin(5 * x) ** 2  # noqa: E731
    exact = 0.5 * (1 - math.exp(-6)) - 0.5 * (1 - math.exp(-6) * (math.cos(60) - 10 * math.sin(60))) / 101
    coarse, fine = (abs(integrate_adaptive(f, 0.0, 6.0, tol).value - exact) for tol in (1e-3, 1e-10))
    assert fine <= coarse + 1e-14
    assert fine < 1e-10


def test_panel_budget_flags_nonconvergence():
    result = integrate_adaptive(lambda x: math.sin(1.0 / x) if x > 0 else 0.0, 0.0, 1.0, 1e-14, limit=5)
    assert not result.converged
    with pytest.raises(ConvergenceError):
        result.require_converged()


def test_batch_quadrature_matches_scalar():
    k = np.array([1.0, 2.0, 3.0])
    values, error, converged = integrate_adaptive_batch(lambda x: np.exp(-k * x), 0.0, 40.0, 1e-11)
    assert converged
    np.testing.assert_allclose(values, 1.0 / k, rtol=1e-9)


def test_panels_integrate_polynomials_exactly():
    edges = np.linspace(0.0, 2.0, 5)
    per_panel = integrate_panels(lambda x: x ** 5, edges)
    assert per_panel.shape == (4,)
    assert per_panel.sum() == pytest.approx(2.0 ** 6 / 6.0, rel=1e-13)


# ---------------------------------------------------------------- series
def test_geometric_series():
    result = sum_until(lambda n: 0.5 ** n, 0, 1e-14, 200)
    assert result.converged
    assert result.value == pytest.approx(2.0, rel=1e-13)


def test_exponential_series():
    result = sum_until(lambda n: math.exp(-n), 1, 1e-15, 200)
    assert result.value == pytest.approx(1.0 / (math.e - 1.0), rel=1e-13)


def test_basel_series_hits_budget():
    result = sum_until(lambda n: 1.0 / n ** 2, 1, 1e-12, 1000)
    assert not result.converged
    assert result.terms_used == 1000
    # remainder of Σ1/n² beyond N is about 1/N
    assert result.value == pytest.approx(math.pi ** 2 / 6, abs=1.1e-3)


def test_basel_series_with_loose_tolerance():
    result = sum_until(lambda n: 1.0 / n ** 2, 1, 1e-4, 100_000)
    assert result.converged
    assert result.value == pytest.approx(math.pi ** 2 / 6, rel=1e-2)


def test_sum_until_is_deterministic():
    term = lambda n: math.sin(n) / n ** 3  # noqa: E731
    first = sum_until(term, 1, 1e-12, 500)
    second = sum_until(term, 1, 1e-12, 500)
    assert first.value == second.value
    assert first.terms == second.terms


def test_sum_until_rejects_non_finite_terms():
    with pytest.raises(ValueError):
        sum_until(lambda n: math.inf, 0, 1e-8, 10)


def test_euler_transform_alternating_harmonic():
    terms = [(-1.0) ** j / (j + 1) for j in range(30)]
    assert euler_transform(terms) == pytest.approx(math.log(2.0), rel=1e-8)


def test_richardson_extrapolation_of_linear_error():
    steps = [0.1, 0.05, 0.025]
    values = [3.0 + 2.0 * h + 5.0 * h ** 2 for h in steps]
    value, error = richardson_extrapolate(steps, values)
    assert value == pytest.approx(3.0, abs=1e-12)
    assert error < 0.1


# ---------------------------------------------------------------- derivative
def test_derivative_of_square():
    value, _ = differentiate(lambda x: x * x, 3.0, 1e-3)
    assert value == pytest.approx(6.0, rel=1e-12)


def test_derivative_of_inverse_cube():
    value, error = differentiate(lambda x: x ** -3, 1e-7, 1e-11)
    assert value == pytest.approx(-3e28, rel=1e-5)
    assert error >= 0


def test_derivative_of_constant():
    value, _ = differentiate(lambda x: 4.2, 1.0, 0.1)
    assert value == 0.0


def test_derivative_rejects_bad_step_and_samples():
    with pytest.raises(ValueError):
        differentiate(lambda x: x, 0.0, 0.0)
    with pytest.raises(ValueError):
        differentiate(lambda x: 1.0 / x if x > 0 else math.nan, 0.0, 1.0)
