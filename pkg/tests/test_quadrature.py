import math

import numpy as np
import pytest

from zbw_lab.errors import ConvergenceError
from zbw_lab.quadrature import (
    AdaptiveQuadrature,
    GaussHermiteQuadrature,
    expectation,
    hermite_rule,
    integrate_1d,
    integrate_1d_gauss_hermite,
    integrate_momentum_3d,
    integrate_separable,
    integrate_weighted,
    momentum_grid,
    monte_carlo_gaussian,
)


def gaussian(x, center=0.0, width=1.0):
    return np.exp(-(((x - center) / width) ** 2))


def test_adaptive_gaussian():
    result = integrate_1d(gaussian)
    assert result.value == pytest.approx(math.sqrt(math.pi), rel=1e-12)
    assert result.method == "adaptive"
    assert result.evaluations > 0


def test_adaptive_recentred():
    result = integrate_1d(lambda x: gaussian(x, 250.0, 0.01), center=250.0, scale=0.01)
    assert result.value == pytest.approx(0.01 * math.sqrt(math.pi), rel=1e-10)


def test_adaptive_finite_interval():
    assert integrate_1d(math.sin, lower=0.0, upper=math.pi).value == pytest.approx(2.0, rel=1e-12)


def test_adaptive_reports_non_convergence():
    engine = AdaptiveQuadrature(limit=2)
    with pytest.raises(ConvergenceError) as info:
        engine.integrate(lambda x: math.sin(50.0 * x) ** 2, 0.0, 40.0, tol=1e-14)
    assert info.value.best is not None


@pytest.mark.parametrize("tol", [0.0, -1e-3])
def test_invalid_tolerance(tol):
    with pytest.raises(ValueError):
        integrate_1d(gaussian, tol=tol)


@pytest.mark.parametrize("n", [1, 4, 10])
def test_gauss_hermite_exact_to_degree(n):
    for k in range(0, 2 * n, 2):
        assert integrate_weighted(lambda x: x**k, n) == pytest.approx(math.gamma((k + 1) / 2.0), rel=1e-11)
    assert integrate_weighted(lambda x: x ** (2 * n - 1), n) == pytest.approx(0.0, abs=1e-9 * math.gamma(n + 0.5))


def test_hermite_rule_is_cached_and_read_only():
    nodes, weights = hermite_rule(8)
    assert hermite_rule(8)[0] is nodes
    with pytest.raises(ValueError):
        nodes[0] = 0.0


def test_gauss_hermite_engine():
    result = integrate_1d_gauss_hermite(lambda x: gaussian(x, 3.0, 0.5) * (x - 3.0) ** 2, center=3.0, scale=0.5)
    assert result.value == pytest.approx(0.5**3 * math.sqrt(math.pi) / 2.0, rel=1e-12)


def test_gauss_hermite_whole_line_only():
    with pytest.raises(ValueError):
        GaussHermiteQuadrature().integrate(gaussian, 0.0, math.inf)


def test_engines_agree_on_shifted_gaussian():
    f = lambda x: gaussian(x, 1.5, 2.0) * np.cos(x)  # noqa: E731
    adaptive = integrate_1d(f, center=1.5, scale=2.0)
    hermite = integrate_1d_gauss_hermite(f, center=1.5, scale=2.0)
    assert hermite.value == pytest.approx(adaptive.value, abs=1e-10)


def test_momentum_grid_weights_normalized():
    grid = momentum_grid(0.7)
    assert grid.weights.sum() == pytest.approx(1.0, rel=1e-12)
    assert grid.cartesian.shape == (len(grid), 3)


def test_momentum_second_moment():
    p_o = 0.4
    result = integrate_momentum_3d(lambda p, theta, phi: p**2, p_o)
    # f^2 has per-axis variance p_o^2 / 4
    assert result.value == pytest.approx(3.0 * p_o**2 / 4.0, rel=1e-12)


def test_momentum_unweighted():
    result = integrate_momentum_3d(lambda p, theta, phi: np.exp(-(p**2)), math.sqrt(2.0), weighted=False)
    assert result.value == pytest.approx(math.pi**1.5, rel=1e-8)


def test_expectation_vector_valued():
    value, error, evaluations = expectation(lambda grid: grid.cartesian**2, 1.0)
    assert value == pytest.approx(np.full(3, 0.25), rel=1e-12)
    assert np.all(error >= 0.0)
    assert evaluations > 0


def test_separable():
    result = integrate_separable(lambda p: p**2 * math.exp(-(p**2)), math.sin)
    assert result.value == pytest.approx(math.pi**1.5, rel=1e-10)


def test_monte_carlo_is_seeded():
    first = monte_carlo_gaussian(lambda p: p[:, 2] ** 2, n=20_000, seed=3, p_o=2.0)
    second = monte_carlo_gaussian(lambda p: p[:, 2] ** 2, n=20_000, seed=3, p_o=2.0)
    assert first.value == second.value
    assert first.value == pytest.approx(1.0, abs=5 * first.error_estimate)
    assert first.metadata["rng"] == "PCG64"


def test_monte_carlo_rejects_empty():
    with pytest.raises(ValueError):
        monte_carlo_gaussian(lambda p: p[:, 0], n=0)
