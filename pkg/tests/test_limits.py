"""
Test limit covariance models, clock transforms and samplers.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from numpy.polynomial import Polynomial

from src.uncover.errors import InvalidSpec, NotPSD, OutOfDomain, SpecInvalid
from src.uncover.limits import (COMPONENT_FPRIME, EDGE_FPRIME, Clock, CovarianceKind, CovarianceModel,
                                brownian_representation_sample, covariance, covariance_matrix, derandomize,
                                gaussian_sample, plugin_model, randomize, sqrt_factor, theory_model)

GRID = np.linspace(0.1, 0.9, 9)

EXAMPLE_PARAMS = {
    CovarianceKind.DISCRETE_A: {'dstar': 2.0, 'gammastar': 1.0},
    CovarianceKind.CONTINUOUS_A: {'dstar': 2.0, 'chistar': 5.0},
    CovarianceKind.DISCRETE_B: {},
    CovarianceKind.CONTINUOUS_B: {'d_inf': 4.0},
    CovarianceKind.DISCRETE_C: {'lambda1': 0.5, 'lambda2': 1.0},
    CovarianceKind.CONTINUOUS_C: {'lambda1': 0.5, 'lambda2': 1.0, 'alpha': 1.0},
    CovarianceKind.CONTINUOUS_C_INFINITE_ALPHA: {},
    CovarianceKind.COMPONENTS_DISCRETE: {'gammastar': 1.0},
    CovarianceKind.COMPONENTS_CONTINUOUS: {'gammastar': 1.0},
    CovarianceKind.GNM_BRIDGE: {},
    CovarianceKind.BIPARTITE_SQUARE: {},
}


def model(kind, **params):
    return CovarianceModel(kind=kind, params=params or EXAMPLE_PARAMS[CovarianceKind(kind)])


class TestCovarianceValues:
    """Test closed-form covariance values."""

    def test_labelled_tree_discrete(self):
        """Test s^2 (1-t) for dstar=2, gammastar=1."""
        m = model('discrete_a')
        assert covariance(m, 0.5, 0.5) == pytest.approx(0.125)
        assert covariance(m, 0.25, 0.75) == pytest.approx(0.0625 * 0.25)

    def test_labelled_tree_continuous(self):
        """Test the continuous labelled-tree variance at t = 1/2."""
        assert covariance(model('continuous_a'), 0.5, 0.5) == pytest.approx(0.375)

    def test_argument_order(self):
        """Test sigma(s, t) = sigma(t, s)."""
        m = model('continuous_c')
        assert covariance(m, 0.3, 0.7) == covariance(m, 0.7, 0.3)

    def test_regular_discrete(self):
        """Test half s^2 (1-t)^2 for regular graphs."""
        assert covariance(model('discrete_b'), 0.4, 0.6) == pytest.approx(0.5 * 0.16 * 0.16)

    def test_gnm_bridge(self):
        """Test s^2 (1 - t^2)."""
        assert covariance(model('gnm_bridge'), 0.3, 0.6) == pytest.approx(0.09 * (1 - 0.36))

    def test_infinite_degree_continuous_b(self):
        """Test d_inf = inf reduces to s^2 t (1-t)."""
        m = model('continuous_b', d_inf=math.inf)
        assert covariance(m, 0.3, 0.6) == pytest.approx(0.09 * 0.6 * 0.4)

    def test_regime_consistency(self):
        """Test DiscreteB equals DiscreteC with lambda1 = 1, lambda2 = 0."""
        b = model('discrete_b').covariance_matrix(GRID)
        c = model('discrete_c', lambda1=1.0, lambda2=0.0).covariance_matrix(GRID)
        assert np.allclose(b, c, atol=1e-12, rtol=0)

    def test_bipartite_mean(self):
        """Test the bipartite limit has mean -t(1-t)/4."""
        assert model('bipartite_square').mean(0.5) == pytest.approx(-0.0625)
        assert model('discrete_a').mean(0.5) == 0.0

    @pytest.mark.parametrize('kind', list(CovarianceKind))
    def test_positive_semidefinite(self, kind):
        """Test every kind gives a PSD matrix on the default grid."""
        cov = covariance_matrix(model(kind), GRID)
        assert np.allclose(cov, cov.T)
        assert np.linalg.eigvalsh(cov).min() >= -1e-10 * np.trace(cov)


class TestModelValidation:
    """Test parameter validation and serialization."""

    def test_missing_parameter(self):
        """Test a missing parameter raises InvalidSpec."""
        with pytest.raises(InvalidSpec):
            CovarianceModel(kind='discrete_a', params={'dstar': 2.0})

    def test_unknown_parameter(self):
        """Test an unexpected parameter raises InvalidSpec."""
        with pytest.raises(InvalidSpec):
            CovarianceModel(kind='discrete_b', params={'dstar': 2.0})

    def test_negative_parameter(self):
        """Test negative parameters raise InvalidSpec."""
        with pytest.raises(InvalidSpec):
            CovarianceModel(kind='discrete_c', params={'lambda1': -1.0, 'lambda2': 0.0})

    def test_unknown_kind(self):
        """Test unknown kinds raise InvalidSpec."""
        with pytest.raises(InvalidSpec):
            theory_model('discrete_z', {})

    def test_dict_round_trip(self):
        """Test a transformed model survives serialization."""
        original = derandomize(model('continuous_c'), 1.0, EDGE_FPRIME)
        restored = CovarianceModel.from_dict(original.to_dict())
        assert restored.clock is Clock.DISCRETE
        assert np.array_equal(restored.covariance_matrix(GRID), original.covariance_matrix(GRID))

    def test_plugin_model(self):
        """Test plug-in parameters come from degree averages."""
        m = plugin_model('discrete_a', {'dbar': 2.0, 'chi': 5.0, 'lambda1': 0, 'lambda2': 0, 'alpha': 0})
        assert m.params == {'dstar': 2.0, 'gammastar': 1.0}

    def test_plugin_overrides(self):
        """Test explicit parameters take precedence over plug-in values."""
        m = plugin_model('continuous_b', {'dbar': 2.0, 'chi': 4.0}, overrides={'d_inf': 4.0})
        assert m.params == {'d_inf': 4.0}


class TestTransforms:
    """Test the clock-change transforms."""

    def test_edges_derandomize_continuous_a(self):
        """Test removing the vertex-count term turns ContinuousA into DiscreteA."""
        discrete = derandomize(model('continuous_a'), 2.0, EDGE_FPRIME)
        assert np.allclose(discrete.covariance_matrix(GRID), model('discrete_a').covariance_matrix(GRID))

    def test_components_derandomize(self):
        """Test ComponentsContinuous minus s(1-t)(1-2s)(1-2t) equals ComponentsDiscrete."""
        discrete = derandomize(model('components_continuous'), 1.0, COMPONENT_FPRIME)
        expected = model('components_discrete').covariance_matrix(GRID)
        assert np.allclose(discrete.covariance_matrix(GRID), expected)

    def test_regular_randomize(self):
        """Test randomizing DiscreteC with c = alpha gives ContinuousC."""
        lam1, lam2, alpha = 0.5, 1.0, 1.0
        continuous = randomize(model('discrete_c', lambda1=lam1, lambda2=lam2), alpha, EDGE_FPRIME)
        expected = model('continuous_c', lambda1=lam1, lambda2=lam2, alpha=alpha).covariance_matrix(GRID)
        assert np.allclose(continuous.covariance_matrix(GRID), expected)

    def test_round_trip_cancels(self):
        """Test randomize after derandomize restores the model exactly."""
        original = model('continuous_a')
        back = randomize(derandomize(original, 2.0, EDGE_FPRIME), 2.0, EDGE_FPRIME)
        assert back.corrections == ()
        assert back.clock is Clock.CONTINUOUS
        assert np.array_equal(back.covariance_matrix(GRID), original.covariance_matrix(GRID))

    def test_polynomial_fprime(self):
        """Test f' may be given as a numpy Polynomial."""
        a = derandomize(model('continuous_a'), 2.0, Polynomial([0.0, 1.0]))
        b = derandomize(model('continuous_a'), 2.0, EDGE_FPRIME)
        assert np.allclose(a.covariance_matrix(GRID), b.covariance_matrix(GRID))

    def test_wrong_clock(self):
        """Test transforms check the source clock."""
        with pytest.raises(InvalidSpec):
            derandomize(model('discrete_a'), 1.0, EDGE_FPRIME)
        with pytest.raises(InvalidSpec):
            randomize(model('continuous_a'), 1.0, EDGE_FPRIME)

    def test_negative_c(self):
        """Test c < 0 raises InvalidSpec."""
        with pytest.raises(InvalidSpec):
            derandomize(model('continuous_a'), -1.0, EDGE_FPRIME)

    @settings(max_examples=50, deadline=None)
    @given(c=st.floats(min_value=0.0, max_value=10.0), s=st.floats(min_value=0.0, max_value=1.0),
           t=st.floats(min_value=0.0, max_value=1.0))
    def test_clock_gap_nonnegative(self, c, s, t):
        """Test the continuous covariance dominates the discrete one for f'(t) = t."""
        continuous = model('continuous_c')
        discrete = derandomize(continuous, c, EDGE_FPRIME)
        assert covariance(continuous, s, t) - covariance(discrete, s, t) >= -1e-12


class TestSamplers:
    """Test the Gaussian samplers."""

    def test_sample_shapes(self, rng):
        """Test single and batched draws."""
        m = model('discrete_a')
        assert gaussian_sample(m, GRID, rng).shape == (9,)
        assert gaussian_sample(m, GRID, rng, size=5).shape == (5, 9)

    def test_empirical_covariance(self, rng):
        """Test the sample covariance matches the model."""
        m = model('continuous_c')
        grid = [0.25, 0.5, 0.75]
        draws = gaussian_sample(m, grid, rng, size=40_000)
        assert np.allclose(np.cov(draws, rowvar=False), m.covariance_matrix(grid), atol=0.02)

    def test_zero_variance_points(self, rng):
        """Test grid points with zero variance are sampled as exactly zero."""
        draws = gaussian_sample(model('discrete_b'), [0.0, 0.5, 1.0], rng, size=10)
        assert np.all(draws[:, 0] == 0.0)
        assert np.all(draws[:, 2] == 0.0)

    def test_bipartite_nonpositive(self, rng):
        """Test the bipartite limit is never positive."""
        draws = gaussian_sample(model('bipartite_square'), GRID, rng, size=1000)
        assert np.all(draws <= 0.0)
        assert np.mean(draws[:, 4]) == pytest.approx(-0.0625, abs=0.01)

    def test_grid_checks(self, rng):
        """Test decreasing grids and points outside [0, 1] are rejected."""
        with pytest.raises(SpecInvalid):
            gaussian_sample(model('discrete_b'), [0.5, 0.2], rng)
        with pytest.raises(OutOfDomain):
            gaussian_sample(model('discrete_b'), [0.5, 1.2], rng)

    def test_sqrt_factor(self):
        """Test F F' reproduces a PSD matrix and indefinite input raises NotPSD."""
        cov = model('discrete_a').covariance_matrix(GRID)
        factor = sqrt_factor(cov)
        assert np.allclose(factor @ factor.T, cov)
        with pytest.raises(NotPSD):
            sqrt_factor(np.array([[1.0, 0.0], [0.0, -0.5]]))

    def test_brownian_representation(self, rng):
        """Test phi(t) W(t^2 / phi(t)) has covariance s^2 phi(t)."""
        grid = np.array([0.25, 0.5, 0.75])
        draws = brownian_representation_sample(1.0, 1.0, grid, rng, size=40_000)
        s, t = np.minimum.outer(grid, grid), np.maximum.outer(grid, grid)
        expected = s ** 2 * (1 - t)
        assert np.allclose(np.cov(draws, rowvar=False), expected, atol=0.01)

    def test_brownian_representation_domain(self, rng):
        """Test the representation needs t < 1."""
        with pytest.raises(OutOfDomain):
            brownian_representation_sample(1.0, 1.0, [0.5, 1.0], rng)
