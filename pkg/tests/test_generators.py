"""
Test graph generators and model specifications.
"""

from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import stats as sps

from src.uncover.errors import ConfigRejectionExceeded, InvalidSpec, RejectionBudgetExceeded
from src.uncover.generators import (DegreeDesign, ModelKind, Offspring, bst_tree, complete_bipartite, cond_gw_tree,
                                    config_model, cycle_lemma_rotation, cycle_with_isolated, generate, gnm, gnp,
                                    gw_degree_sequence, labelled_tree, model_spec, recursive_tree,
                                    tree_from_child_counts)
from src.uncover.graph import degree_stats
from src.uncover.retry_utils import Rejected, retry_until_accepted


def is_tree(graph):
    return graph.num_edges == graph.n - 1 and graph.component_count() == 1


class TestModelSpec:
    """Test model specification validation."""

    def test_valid_spec(self):
        """Test a valid spec keeps its fields."""
        spec = model_spec(kind='gnm', n=10, m=12)
        assert spec.kind is ModelKind.GNM
        assert spec.is_random

    def test_deterministic_kinds(self):
        """Test deterministic kinds are not random."""
        assert not model_spec(kind='path', n=4).is_random
        assert not model_spec(kind='cycle_with_isolated', n=6, cycle_length=3).is_random

    @pytest.mark.parametrize('fields', [
        {'kind': 'gnm', 'n': 4, 'm': 7},
        {'kind': 'gnp', 'n': 4, 'p': 1.5},
        {'kind': 'cond_gw', 'n': 4},
        {'kind': 'config_model', 'n': 3, 'degrees': [1, 1, 1]},
        {'kind': 'config_model', 'n': 3, 'degrees': [1, 1]},
        {'kind': 'complete_bipartite', 'n': 5},
        {'kind': 'cycle', 'n': 2},
        {'kind': 'cycle_with_isolated', 'n': 5, 'cycle_length': 6},
        {'kind': 'no_such_model', 'n': 5},
        {'kind': 'path', 'n': 5, 'colour': 'red'},
        {'kind': 'path', 'n': 0},
    ])
    def test_invalid_specs(self, fields):
        """Test violated invariants raise InvalidSpec."""
        with pytest.raises(InvalidSpec):
            model_spec(**fields)

    def test_two_level_design(self):
        """Test half the vertices get a+b and half a-b."""
        assert DegreeDesign(kind='two_level', a=3, b=1).degrees(4) == [4, 4, 2, 2]

    def test_hubs_design(self):
        """Test hubs of degree floor(1/delta) among degree-2 vertices."""
        degrees = DegreeDesign(kind='hubs', delta=0.25).degrees(10)
        assert degrees == [4, 4] + [2] * 8

    def test_regular_design(self):
        """Test the regular design."""
        spec = model_spec(kind='config_model', n=6, design={'kind': 'regular', 'd': 3})
        assert spec.degree_sequence() == [3] * 6


class TestTrees:
    """Test random tree samplers."""

    @pytest.mark.parametrize('n', [1, 2, 3, 10, 50])
    def test_labelled_tree_is_tree(self, rng, n):
        """Test the Pruefer sampler returns a spanning tree."""
        assert is_tree(labelled_tree(n, rng))

    def test_labelled_tree_uniform_on_three_vertices(self, rng):
        """Test each of the three labelled trees on three vertices appears with frequency 1/3."""
        draws = 3000
        counts = Counter(tuple(map(tuple, labelled_tree(3, rng).edges.tolist())) for _ in range(draws))
        assert len(counts) == 3
        for count in counts.values():
            assert abs(count / draws - 1 / 3) < 0.04

    def test_cycle_lemma_rotation(self):
        """Test the rotation starts right after the first minimum of the walk."""
        assert cycle_lemma_rotation([0, 2, 0, 1]).tolist() == [2, 0, 1, 0]

    @pytest.mark.parametrize('offspring', list(Offspring))
    def test_gw_degree_sequence(self, rng, offspring):
        """Test child counts sum to n-1 and encode a tree depth-first."""
        seq = gw_degree_sequence(offspring, 40, rng)
        walk = np.cumsum(seq - 1)
        assert len(seq) == 40
        assert seq.sum() == 39
        assert np.all(walk[:-1] >= 0)
        assert walk[-1] == -1

    def test_poisson_shape_law_on_three_vertices(self, rng):
        """Test Poisson(1) child counts on three vertices: (2, 0, 0) w.p. 1/3 and (1, 1, 0) w.p. 2/3."""
        draws = 6000
        counts = Counter(tuple(gw_degree_sequence(Offspring.POISSON1, 3, rng).tolist()) for _ in range(draws))
        assert set(counts) == {(2, 0, 0), (1, 1, 0)}
        assert counts[(2, 0, 0)] / draws == pytest.approx(1 / 3, abs=0.02)
        assert counts[(1, 1, 0)] / draws == pytest.approx(2 / 3, abs=0.02)

    def test_tree_from_child_counts(self):
        """Test depth-first labelling of a plane tree."""
        tree = tree_from_child_counts([2, 0, 1, 0])
        assert tree.edges.tolist() == [[1, 2], [1, 3], [3, 4]]

    @pytest.mark.parametrize('offspring', list(Offspring))
    def test_cond_gw_tree(self, rng, offspring):
        """Test conditioned Galton-Watson trees have n vertices."""
        assert is_tree(cond_gw_tree(offspring, 60, rng))

    def test_bst_tree(self, rng):
        """Test binary search trees have degree at most 3 and a root of degree at most 2."""
        tree = bst_tree(100, rng)
        assert is_tree(tree)
        assert tree.degrees.max() <= 3
        assert tree.degrees[0] <= 2

    def test_recursive_tree(self, rng):
        """Test every vertex j >= 2 has exactly one earlier parent."""
        tree = recursive_tree(50, rng)
        assert is_tree(tree)
        assert sorted(tree.edges[:, 1].tolist()) == list(range(2, 51))


class TestDegreeMoments:
    """Test tree degree moments against their large-n limits."""

    N = 5000
    RUNS = 10

    @pytest.mark.parametrize('fields, chistar, tol', [
        ({'kind': 'labelled_tree'}, 5.0, 0.12),
        ({'kind': 'recursive_tree'}, 6.0, 0.25),
        ({'kind': 'bst'}, 14 / 3, 0.1),
        ({'kind': 'cond_gw', 'offspring': 'poisson1'}, 5.0, 0.12),
        ({'kind': 'cond_gw', 'offspring': 'geometric'}, 6.0, 0.25),
        ({'kind': 'cond_gw', 'offspring': 'binomial2'}, 4.5, 0.07),
    ])
    def test_second_moment_and_max_degree(self, fields, chistar, tol):
        """Test the mean of (1/n) sum d_i^2 is near its limit and max degree stays below sqrt(n)/2."""
        spec = model_spec(n=self.N, **fields)
        rng = np.random.default_rng(5)
        chis = []
        for _ in range(self.RUNS):
            stats = degree_stats(generate(spec, rng))
            chis.append(stats.second_moment)
            assert stats.max_deg / np.sqrt(self.N) < 0.5
            assert stats.mean_deg == pytest.approx(2 * (self.N - 1) / self.N)
        assert np.mean(chis) == pytest.approx(chistar, abs=tol)


class TestRandomGraphs:
    """Test Erdos-Renyi graphs and the configuration model."""

    def test_gnm_edge_count(self, rng):
        """Test G(n, m) has exactly m edges."""
        assert gnm(30, 45, rng).num_edges == 45

    def test_gnm_uniform_over_edge_sets(self, rng):
        """Test G(4, 2) hits each of the 15 edge sets equally often by a chi-square test."""
        draws = 30_000
        counts = Counter(tuple(map(tuple, gnm(4, 2, rng).edges.tolist())) for _ in range(draws))
        assert len(counts) == 15
        assert sps.chisquare(list(counts.values())).pvalue > 1e-4

    def test_gnp_extremes(self, rng):
        """Test p=0 gives no edges and p=1 the complete graph."""
        assert gnp(8, 0.0, rng).num_edges == 0
        assert gnp(8, 1.0, rng).num_edges == 28

    def test_config_model_reject(self, rng):
        """Test the rejection matching realizes the degrees exactly."""
        degrees = [3] * 20
        graph = config_model(degrees, rng)
        assert graph.degrees.tolist() == degrees

    def test_config_model_repair(self, rng):
        """Test the repairing matching realizes the degrees exactly."""
        degrees = DegreeDesign(kind='hubs', delta=0.1).degrees(60)
        graph = config_model(degrees, rng, matching='repair')
        assert graph.degrees.tolist() == degrees

    def test_config_model_cap(self, rng):
        """Test an unrealizable sequence exhausts the rejection cap."""
        with pytest.raises(ConfigRejectionExceeded):
            config_model([2, 2], rng, max_attempts=5)


class TestDeterministic:
    """Test deterministic families."""

    def test_complete_bipartite(self):
        """Test K_{3,3} joins 1..3 to 4..6."""
        graph = complete_bipartite(6)
        assert graph.num_edges == 9
        assert graph.neighbors(1).tolist() == [4, 5, 6]
        assert graph.neighbors(5).tolist() == [1, 2, 3]

    def test_cycle_with_isolated(self):
        """Test the cycle occupies 1..m and the rest is isolated."""
        graph = cycle_with_isolated(8, 4)
        assert graph.num_edges == 4
        assert graph.degrees.tolist() == [2, 2, 2, 2, 0, 0, 0, 0]


class TestGenerate:
    """Test dispatch and determinism."""

    SPECS = [
        {'kind': 'labelled_tree', 'n': 30},
        {'kind': 'cond_gw', 'n': 30, 'offspring': 'geometric'},
        {'kind': 'bst', 'n': 30},
        {'kind': 'recursive_tree', 'n': 30},
        {'kind': 'gnm', 'n': 30, 'm': 40},
        {'kind': 'gnp', 'n': 30, 'p': 0.1},
        {'kind': 'config_model', 'n': 30, 'design': {'kind': 'regular', 'd': 4}},
        {'kind': 'path', 'n': 30},
        {'kind': 'cycle', 'n': 30},
        {'kind': 'complete_bipartite', 'n': 30},
        {'kind': 'cycle_with_isolated', 'n': 30, 'cycle_length': 10},
    ]

    @pytest.mark.parametrize('fields', SPECS)
    def test_same_seed_same_graph(self, fields):
        """Test identical spec and seed give an identical graph on n vertices."""
        spec = model_spec(**fields)
        first = generate(spec, np.random.default_rng(7))
        second = generate(spec, np.random.default_rng(7))
        assert first == second
        assert first.n == 30

    @settings(max_examples=20, deadline=None)
    @given(n=st.integers(min_value=1, max_value=40), seed=st.integers(min_value=0, max_value=2**32 - 1))
    def test_trees_span(self, n, seed):
        """Test every tree model spans its n vertices."""
        for kind in ('labelled_tree', 'bst', 'recursive_tree'):
            assert is_tree(generate(model_spec(kind=kind, n=n), np.random.default_rng(seed)))


class TestRetry:
    """Test the rejection retry decorator."""

    def test_returns_first_accepted(self):
        """Test the first accepted draw is returned."""
        calls = []

        @retry_until_accepted(RejectionBudgetExceeded, max_attempts=10)
        def attempt():
            calls.append(1)
            if len(calls) < 3:
                raise Rejected("not yet")
            return len(calls)

        assert attempt() == 3

    def test_cap_raises_configured_error(self, caplog):
        """Test exhausting the cap raises the configured error and logs it."""
        @retry_until_accepted(RejectionBudgetExceeded, max_attempts=4, warn_every=2)
        def attempt():
            raise Rejected("never")

        with pytest.raises(RejectionBudgetExceeded):
            attempt()
        assert "(attempt 2/4)" in caplog.text

    def test_cap_override(self):
        """Test the cap can be overridden per call."""
        calls = []

        @retry_until_accepted(RejectionBudgetExceeded, max_attempts=100)
        def attempt():
            calls.append(1)
            raise Rejected("never")

        with pytest.raises(RejectionBudgetExceeded):
            attempt(max_attempts=3)
        assert len(calls) == 3
