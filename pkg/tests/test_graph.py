"""
Test graph representation, degree statistics and censuses.
"""

import math

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.uncover.errors import BadScale, InvalidGraph, NotRegular
from src.uncover.generators import gnp
from src.uncover.graph import (Graph, HomPattern, Regime, degree_stats, edge_list_text, hom_count, limit_params,
                               parse_edge_list, read_edge_list, sidorenko_chain, triangle_census,
                               variance_bound_terms, write_edge_list)


def random_graph(n, p, seed):
    return gnp(n, p, np.random.default_rng(seed))


class TestGraphConstruction:
    """Test Graph validation and canonical form."""

    def test_edges_are_canonicalized(self):
        """Test edges are stored once, smaller endpoint first, sorted."""
        graph = Graph.from_edges(4, [(3, 2), (2, 1), (4, 1)])
        assert graph.edges.tolist() == [[1, 2], [1, 4], [2, 3]]
        assert graph.num_edges == 3

    def test_isolated_vertices_allowed(self):
        """Test vertices without edges keep degree zero."""
        graph = Graph.from_edges(4, [(1, 2)])
        assert graph.degrees.tolist() == [1, 1, 0, 0]

    def test_neighbors_sorted(self, star):
        """Test neighbor lists are 1-based and ascending."""
        assert star.neighbors(1).tolist() == [2, 3, 4, 5]
        assert star.neighbors(6).tolist() == []

    def test_self_loop_rejected(self):
        """Test self-loops raise InvalidGraph."""
        with pytest.raises(InvalidGraph):
            Graph.from_edges(3, [(1, 2), (2, 2)])

    def test_duplicate_rejected(self):
        """Test duplicate edges in either orientation raise InvalidGraph."""
        with pytest.raises(InvalidGraph):
            Graph.from_edges(3, [(1, 2), (2, 1)])

    def test_label_out_of_range_rejected(self):
        """Test labels outside 1..n raise InvalidGraph."""
        with pytest.raises(InvalidGraph):
            Graph.from_edges(3, [(1, 4)])
        with pytest.raises(InvalidGraph):
            Graph.from_edges(3, [(0, 1)])

    def test_empty_vertex_set_rejected(self):
        """Test n < 1 raises InvalidGraph."""
        with pytest.raises(InvalidGraph):
            Graph.from_edges(0, [])

    def test_equality_ignores_input_order(self):
        """Test graphs built from permuted edge lists are equal."""
        assert Graph.from_edges(3, [(1, 2), (2, 3)]) == Graph.from_edges(3, [(3, 2), (2, 1)])
        assert Graph.from_edges(3, [(1, 2)]) != Graph.from_edges(4, [(1, 2)])

    def test_arrays_read_only(self, p5):
        """Test stored arrays cannot be modified."""
        with pytest.raises(ValueError):
            p5.edges[0, 0] = 3

    def test_forest_and_components(self, p5, c6, star):
        """Test forest detection and component counts."""
        assert p5.is_forest()
        assert not c6.is_forest()
        assert star.component_count() == 2
        assert star.is_forest()

    def test_networkx_view(self, c6):
        """Test conversion to networkx keeps vertices and edges."""
        g = c6.to_networkx()
        assert g.number_of_nodes() == 6
        assert g.number_of_edges() == 6
        assert nx.is_connected(g)


class TestEdgeList:
    """Test the edge-list text format."""

    def test_path_text(self, p5):
        """Test the path serializes to the documented layout."""
        assert edge_list_text(p5) == "5 4\n1 2\n2 3\n3 4\n4 5\n"

    def test_file_round_trip(self, tmp_path, star):
        """Test writing then reading gives an identical graph."""
        path = tmp_path / 'star.edges'
        write_edge_list(star, path)
        assert read_edge_list(path) == star

    def test_wrong_edge_count_rejected(self):
        """Test a header announcing the wrong number of edges raises InvalidGraph."""
        with pytest.raises(InvalidGraph):
            parse_edge_list("3 3\n1 2\n2 3\n")

    def test_malformed_tokens_rejected(self):
        """Test non-integer tokens raise InvalidGraph."""
        with pytest.raises(InvalidGraph):
            parse_edge_list("3 1\n1 x\n")

    def test_loop_in_file_rejected(self):
        """Test loops in a file raise InvalidGraph."""
        with pytest.raises(InvalidGraph):
            parse_edge_list("2 1\n2 2\n")


class TestDegreeStats:
    """Test degree moments."""

    def test_path_moments(self):
        """Test moments of the path on four vertices."""
        stats = degree_stats(Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)]))
        assert stats.mean_deg == pytest.approx(1.5)
        assert stats.second_moment == pytest.approx(2.5)
        assert stats.variance == pytest.approx(0.25)
        assert stats.centered_sq_sum == pytest.approx(1.0)
        assert stats.max_deg == 2
        assert stats.cube_sum == 18
        assert stats.degree_sum == 6

    def test_regular_graph_has_zero_variance(self, c6):
        """Test centered sums vanish exactly on a regular graph."""
        stats = degree_stats(c6)
        assert stats.variance == 0.0
        assert stats.centered_fourth_sum == 0.0

    def test_variance_bound_terms(self, star):
        """Test the bound quantities of the star."""
        terms = variance_bound_terms(degree_stats(star))
        assert terms['cube_sum'] == 64 + 4
        assert terms['fourth_sum'] == 256 + 4
        assert terms['max_deg'] == 4


class TestLimitParams:
    """Test regime parameters at finite n."""

    def test_sparse(self):
        """Test the sparse regime scales by sqrt(n)."""
        params = limit_params(degree_stats(Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)])))
        assert params.beta_n == pytest.approx(2.0)
        assert params.lambda1 == pytest.approx(1.5)
        assert params.alpha == pytest.approx(1.5)
        assert params.dstar == pytest.approx(1.5)
        assert params.chistar == pytest.approx(2.5)
        assert params.gammastar == pytest.approx(0.25)

    def test_regular(self, c6):
        """Test the regular regime scales by sqrt(n d)."""
        params = limit_params(degree_stats(c6), regime=Regime.REGULAR)
        assert params.beta_n == pytest.approx(math.sqrt(12))
        assert params.lambda1 == pytest.approx(1.0)
        assert params.lambda2 == 0.0
        assert params.alpha == pytest.approx(math.sqrt(2))
        assert params.gammastar == 0.0

    def test_regular_needs_equal_degrees(self, p5):
        """Test unequal degrees raise NotRegular."""
        with pytest.raises(NotRegular):
            limit_params(degree_stats(p5), regime=Regime.REGULAR)

    def test_general_needs_scale(self, p5):
        """Test the general regime requires a positive beta_n."""
        with pytest.raises(BadScale):
            limit_params(degree_stats(p5), regime=Regime.GENERAL)
        with pytest.raises(BadScale):
            limit_params(degree_stats(p5), regime=Regime.GENERAL, beta_n=0.0)

    def test_general(self, p5):
        """Test lambda parameters in the general regime."""
        stats = degree_stats(p5)
        params = limit_params(stats, regime=Regime.GENERAL, beta_n=4.0)
        assert params.lambda1 == pytest.approx(5 * 1.6 / 16)
        assert params.lambda2 == pytest.approx(stats.centered_sq_sum / 16)


class TestTriangleCensus:
    """Test triangle counts."""

    def test_complete_graph(self, k4):
        """Test K4 has four triangles, three through each vertex and two on each edge."""
        census = triangle_census(k4)
        assert census.t1 == 4
        assert census.eps.tolist() == [3, 3, 3, 3]
        assert census.delta.tolist() == [2] * 6
        assert census.triangles.tolist() == [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]

    def test_triangle_free(self, c6):
        """Test a cycle longer than three has no triangles."""
        census = triangle_census(c6)
        assert census.t1 == 0
        assert census.triangles.shape == (0, 3)

    def test_empty_graph(self):
        """Test a graph without edges."""
        census = triangle_census(Graph.from_edges(3, []))
        assert census.t1 == 0
        assert census.eps.tolist() == [0, 0, 0]

    @settings(max_examples=30, deadline=None)
    @given(n=st.integers(min_value=1, max_value=25), p=st.floats(min_value=0.0, max_value=1.0),
           seed=st.integers(min_value=0, max_value=2**32 - 1))
    def test_counts_agree_with_networkx(self, n, p, seed):
        """Test per-vertex counts match networkx and the sums agree."""
        graph = random_graph(n, p, seed)
        census = triangle_census(graph)
        per_vertex = nx.triangles(graph.to_networkx())
        assert census.eps.tolist() == [per_vertex[v] for v in range(1, n + 1)]
        assert census.eps.sum() == census.delta.sum() == 3 * census.t1


class TestHomCounts:
    """Test homomorphism counts."""

    def test_triangle_counts(self, k3):
        """Test counts on K3: trace(A^4) = 18, d'Ad = 24, sum d^3 = 24."""
        assert hom_count(HomPattern.C4, k3) == 18
        assert hom_count(HomPattern.P4, k3) == 24
        assert hom_count(HomPattern.K13, k3) == 24
        assert hom_count(HomPattern.K14, k3) == 48

    def test_single_edge(self):
        """Test counts on a single edge."""
        edge = Graph.from_edges(2, [(1, 2)])
        assert hom_count(HomPattern.C4, edge) == 2
        assert hom_count(HomPattern.P4, edge) == 2

    @settings(max_examples=30, deadline=None)
    @given(n=st.integers(min_value=1, max_value=30), p=st.floats(min_value=0.0, max_value=1.0),
           seed=st.integers(min_value=0, max_value=2**32 - 1))
    def test_sidorenko_chain(self, n, p, seed):
        """Test hom(C4) <= hom(P4) <= hom(K13) on random graphs."""
        chain = sidorenko_chain(random_graph(n, p, seed))
        assert chain.holds
