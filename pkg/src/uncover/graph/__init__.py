"""
Graph representation, degree statistics and small-subgraph censuses.
"""

from .census import HomPattern, SidorenkoChain, TriangleCensus, hom_count, sidorenko_chain, triangle_census
from .model import Graph, edge_list_text, parse_edge_list, read_edge_list, write_edge_list
from .stats import DegreeStats, LimitParams, Regime, degree_stats, limit_params, variance_bound_terms

__all__ = [
    'Graph', 'edge_list_text', 'parse_edge_list', 'read_edge_list', 'write_edge_list',
    'DegreeStats', 'LimitParams', 'Regime', 'degree_stats', 'limit_params', 'variance_bound_terms',
    'HomPattern', 'SidorenkoChain', 'TriangleCensus', 'hom_count', 'sidorenko_chain', 'triangle_census',
]
