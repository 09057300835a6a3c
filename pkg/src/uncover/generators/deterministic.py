"""
Deterministic graph families.
"""

import numpy as np

from ..graph import Graph


def path_graph(n: int) -> Graph:
    v = np.arange(1, n)
    return Graph.from_edges(n, np.column_stack([v, v + 1]))


def cycle_graph(n: int) -> Graph:
    v = np.arange(1, n + 1)
    return Graph.from_edges(n, np.column_stack([v, np.roll(v, -1)]))


def complete_bipartite(n: int) -> Graph:
    """K_{n/2,n/2} with parts 1..n/2 and n/2+1..n."""
    half = n // 2
    left, right = np.meshgrid(np.arange(1, half + 1), np.arange(half + 1, n + 1), indexing='ij')
    return Graph.from_edges(n, np.column_stack([left.ravel(), right.ravel()]))


def cycle_with_isolated(n: int, cycle_length: int) -> Graph:
    """Cycle on 1..cycle_length plus isolated vertices up to n."""
    v = np.arange(1, cycle_length + 1)
    return Graph.from_edges(n, np.column_stack([v, np.roll(v, -1)]))


def complete_graph(n: int) -> Graph:
    u, v = np.triu_indices(n, k=1)
    return Graph.from_edges(n, np.column_stack([u + 1, v + 1]))
