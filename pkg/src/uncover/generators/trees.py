"""
Random tree samplers: uniform labelled trees, conditioned Galton-Watson
trees, binary search trees and random recursive trees.
"""

import logging
from typing import List, Sequence

import networkx as nx
import numpy as np
from numpy.typing import NDArray

from ..errors import RejectionBudgetExceeded
from ..graph import Graph
from ..retry_utils import Rejected, retry_until_accepted
from .specs import Offspring

logger = logging.getLogger(__name__)


def labelled_tree(n: int, rng: np.random.Generator) -> Graph:
    """Uniform labelled tree on 1..n from a uniform Pruefer sequence."""
    if n == 1:
        return Graph.from_edges(1, [])
    if n == 2:
        return Graph.from_edges(2, [(1, 2)])
    sequence = rng.integers(0, n, size=n - 2)
    tree = nx.from_prufer_sequence(sequence.tolist())
    return Graph.from_edges(n, np.asarray(list(tree.edges()), dtype=np.int64) + 1)


def _draw_offspring(offspring: Offspring, size: int, rng: np.random.Generator) -> NDArray[np.int64]:
    if offspring is Offspring.POISSON1:
        return rng.poisson(1.0, size=size)
    if offspring is Offspring.BINOMIAL2:
        return rng.binomial(2, 0.5, size=size)
    # numpy's geometric counts trials, offspring counts failures
    return rng.geometric(0.5, size=size) - 1


@retry_until_accepted(RejectionBudgetExceeded, max_attempts=100_000, warn_every=10_000)
def _conditioned_offspring(offspring: Offspring, n: int, rng: np.random.Generator) -> NDArray[np.int64]:
    xi = _draw_offspring(offspring, n, rng)
    total = int(xi.sum())
    if total != n - 1:
        raise Rejected(f"offspring sum {total} != {n - 1}")
    return xi


def cycle_lemma_rotation(xi: Sequence[int]) -> NDArray[np.int64]:
    """
    Rotate child counts summing to n-1 into a valid depth-first encoding.

    The walk S_k = sum_{i<=k} (xi_i - 1) is restarted right after its first
    global minimum, which is the unique rotation whose walk stays nonnegative
    until the final step.
    """
    xi = np.asarray(xi, dtype=np.int64)
    walk = np.cumsum(xi - 1)
    j = int(np.argmin(walk))
    return np.concatenate([xi[j + 1:], xi[:j + 1]])


def gw_degree_sequence(offspring: Offspring, n: int, rng: np.random.Generator,
                       max_attempts: int = 100_000) -> NDArray[np.int64]:
    """
    Child counts of a critical Galton-Watson tree conditioned on n vertices.

    Args:
        offspring: Offspring law
        n: Number of vertices
        rng: Random stream
        max_attempts: Cap on rejections of the sum event

    Returns:
        Length-n array summing to n-1, valid as depth-first child counts

    Raises:
        RejectionBudgetExceeded: When the sum is not hit within the cap
    """
    xi = _conditioned_offspring(Offspring(offspring), n, rng, max_attempts=max_attempts)
    return cycle_lemma_rotation(xi)


def tree_from_child_counts(child_counts: Sequence[int]) -> Graph:
    """Plane tree with vertices labelled in depth-first order, root 1."""
    n = len(child_counts)
    edges: List[tuple] = []
    stack: List[List[int]] = []
    for k, count in enumerate(child_counts, start=1):
        if stack:
            top = stack[-1]
            edges.append((top[0], k))
            top[1] -= 1
            if top[1] == 0:
                stack.pop()
        if count > 0:
            stack.append([k, int(count)])
    return Graph.from_edges(n, edges)


def cond_gw_tree(offspring: Offspring, n: int, rng: np.random.Generator,
                 max_attempts: int = 100_000) -> Graph:
    return tree_from_child_counts(gw_degree_sequence(offspring, n, rng, max_attempts=max_attempts))


def bst_tree(n: int, rng: np.random.Generator) -> Graph:
    """
    Binary search tree of a uniform random permutation.

    Vertex i is the i-th inserted key, so vertex 1 is the root.
    """
    keys = rng.permutation(n)
    left = {}
    right = {}
    vertex_of = {int(keys[0]): 1}
    edges = []
    root = int(keys[0])
    for i in range(1, n):
        key = int(keys[i])
        node = root
        while True:
            branch = left if key < node else right
            child = branch.get(node)
            if child is None:
                branch[node] = key
                break
            node = child
        vertex_of[key] = i + 1
        edges.append((vertex_of[node], i + 1))
    return Graph.from_edges(n, edges)


def recursive_tree(n: int, rng: np.random.Generator) -> Graph:
    """Vertex j >= 2 attaches to a uniform vertex among 1..j-1."""
    if n == 1:
        return Graph.from_edges(1, [])
    children = np.arange(2, n + 1)
    parents = rng.integers(1, children)
    return Graph.from_edges(n, np.column_stack([parents, children]))
