"""
Erdos-Renyi graphs and the configuration model.
"""

import logging
from collections import defaultdict
from typing import Optional, Sequence, Set, Tuple

import numpy as np

from ..errors import ConfigRejectionExceeded
from ..graph import Graph
from ..retry_utils import Rejected, retry_until_accepted

logger = logging.getLogger(__name__)


def _pairs(n: int) -> Tuple[np.ndarray, np.ndarray]:
    u, v = np.triu_indices(n, k=1)
    return u + 1, v + 1


def gnm(n: int, m: int, rng: np.random.Generator) -> Graph:
    """Uniform m-subset of the n(n-1)/2 vertex pairs."""
    u, v = _pairs(n)
    chosen = rng.choice(len(u), size=m, replace=False)
    return Graph.from_edges(n, np.column_stack([u[chosen], v[chosen]]))


def gnp(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Every pair present independently with probability p."""
    u, v = _pairs(n)
    keep = rng.random(len(u)) < p
    return Graph.from_edges(n, np.column_stack([u[keep], v[keep]]))


def _shuffled_stubs(degrees: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    stubs = np.repeat(np.arange(1, len(degrees) + 1), degrees)
    rng.shuffle(stubs)
    return stubs


@retry_until_accepted(ConfigRejectionExceeded, max_attempts=10_000)
def _simple_matching(degrees: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    stubs = _shuffled_stubs(degrees, rng)
    pairs = np.sort(stubs.reshape(-1, 2), axis=1)
    if np.any(pairs[:, 0] == pairs[:, 1]):
        raise Rejected("matching has a self-loop")
    if len(np.unique(pairs, axis=0)) != len(pairs):
        raise Rejected("matching has a multi-edge")
    return pairs


def _suitable(edges: Set[Tuple[int, int]], potential: dict) -> bool:
    if not potential:
        return True
    nodes = list(potential)
    for i, s1 in enumerate(nodes):
        for s2 in nodes[:i]:
            a, b = min(s1, s2), max(s1, s2)
            if (a, b) not in edges:
                return True
    return False


@retry_until_accepted(ConfigRejectionExceeded, max_attempts=10_000)
def _repaired_matching(degrees: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    edges: Set[Tuple[int, int]] = set()
    stubs = _shuffled_stubs(degrees, rng).tolist()

    while stubs:
        potential = defaultdict(int)
        rng.shuffle(stubs)
        it = iter(stubs)
        for s1, s2 in zip(it, it):
            a, b = min(s1, s2), max(s1, s2)
            if a != b and (a, b) not in edges:
                edges.add((a, b))
            else:
                potential[s1] += 1
                potential[s2] += 1

        if not _suitable(edges, potential):
            raise Rejected(f"{sum(potential.values())} stubs left without a legal partner")
        stubs = [node for node, count in potential.items() for _ in range(count)]

    return np.array(sorted(edges), dtype=np.int64).reshape(-1, 2)


def config_model(degrees: Sequence[int], rng: np.random.Generator, matching: str = 'reject',
                 max_attempts: Optional[int] = None) -> Graph:
    """
    Simple graph with a prescribed degree sequence by stub matching.

    Args:
        degrees: Degree of vertex i at index i-1 (even sum)
        rng: Random stream
        matching: 'reject' discards the whole matching on any loop or
            multi-edge; 'repair' re-pairs only the offending stubs
        max_attempts: Cap on discarded matchings (default: 10000)

    Returns:
        Simple Graph with exactly the given degrees

    Raises:
        ConfigRejectionExceeded: When no simple matching is found within the cap
    """
    degrees = np.asarray(degrees, dtype=np.int64)
    n = len(degrees)
    attempt = _simple_matching if matching == 'reject' else _repaired_matching
    if max_attempts is None:
        pairs = attempt(degrees, rng)
    else:
        pairs = attempt(degrees, rng, max_attempts=max_attempts)
    return Graph.from_edges(n, pairs)
