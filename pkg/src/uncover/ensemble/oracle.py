"""
Exact moments of the discrete processes by enumerating every uncovering order.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Tuple

from scipy.sparse.csgraph import connected_components

from ..errors import DimensionMismatch, TooLarge
from ..graph import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleMoments:
    """Exact mean and variance of the visible edge and component counts after k steps."""

    n: int
    k: int
    edges_mean: float
    edges_variance: float
    components_mean: float
    components_variance: float
    orders: int

    def to_dict(self) -> Dict[str, float]:
        """JSON form; 'mean' and 'variance' refer to the edge count."""
        return {
            'components_mean': self.components_mean,
            'components_variance': self.components_variance,
            'k': self.k,
            'mean': self.edges_mean,
            'n': self.n,
            'orders': self.orders,
            'variance': self.edges_variance,
        }


def _subset_counts(graph: Graph, visible: FrozenSet[int]) -> Tuple[int, int]:
    if not visible:
        return 0, 0
    members = sorted(visible)
    sub = graph.adjacency_matrix()[members][:, members]
    edges = int(sub.sum()) // 2
    components, _ = connected_components(sub, directed=False)
    return edges, int(components)


def _moments(values: Dict[FrozenSet[int], int], counts: Dict[FrozenSet[int], int], total: int) -> Tuple[Fraction, Fraction]:
    mean = Fraction(sum(values[s] * c for s, c in counts.items()), total)
    second = Fraction(sum(values[s] ** 2 * c for s, c in counts.items()), total)
    return mean, second - mean * mean


def brute_force_oracle(graph: Graph, k: int, max_n: int = 8) -> OracleMoments:
    """
    Exact moments of L_dot[k] and K_dot[k] over all n! orders.

    Args:
        graph: Graph on at most ``max_n`` vertices
        k: Number of uncovered vertices, 0 <= k <= n
        max_n: Largest vertex count accepted

    Returns:
        OracleMoments, computed in exact rationals and returned as floats

    Raises:
        TooLarge: More than ``max_n`` vertices
        DimensionMismatch: k outside 0..n
    """
    n = graph.n
    if n > max_n:
        raise TooLarge(f"oracle enumerates n! orders; n={n} exceeds {max_n}")
    if not 0 <= k <= n:
        raise DimensionMismatch(f"k must lie in 0..{n}, got {k}")

    counts: Dict[FrozenSet[int], int] = {}
    orders = 0
    for order in itertools.permutations(range(n)):
        key = frozenset(order[:k])
        counts[key] = counts.get(key, 0) + 1
        orders += 1

    edges: Dict[FrozenSet[int], int] = {}
    components: Dict[FrozenSet[int], int] = {}
    for subset in counts:
        edges[subset], components[subset] = _subset_counts(graph, subset)

    edges_mean, edges_var = _moments(edges, counts, orders)
    comp_mean, comp_var = _moments(components, counts, orders)
    logger.debug(f"Oracle over {orders} orders and {len(counts)} visible sets: E[L]={edges_mean}")
    return OracleMoments(
        n=n,
        k=k,
        edges_mean=float(edges_mean),
        edges_variance=float(edges_var),
        components_mean=float(comp_mean),
        components_variance=float(comp_var),
        orders=orders,
    )
