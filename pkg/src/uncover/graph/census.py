"""
Triangle census and homomorphism counts of small patterns.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np
from numpy.typing import NDArray

from .model import Graph

logger = logging.getLogger(__name__)


class HomPattern(str, Enum):
    C4 = 'C4'
    P4 = 'P4'
    K13 = 'K13'
    K14 = 'K14'


@dataclass(frozen=True)
class TriangleCensus:
    """
    Triangle counts of a graph.

    ``delta`` is aligned with ``graph.edges``; ``triangles`` lists every
    triangle once as 1-based (i, j, k) with i < j < k.
    """

    t1: int
    eps: NDArray[np.int64]
    delta: NDArray[np.int64]
    triangles: NDArray[np.int64]


def triangle_census(graph: Graph) -> TriangleCensus:
    """
    Count triangles through every vertex and edge.

    Common-neighbor counts come from the sparse product A @ A read at the
    edges; the triangle list intersects sorted neighbor lists only on edges
    with a common neighbor, so the cost is O(sum of d_i^2).

    Args:
        graph: Any valid graph

    Returns:
        TriangleCensus with sum(eps) = sum(delta) = 3 * t1
    """
    m = graph.num_edges
    if m == 0:
        empty = np.empty((0, 3), dtype=np.int64)
        return TriangleCensus(0, np.zeros(graph.n, dtype=np.int64), np.zeros(0, dtype=np.int64), empty)

    adj = graph.adjacency_matrix()
    walks2 = adj @ adj
    u0 = graph.edges[:, 0] - 1
    v0 = graph.edges[:, 1] - 1
    delta = np.asarray(walks2[u0, v0]).ravel().astype(np.int64)

    found = []
    for e in np.flatnonzero(delta):
        u, v = int(u0[e]), int(v0[e])
        common = np.intersect1d(
            graph.indices[graph.indptr[u]:graph.indptr[u + 1]],
            graph.indices[graph.indptr[v]:graph.indptr[v + 1]],
            assume_unique=True,
        )
        for w in common[common > v]:
            found.append((u + 1, v + 1, int(w) + 1))

    triangles = np.array(found, dtype=np.int64).reshape(-1, 3)
    eps = np.bincount(triangles.ravel() - 1, minlength=graph.n).astype(np.int64)
    census = TriangleCensus(t1=len(triangles), eps=eps, delta=delta, triangles=triangles)
    logger.debug(f"Triangle census of {graph!r}: T(1)={census.t1}")
    return census


def hom_count(pattern: HomPattern, graph: Graph) -> int:
    """
    Number of homomorphisms from a small pattern into the graph.

    C4 is the closed 4-walk count trace(A^4) = sum of squared entries of A^2;
    P4 is the 3-edge walk count d^T A d; stars are degree power sums.

    Args:
        pattern: One of C4, P4, K13, K14
        graph: Target graph

    Returns:
        Exact count as a Python int
    """
    pattern = HomPattern(pattern)
    d = graph.degrees.astype(np.int64)

    if pattern is HomPattern.K13:
        return int(sum(int(x) ** 3 for x in d))
    if pattern is HomPattern.K14:
        return int(sum(int(x) ** 4 for x in d))

    adj = graph.adjacency_matrix()
    if pattern is HomPattern.P4:
        return int(d @ (adj @ d))

    walks2 = (adj @ adj).tocsr()
    return int(walks2.multiply(walks2).sum())


class SidorenkoChain(NamedTuple):
    c4: int
    p4: int
    k13: int

    @property
    def holds(self) -> bool:
        return self.c4 <= self.p4 <= self.k13


def sidorenko_chain(graph: Graph) -> SidorenkoChain:
    """hom(C4) <= hom(P4) <= hom(K13) = sum of cubed degrees."""
    return SidorenkoChain(
        c4=hom_count(HomPattern.C4, graph),
        p4=hom_count(HomPattern.P4, graph),
        k13=hom_count(HomPattern.K13, graph),
    )
