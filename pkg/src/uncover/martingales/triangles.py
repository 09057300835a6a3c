"""
Decomposition of the visible-triangle count into centered sums.
"""

import logging
from typing import NamedTuple, Optional

import numpy as np
from numpy.typing import NDArray

from ..engine import Realization, TimeAssignment, run
from ..engine.paths import check_domain
from ..errors import DimensionMismatch, TildeAtOne
from ..graph import Graph, TriangleCensus

logger = logging.getLogger(__name__)


class TriangleDecomposition(NamedTuple):
    """
    6T(t) = T1 + 3t T2 + 3t^2 T3 + 6t^3 T(1), sums over ordered triples.

    T1 = sum Ibar_i Ibar_j Ibar_k, T2 = sum Ibar_i Ibar_j, T3 = sum Ibar_i.
    """

    t1: float
    t2: float
    t3: float
    residual: float


def _centered(assignment: TimeAssignment, t: float) -> NDArray[np.float64]:
    return (assignment.times <= t).astype(np.float64) - t


def triangle_decomposition(graph: Graph, assignment: TimeAssignment, census: TriangleCensus, t: float,
                           realization: Optional[Realization] = None) -> TriangleDecomposition:
    """
    Evaluate the three centered triangle sums and the decomposition residual.

    T1 runs over the listed triangles, T2 over edges weighted by common
    neighbors and T3 over vertices weighted by triangle counts; the visible
    count T(t) comes from the engine.

    Args:
        graph: Graph being uncovered
        assignment: Its uncovering times
        census: Triangle census of the graph
        t: Time in [0, 1]
        realization: Engine run with triangle tracking, reused if given

    Returns:
        TriangleDecomposition with residual zero up to 1e-9 * (1 + T(1))
    """
    check_domain(t)
    if assignment.n != graph.n:
        raise DimensionMismatch(f"assignment has {assignment.n} times for a graph on {graph.n} vertices")
    if realization is None or realization.T is None:
        realization = run(graph, assignment, track_triangles=True, track_components=False, census=census)

    ibar = _centered(assignment, t)
    if census.t1:
        tri = census.triangles - 1
        t1 = 6.0 * float(np.sum(ibar[tri[:, 0]] * ibar[tri[:, 1]] * ibar[tri[:, 2]]))
    else:
        t1 = 0.0
    u0 = graph.edges[:, 0] - 1
    v0 = graph.edges[:, 1] - 1
    t2 = 2.0 * float(np.sum(census.delta * ibar[u0] * ibar[v0]))
    t3 = 2.0 * float(np.sum(census.eps * ibar))

    visible = float(realization.T.eval(t))
    residual = 6.0 * visible - (t1 + 3.0 * t * t2 + 3.0 * t * t * t3 + 6.0 * t ** 3 * census.t1)
    return TriangleDecomposition(t1=t1, t2=t2, t3=t3, residual=residual)


def triangle_martingales(graph: Graph, assignment: TimeAssignment, census: TriangleCensus,
                         t: float) -> NDArray[np.float64]:
    """(T1~, T2~, T3~) = (T1 / (1-t)^3, T2 / (1-t)^2, T3 / (1-t)) at t < 1."""
    check_domain(t)
    if t >= 1.0:
        raise TildeAtOne("triangle martingales are undefined at t=1")
    parts = triangle_decomposition(graph, assignment, census, t)
    return np.array([parts.t1 / (1 - t) ** 3, parts.t2 / (1 - t) ** 2, parts.t3 / (1 - t)])


def triangle_quadratic_variation(graph: Graph, assignment: TimeAssignment, census: TriangleCensus,
                                 t: float) -> float:
    """
    Jump sum [T1~, T1~]_t.

    At T_i the martingale T1~ jumps by 3 / (1 - T_i) times the sum over
    ordered pairs (j, k) closing a triangle with i of Icheck_j Icheck_k,
    evaluated just before T_i.
    """
    check_domain(t)
    if t >= 1.0:
        raise TildeAtOne("quadratic variation of T1~ needs t < 1")
    if census.t1 == 0:
        return 0.0

    times = assignment.times
    rank = assignment.rank
    tri = census.triangles - 1
    inner = np.zeros(graph.n)
    for rot in range(3):
        i = tri[:, rot]
        j = tri[:, (rot + 1) % 3]
        k = tri[:, (rot + 2) % 3]
        Ti = times[i]
        check_j = ((rank[j] < rank[i]).astype(np.float64) - Ti) / (1.0 - Ti)
        check_k = ((rank[k] < rank[i]).astype(np.float64) - Ti) / (1.0 - Ti)
        inner += np.bincount(i, weights=2.0 * check_j * check_k, minlength=graph.n)

    w = np.where(times <= t, 1.0 / (1.0 - times) ** 2, 0.0)
    return float(np.sum(w * (3.0 * inner) ** 2))


def expected_triangle_qv(census: TriangleCensus, t: float) -> float:
    """E[T1~, T1~]_t = 36 T(1) t^3 / (1 - t)^3."""
    check_domain(t)
    if t >= 1.0:
        raise TildeAtOne("quadratic variation of T1~ needs t < 1")
    return 36.0 * census.t1 * t ** 3 / (1.0 - t) ** 3
