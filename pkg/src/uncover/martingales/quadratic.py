"""
Quadratic (co)variations of the tilde martingales as jump sums, and their
expectations.
"""

import logging
from enum import Enum
from typing import Dict

import numpy as np
from numpy.typing import NDArray

from ..engine import TimeAssignment
from ..engine.paths import check_domain
from ..errors import DimensionMismatch, TildeAtOne
from ..graph import Graph

logger = logging.getLogger(__name__)


class QVPair(str, Enum):
    QQ = 'QQ'
    SS = 'SS'
    NN = 'NN'
    QS = 'QS'
    QN = 'QN'
    SN = 'SN'
    RR = 'RR'
    QR = 'QR'
    RN = 'RN'


def _check_time(t: float) -> None:
    check_domain(t)
    if t >= 1.0:
        raise TildeAtOne("quadratic variations of tilde martingales need t < 1")


def neighbor_tilde_sums(graph: Graph, assignment: TimeAssignment) -> NDArray[np.float64]:
    """
    For each vertex i, the sum over neighbors j of Icheck_j just before T_i.

    Icheck_j(T_i-) = (1{T_j < T_i} - T_i) / (1 - T_i). Terms are added in
    ascending neighbor order.
    """
    if assignment.n != graph.n:
        raise DimensionMismatch(f"assignment has {assignment.n} times for a graph on {graph.n} vertices")
    rows = np.repeat(np.arange(graph.n), graph.degrees)
    Ti = assignment.times[rows]
    earlier = (assignment.rank[graph.indices] < assignment.rank[rows]).astype(np.float64)
    return np.bincount(rows, weights=(earlier - Ti) / (1.0 - Ti), minlength=graph.n)


def quadratic_covariations(graph: Graph, assignment: TimeAssignment, t: float) -> Dict[QVPair, float]:
    """
    All nine jump-sum (co)variations at time t.

    At T_i the tilde martingales jump by
    dQ = J_i / (1 - T_i), dS = d_i / (1 - T_i), dN = 1 / (1 - T_i) and
    dR = (d_i - dbar) / (1 - T_i), with J_i from ``neighbor_tilde_sums``.

    Args:
        graph: Graph being uncovered
        assignment: Its uncovering times
        t: Time in [0, 1)

    Returns:
        Mapping from pair tag to [X, Y]_t
    """
    _check_time(t)
    times = assignment.times
    d = graph.degrees.astype(np.float64)
    dev = d - 2.0 * graph.num_edges / graph.n
    J = neighbor_tilde_sums(graph, assignment)
    w = np.where(times <= t, 1.0 / (1.0 - times) ** 2, 0.0)

    return {
        QVPair.QQ: float(np.sum(w * J * J)),
        QVPair.SS: float(np.sum(w * d * d)),
        QVPair.NN: float(np.sum(w)),
        QVPair.QS: float(np.sum(w * J * d)),
        QVPair.QN: float(np.sum(w * J)),
        QVPair.SN: float(np.sum(w * d)),
        QVPair.RR: float(np.sum(w * dev * dev)),
        QVPair.QR: float(np.sum(w * J * dev)),
        QVPair.RN: float(np.sum(w * dev)),
    }


def quadratic_covariation(graph: Graph, assignment: TimeAssignment, pair: QVPair, t: float) -> float:
    """Jump-sum [X, Y]_t for one pair tag."""
    return quadratic_covariations(graph, assignment, t)[QVPair(pair)]


def expected_qv(graph: Graph, pair: QVPair, t: float) -> float:
    """
    Closed-form expectation of [X, Y]_t.

    Args:
        graph: Graph being uncovered
        pair: Pair tag
        t: Time in [0, 1)

    Returns:
        E[X, Y]_t; zero for QS, QN, QR and RN
    """
    _check_time(t)
    pair = QVPair(pair)
    n = graph.n
    m = graph.num_edges
    d = graph.degrees.astype(np.float64)
    ratio = t / (1.0 - t)

    if pair is QVPair.QQ:
        return m * ratio ** 2
    if pair is QVPair.SS:
        return float(np.sum(d * d)) * ratio
    if pair is QVPair.NN:
        return n * ratio
    if pair is QVPair.SN:
        return 2.0 * m * ratio
    if pair is QVPair.RR:
        dev = d - 2.0 * m / n
        return float(np.sum(dev * dev)) * ratio
    return 0.0
