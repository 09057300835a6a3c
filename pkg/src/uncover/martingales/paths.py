"""
Centered processes Q, S, Nbar, R of the continuous-clock edge count and
their tilde martingales.
"""

import logging
from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np
from numpy.typing import NDArray

from ..engine import PolyPath, Realization, TildePath, TimeAssignment, run
from ..errors import DimensionMismatch
from ..graph import Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MartingalePaths:
    """
    Q(t) = sum over edges ij of Ibar_i Ibar_j, S(t) = sum d_i Ibar_i,
    Nbar(t) = N(t) - nt and R(t) = S(t) - dbar Nbar(t), where
    Ibar_i(t) = 1{T_i <= t} - t. Tilde paths divide Q by (1-t)^2 and the
    others by (1-t).
    """

    Q: PolyPath
    S: PolyPath
    Nbar: PolyPath
    R: PolyPath
    Qt: TildePath
    St: TildePath
    Nt: TildePath
    Rt: TildePath
    num_edges: int
    n: int
    dbar: float


def visible_neighbor_counts(graph: Graph, assignment: TimeAssignment) -> NDArray[np.int64]:
    """Neighbors of each vertex uncovered strictly before it."""
    rows = np.repeat(np.arange(graph.n), graph.degrees)
    earlier = assignment.rank[graph.indices] < assignment.rank[rows]
    return np.bincount(rows, weights=earlier, minlength=graph.n).astype(np.int64)


def martingale_paths(graph: Graph, assignment: TimeAssignment) -> MartingalePaths:
    """
    Build Q, S, Nbar, R as exact piecewise polynomials.

    Between events every Ibar_i is 1 - t or -t, so each edge term
    (a_i - t)(a_j - t) contributes a_i a_j - t(a_i + a_j) + t^2. The
    coefficients are updated as each vertex becomes visible.

    Args:
        graph: Graph being uncovered
        assignment: Its uncovering times

    Returns:
        MartingalePaths on the assignment's event times
    """
    n = graph.n
    if assignment.n != n:
        raise DimensionMismatch(f"assignment has {assignment.n} times for a graph on {n} vertices")

    d = graph.degrees.astype(np.float64)
    m = graph.num_edges
    dbar = 2.0 * m / n
    order = assignment.order
    vis = visible_neighbor_counts(graph, assignment)

    both_visible = np.concatenate([[0], np.cumsum(vis[order])]).astype(np.float64)
    visible_degree = np.concatenate([[0.0], np.cumsum(d[order])])
    visible_count = np.arange(n + 1, dtype=np.float64)
    deviation = d - dbar
    visible_deviation = np.concatenate([[0.0], np.cumsum(deviation[order])])
    ones = np.ones(n + 1)

    q_coefs = np.column_stack([both_visible, -visible_degree, m * ones])
    s_coefs = np.column_stack([visible_degree, -2.0 * m * ones])
    n_coefs = np.column_stack([visible_count, -float(n) * ones])
    r_coefs = np.column_stack([visible_deviation, -float(deviation.sum()) * ones])

    tau = assignment.tau
    Q = PolyPath(tau, q_coefs)
    S = PolyPath(tau, s_coefs)
    Nbar = PolyPath(tau, n_coefs)
    R = PolyPath(tau, r_coefs)
    return MartingalePaths(
        Q=Q, S=S, Nbar=Nbar, R=R,
        Qt=TildePath(Q, 2), St=TildePath(S, 1), Nt=TildePath(Nbar, 1), Rt=TildePath(R, 1),
        num_edges=m, n=n, dbar=dbar,
    )


class DecompositionResidual(NamedTuple):
    plain: float
    r_form: float

    @property
    def max_abs(self) -> float:
        return max(abs(self.plain), abs(self.r_form))


def decomposition_residual(graph: Graph, assignment: TimeAssignment, t: float,
                           realization: Optional[Realization] = None,
                           paths: Optional[MartingalePaths] = None) -> DecompositionResidual:
    """
    Residuals of L(t) = Q + tS + t^2|E| and L(t) = Q + tR + t dbar Nbar + t^2 n dbar / 2.

    Both are zero up to rounding of order 1e-9 * (1 + |E|).
    """
    if realization is None:
        realization = run(graph, assignment, track_components=False)
    if paths is None:
        paths = martingale_paths(graph, assignment)

    L = float(realization.L.eval(t))
    Q = paths.Q.eval(t)
    S = paths.S.eval(t)
    R = paths.R.eval(t)
    Nbar = paths.Nbar.eval(t)
    m, n, dbar = paths.num_edges, paths.n, paths.dbar

    plain = L - (Q + t * S + t * t * m)
    r_form = L - (Q + t * R + t * dbar * Nbar + t * t * n * dbar / 2.0)
    return DecompositionResidual(plain=plain, r_form=r_form)
