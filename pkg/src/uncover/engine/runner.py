"""
Exact simulation of one realization of the uncovering process.
"""

import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple, Optional, Union

import numpy as np
import pandas as pd
from numpy.typing import NDArray
from scipy.cluster.hierarchy import DisjointSet

from ..errors import DimensionMismatch
from ..graph import Graph, TriangleCensus, triangle_census
from .assignment import TimeAssignment
from .paths import StepPath

logger = logging.getLogger(__name__)

REALIZATION_COLUMNS = ['event_time', 'L', 'N', 'K', 'T']


@dataclass(frozen=True)
class Realization:
    """
    Visible edge, vertex, component and triangle counts in both clocks.

    ``L_dot[k]`` is the count after k uncoverings, k = 0..n, and the
    continuous paths jump at the times ``assignment.tau``.
    """

    L: StepPath
    N: StepPath
    K: Optional[StepPath]
    T: Optional[StepPath]
    assignment: TimeAssignment
    L_dot: NDArray[np.int64]
    K_dot: Optional[NDArray[np.int64]]
    T_dot: Optional[NDArray[np.int64]]

    @property
    def n(self) -> int:
        return self.assignment.n

    def to_frame(self) -> pd.DataFrame:
        """One row at t=0 followed by one row per uncovering event."""
        n = self.n
        frame = pd.DataFrame({
            'event_time': np.concatenate([[0.0], self.assignment.tau]),
            'L': self.L_dot,
            'N': np.arange(n + 1),
        })
        frame['K'] = pd.array(self.K_dot if self.K_dot is not None else [pd.NA] * (n + 1), dtype='Int64')
        frame['T'] = pd.array(self.T_dot if self.T_dot is not None else [pd.NA] * (n + 1), dtype='Int64')
        return frame[REALIZATION_COLUMNS]


def _steps(assignment: TimeAssignment, counts: NDArray[np.int64]) -> StepPath:
    return StepPath(event_times=assignment.tau, values=counts[1:], initial=int(counts[0]))


def _component_counts(graph: Graph, assignment: TimeAssignment) -> NDArray[np.int64]:
    n = graph.n
    rank = assignment.rank
    forest = DisjointSet(range(n))
    K_dot = np.zeros(n + 1, dtype=np.int64)
    for k, v in enumerate(assignment.order.tolist(), start=1):
        nbrs = graph.indices[graph.indptr[v]:graph.indptr[v + 1]]
        visible = nbrs[rank[nbrs] < k - 1]
        merges = sum(forest.merge(v, int(w)) for w in visible)
        K_dot[k] = K_dot[k - 1] + 1 - merges
    return K_dot


def run(graph: Graph, assignment: TimeAssignment, track_triangles: bool = False,
        track_components: bool = True, census: Optional[TriangleCensus] = None) -> Realization:
    """
    Uncover the vertices of a graph in time order.

    An edge becomes visible at the step of its later endpoint and a triangle
    at the step of its latest vertex, so the discrete counts are cumulative
    sums over those steps and the continuous paths read them off at the
    event times. Components are maintained by union-find.

    Args:
        graph: Graph to uncover
        assignment: Times for the graph's vertices
        track_triangles: Also count visible triangles
        track_components: Maintain the component count
        census: Precomputed triangle census to reuse

    Returns:
        Realization with L_dot[k] == L(tau_k) for every k in
        ``assignment.group_ends()``, which is every k when the times are
        distinct. Tied times are uncovered in vertex order.

    Raises:
        DimensionMismatch: When the assignment has a different vertex count
    """
    n = graph.n
    if assignment.n != n:
        raise DimensionMismatch(f"assignment has {assignment.n} times for a graph on {n} vertices")

    rank = assignment.rank
    u0 = graph.edges[:, 0] - 1
    v0 = graph.edges[:, 1] - 1
    edge_step = np.maximum(rank[u0], rank[v0]) + 1
    L_dot = np.cumsum(np.bincount(edge_step, minlength=n + 1)).astype(np.int64)

    K_dot = _component_counts(graph, assignment) if track_components else None

    T_dot = None
    if track_triangles:
        if census is None:
            census = triangle_census(graph)
        tri_step = rank[census.triangles - 1].max(axis=1) + 1 if census.t1 else np.zeros(0, dtype=np.int64)
        T_dot = np.cumsum(np.bincount(tri_step, minlength=n + 1)).astype(np.int64)

    return Realization(
        L=_steps(assignment, L_dot),
        N=_steps(assignment, np.arange(n + 1, dtype=np.int64)),
        K=_steps(assignment, K_dot) if K_dot is not None else None,
        T=_steps(assignment, T_dot) if T_dot is not None else None,
        assignment=assignment,
        L_dot=L_dot,
        K_dot=K_dot,
        T_dot=T_dot,
    )


class ComponentPeak(NamedTuple):
    peak: int
    step: int
    excess_over_half: int


def component_peak(realization: Realization) -> ComponentPeak:
    """
    Largest component count over the discrete clock.

    ``excess_over_half`` is the peak minus the count at step ceil(n/2).
    """
    if realization.K_dot is None:
        raise DimensionMismatch("realization was run without component tracking")
    K_dot = realization.K_dot
    step = int(np.argmax(K_dot))
    half = int(K_dot[math.ceil(realization.n / 2)])
    return ComponentPeak(peak=int(K_dot[step]), step=step, excess_over_half=int(K_dot[step]) - half)


def write_realization_csv(frame: pd.DataFrame, path: Union[str, Path]) -> None:
    frame.to_csv(path, index=False, float_format='%.17g')
    logger.debug(f"Wrote {len(frame)} realization rows to {path}")
