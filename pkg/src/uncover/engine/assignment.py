"""
Uncovering times of the vertices.
"""

import logging
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..errors import DimensionMismatch, OutOfDomain

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TimeAssignment:
    """
    Per-vertex times T_i and their order statistics.

    ``order[k-1]`` is the 0-based vertex uncovered k-th, ``tau[k-1]`` its
    time and ``rank[v]`` the 0-based position of vertex v. Equal times are
    ordered by vertex index; within such a group the continuous paths jump
    once, to the count after the group's last step.
    """

    times: NDArray[np.float64]
    order: NDArray[np.int64]
    tau: NDArray[np.float64]
    rank: NDArray[np.int64]

    @property
    def n(self) -> int:
        return int(len(self.times))

    @property
    def distinct(self) -> bool:
        return bool(np.all(np.diff(self.tau) > 0))

    def group_ends(self) -> NDArray[np.int64]:
        """Steps k (1-based) after which the next uncovering time is strictly later."""
        k = np.arange(1, self.n + 1)
        return k[np.append(np.diff(self.tau) > 0, True)]

    @classmethod
    def from_times(cls, times: ArrayLike) -> 'TimeAssignment':
        times = np.asarray(times, dtype=np.float64)
        if times.ndim != 1 or len(times) == 0:
            raise DimensionMismatch(f"need a non-empty vector of times, got shape {times.shape}")
        if np.any(~((times > 0.0) & (times < 1.0))):
            raise OutOfDomain("uncovering times must lie in (0, 1)")
        order = np.argsort(times, kind='stable')
        rank = np.empty_like(order)
        rank[order] = np.arange(len(times))
        for a in (times, order, rank):
            a.setflags(write=False)
        tau = times[order]
        tau.setflags(write=False)
        if np.any(np.diff(tau) == 0):
            logger.warning(f"{int(np.sum(np.diff(tau) == 0))} tied uncovering time(s); ties follow vertex index")
        return cls(times=times, order=order, tau=tau, rank=rank)


def sample_uncover_times(n: int, rng: np.random.Generator) -> TimeAssignment:
    """I.i.d. uniform times on (0, 1) for vertices 1..n."""
    if n < 1:
        raise DimensionMismatch(f"need at least one vertex, got n={n}")
    times = rng.uniform(np.finfo(np.float64).tiny, 1.0, size=n)
    return TimeAssignment.from_times(times)
