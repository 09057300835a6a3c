"""
Degree statistics and limit-regime parameters.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Optional

import numpy as np
from numpy.typing import NDArray

from ..errors import BadScale, NotRegular
from .model import Graph

logger = logging.getLogger(__name__)


class Regime(str, Enum):
    """Parameter regime a sequence of graphs is scaled under."""
    SPARSE = 'sparse'
    REGULAR = 'regular'
    GENERAL = 'general'


@dataclass(frozen=True)
class DegreeStats:
    """Exact degree moments of one graph."""

    degrees: NDArray[np.int64]
    mean_deg: float
    second_moment: float
    variance: float
    max_deg: int
    centered_sq_sum: float
    centered_fourth_sum: float
    cube_sum: int
    fourth_sum: int

    @property
    def n(self) -> int:
        return int(len(self.degrees))

    @property
    def degree_sum(self) -> int:
        return int(self.degrees.sum())


@dataclass(frozen=True)
class LimitParams:
    """
    Finite-n scaling parameters of one graph under a regime.

    ``dstar``, ``chistar`` and ``gammastar`` are filled for the sparse and
    regular regimes; for the general regime only the lambdas and alpha apply.
    """

    beta_n: float
    lambda1: float
    lambda2: float
    alpha: float
    regime: Regime
    dstar: Optional[float] = None
    chistar: Optional[float] = None
    gammastar: Optional[float] = None

    def to_dict(self) -> Dict[str, object]:
        return {
            'alpha': self.alpha,
            'beta_n': self.beta_n,
            'chistar': self.chistar,
            'dstar': self.dstar,
            'gammastar': self.gammastar,
            'lambda1': self.lambda1,
            'lambda2': self.lambda2,
            'regime': self.regime.value,
        }


def degree_stats(graph: Graph) -> DegreeStats:
    """
    Compute the degree moments of a graph.

    Power sums are exact integers; centered sums are evaluated as exact
    rationals and rounded once.

    Args:
        graph: Any valid graph

    Returns:
        DegreeStats for the graph
    """
    d = graph.degrees.astype(np.int64)
    n = graph.n
    values, counts = np.unique(d, return_counts=True)
    vals = [int(v) for v in values]
    cnts = [int(c) for c in counts]

    s1 = sum(c * v for v, c in zip(vals, cnts))
    s2 = sum(c * v ** 2 for v, c in zip(vals, cnts))
    s3 = sum(c * v ** 3 for v, c in zip(vals, cnts))
    s4 = sum(c * v ** 4 for v, c in zip(vals, cnts))

    centered_sq = Fraction(n * s2 - s1 * s1, n)
    centered_fourth = Fraction(sum(c * (n * v - s1) ** 4 for v, c in zip(vals, cnts)), n ** 4)

    return DegreeStats(
        degrees=d,
        mean_deg=s1 / n,
        second_moment=s2 / n,
        variance=float(centered_sq / n),
        max_deg=max(vals),
        centered_sq_sum=float(centered_sq),
        centered_fourth_sum=float(centered_fourth),
        cube_sum=s3,
        fourth_sum=s4,
    )


def limit_params(stats: DegreeStats, n: Optional[int] = None,
                 regime: Regime = Regime.SPARSE, beta_n: Optional[float] = None) -> LimitParams:
    """
    Evaluate the regime parameters at finite n.

    Args:
        stats: Degree statistics of the graph
        n: Vertex count (defaults to the number of degrees)
        regime: Regime tag
        beta_n: Scaling constant, required for the general regime

    Returns:
        LimitParams with lambda1 = n*dbar/beta^2, lambda2 = sum (d-dbar)^2 / beta^2
        and alpha = sqrt(n)*dbar/beta

    Raises:
        NotRegular: Regular regime with unequal degrees
        BadScale: Missing or non-positive scaling constant
    """
    n = stats.n if n is None else int(n)
    regime = Regime(regime)
    dbar = stats.mean_deg
    dstar = chistar = gammastar = None

    if regime is Regime.SPARSE:
        beta = math.sqrt(n)
        dstar = dbar
        chistar = stats.second_moment
        gammastar = chistar - dstar ** 2
    elif regime is Regime.REGULAR:
        if np.any(stats.degrees != stats.degrees[0]):
            raise NotRegular(
                f"regular regime needs equal degrees, got range "
                f"{int(stats.degrees.min())}..{stats.max_deg}"
            )
        d = float(stats.degrees[0])
        beta = math.sqrt(n * d)
        dstar, chistar, gammastar = d, d * d, 0.0
    else:
        if beta_n is None:
            raise BadScale("general regime needs an explicit beta_n")
        beta = float(beta_n)

    if not beta > 0:
        raise BadScale(f"beta_n must be positive, got {beta}")

    lambda2 = 0.0 if regime is Regime.REGULAR else stats.centered_sq_sum / beta ** 2
    return LimitParams(
        beta_n=beta,
        lambda1=n * dbar / beta ** 2,
        lambda2=lambda2,
        alpha=math.sqrt(n) * dbar / beta,
        regime=regime,
        dstar=dstar,
        chistar=chistar,
        gammastar=gammastar,
    )


def variance_bound_terms(stats: DegreeStats) -> Dict[str, float]:
    """Degree quantities that bound the variances of the quadratic variations."""
    return {
        'cube_sum': float(stats.cube_sum),
        'fourth_sum': float(stats.fourth_sum),
        'centered_fourth_sum': stats.centered_fourth_sum,
        'max_deg': float(stats.max_deg),
    }
