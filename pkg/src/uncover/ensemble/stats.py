"""
Streaming moment accumulation and jackknife errors for ensemble samples.
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Mapping, Sequence, Union

import numpy as np
import pandas as pd
from numpy.typing import NDArray

logger = logging.getLogger(__name__)


class CovarianceAccumulator:
    """Running mean and co-moment matrix, updated one sample at a time."""

    def __init__(self, dim: int):
        self.count = 0
        self.mean = np.zeros(dim)
        self.comoment = np.zeros((dim, dim))

    def update(self, x: NDArray[np.float64]) -> None:
        self.count += 1
        delta = x - self.mean
        self.mean += delta / self.count
        self.comoment += np.outer(delta, x - self.mean)

    @staticmethod
    def merge(parts: List['CovarianceAccumulator']) -> 'CovarianceAccumulator':
        """Combine disjoint accumulators, in the given order."""
        out = CovarianceAccumulator(len(parts[0].mean))
        for part in parts:
            if part.count == 0:
                continue
            total = out.count + part.count
            delta = part.mean - out.mean
            out.comoment += part.comoment + np.outer(delta, delta) * out.count * part.count / total
            out.mean += delta * part.count / total
            out.count = total
        return out

    def covariance(self) -> NDArray[np.float64]:
        return self.comoment / (self.count - 1)


class MomentAccumulator(CovarianceAccumulator):
    """Adds per-coordinate third and fourth central moment sums."""

    def __init__(self, dim: int):
        super().__init__(dim)
        self.m3 = np.zeros(dim)
        self.m4 = np.zeros(dim)
        self.nonpositive = np.zeros(dim, dtype=np.int64)

    def update(self, x: NDArray[np.float64]) -> None:
        n1 = self.count
        n = n1 + 1
        delta = x - self.mean
        delta_n = delta / n
        term1 = delta * delta_n * n1
        m2 = np.diag(self.comoment).copy()
        self.m4 += term1 * delta_n ** 2 * (n * n - 3 * n + 3) + 6 * delta_n ** 2 * m2 - 4 * delta_n * self.m3
        self.m3 += term1 * delta_n * (n - 2) - 3 * delta_n * m2
        self.nonpositive += x <= 0
        super().update(x)

    def skewness(self) -> NDArray[np.float64]:
        m2 = np.diag(self.comoment)
        with np.errstate(divide='ignore', invalid='ignore'):
            g1 = np.sqrt(self.count) * self.m3 / m2 ** 1.5
        return np.where(m2 > 0, g1, 0.0)

    def excess_kurtosis(self) -> NDArray[np.float64]:
        m2 = np.diag(self.comoment)
        with np.errstate(divide='ignore', invalid='ignore'):
            g2 = self.count * self.m4 / m2 ** 2 - 3.0
        return np.where(m2 > 0, g2, 0.0)


@dataclass
class EnsembleStats:
    """Empirical moments of a normalized process on a grid."""

    grid: List[float]
    mean: List[float]
    cov: List[List[float]]
    skew: List[float]
    kurt: List[float]
    se_cov: List[List[float]]
    nonpositive_fraction: List[float]
    R: int
    n: int
    seed: int
    process: str
    normalization: str
    plugin: Dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'R': self.R,
            'cov': self.cov,
            'grid': self.grid,
            'kurt': self.kurt,
            'mean': self.mean,
            'n': self.n,
            'nonpositive_fraction': self.nonpositive_fraction,
            'normalization': self.normalization,
            'plugin': dict(sorted(self.plugin.items())),
            'process': self.process,
            'se_cov': self.se_cov,
            'seed': self.seed,
            'skew': self.skew,
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'EnsembleStats':
        fields = ('grid', 'mean', 'cov', 'skew', 'kurt', 'se_cov', 'nonpositive_fraction', 'R', 'n',
                  'seed', 'process', 'normalization')
        return cls(**{k: data[k] for k in fields}, plugin=dict(data.get('plugin', {})))

    def cov_array(self) -> NDArray[np.float64]:
        return np.asarray(self.cov, dtype=np.float64)

    def se_array(self) -> NDArray[np.float64]:
        return np.asarray(self.se_cov, dtype=np.float64)

    def covariance_frame(self) -> pd.DataFrame:
        return covariance_frame(self.grid, self.cov_array())


def covariance_frame(grid: Sequence[float], values: NDArray[np.float64]) -> pd.DataFrame:
    """Covariance table with rows s and columns t."""
    frame = pd.DataFrame(np.asarray(values), index=list(grid), columns=[repr(float(t)) for t in grid])
    frame.index.name = 's'
    return frame


def summarize(samples: NDArray[np.float64], blocks: int = 50) -> Dict[str, Any]:
    """
    Moments of samples fed in row order, with delete-one-block jackknife
    standard errors of the covariance entries.

    Args:
        samples: Array of shape (R, G), one row per replicate
        blocks: Number of contiguous jackknife blocks (capped at R)

    Returns:
        Mapping with mean, cov, skew, kurt, se_cov and nonpositive_fraction
    """
    R, G = samples.shape
    B = min(blocks, R)
    block_of = np.arange(R) * B // R

    total = MomentAccumulator(G)
    parts = [CovarianceAccumulator(G) for _ in range(B)]
    for r in range(R):
        total.update(samples[r])
        parts[block_of[r]].update(samples[r])

    leave_out = np.stack([
        CovarianceAccumulator.merge(parts[:b] + parts[b + 1:]).covariance() for b in range(B)
    ])
    spread = leave_out - leave_out.mean(axis=0)
    se_cov = np.sqrt((B - 1) / B * np.sum(spread ** 2, axis=0))

    return {
        'mean': total.mean.tolist(),
        'cov': total.covariance().tolist(),
        'skew': total.skewness().tolist(),
        'kurt': total.excess_kurtosis().tolist(),
        'se_cov': se_cov.tolist(),
        'nonpositive_fraction': (total.nonpositive / R).tolist(),
    }


def dump_json(payload: Mapping[str, Any], path: Union[str, Path, None] = None) -> str:
    """Serialize with sorted keys; floats print in shortest round-trip form."""
    text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def write_covariance_csv(frame: pd.DataFrame, path: Union[str, Path]) -> None:
    frame.to_csv(path, float_format='%.17g')
