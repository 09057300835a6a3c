"""
Comparison of empirical ensemble moments with a limit covariance.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np
import pandas as pd
from numpy.typing import NDArray

from ..errors import GridMismatch, InvalidSpec
from ..limits import CovarianceModel
from .stats import EnsembleStats

logger = logging.getLogger(__name__)

GRID_ATOL = 1e-12


@dataclass(frozen=True)
class TabulatedCovariance:
    """A covariance given only on a grid, read from a CSV matrix."""

    grid: Tuple[float, ...]
    values: NDArray[np.float64]
    normalization: Optional[str] = None

    @classmethod
    def read_csv(cls, path: Union[str, Path]) -> 'TabulatedCovariance':
        frame = pd.read_csv(path, index_col=0)
        try:
            grid = tuple(float(s) for s in frame.index)
            columns = [float(c) for c in frame.columns]
        except ValueError as e:
            raise InvalidSpec(f"{path}: covariance CSV needs numeric row and column labels") from e
        if not np.allclose(grid, columns, atol=GRID_ATOL, rtol=0.0):
            raise GridMismatch(f"{path}: row and column grids differ")
        return cls(grid=grid, values=frame.to_numpy(dtype=np.float64))

    def covariance_matrix(self, grid) -> NDArray[np.float64]:
        grid = np.asarray(grid, dtype=np.float64)
        if len(grid) != len(self.grid) or not np.allclose(grid, self.grid, atol=GRID_ATOL, rtol=0.0):
            raise GridMismatch(f"tabulated grid {list(self.grid)} differs from {grid.tolist()}")
        return self.values

    def mean(self, t) -> NDArray[np.float64]:
        return np.zeros_like(np.asarray(t, dtype=np.float64))

    @property
    def is_gaussian(self) -> bool:
        return True


@dataclass
class ComparisonReport:
    """Outcome of an ensemble-versus-limit comparison."""

    passed: bool
    covariance_passed: bool
    mean_passed: bool
    max_abs_diff: float
    max_z: float
    worst_cell: Tuple[float, float]
    max_mean_drift: float
    mean_drift: List[float]
    normalization_match: Optional[bool]
    gaussian_screen: Dict[str, Any]
    tolerances: Dict[str, float]
    failures: List[Dict[str, float]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'covariance_passed': self.covariance_passed,
            'failures': self.failures,
            'gaussian_screen': self.gaussian_screen,
            'max_abs_diff': self.max_abs_diff,
            'max_mean_drift': self.max_mean_drift,
            'max_z': self.max_z,
            'mean_drift': self.mean_drift,
            'mean_passed': self.mean_passed,
            'normalization_match': self.normalization_match,
            'passed': self.passed,
            'tolerances': self.tolerances,
            'worst_cell': list(self.worst_cell),
        }


def gaussian_screen(stats: EnsembleStats, skew_limit: float = 0.15, kurt_limit: float = 0.3) -> Dict[str, Any]:
    """
    Marginal skewness and excess kurtosis checked against limits.

    Informational only; it never changes the comparison outcome.
    """
    skew = np.abs(np.asarray(stats.skew))
    kurt = np.abs(np.asarray(stats.kurt))
    return {
        'kurt_limit': kurt_limit,
        'max_abs_kurt': float(kurt.max()),
        'max_abs_skew': float(skew.max()),
        'passed': bool(skew.max() <= skew_limit and kurt.max() <= kurt_limit),
        'skew_limit': skew_limit,
    }


def compare(stats: EnsembleStats, model: Union[CovarianceModel, TabulatedCovariance], abs_tol: float = 0.02,
            z_tol: float = 5.0, rel_tol: float = 0.0, skew_limit: float = 0.15,
            kurt_limit: float = 0.3) -> ComparisonReport:
    """
    Check empirical covariance and mean against a limit model.

    A covariance cell passes when |empirical - theory| is at most
    max(abs_tol, z_tol * se, rel_tol * |theory|). The mean at t passes when
    |mean - model mean| is at most z_tol * sqrt(theory(t, t) / R); abs_tol
    applies to covariance cells only. The Gaussian screen runs for every
    model, so a non-Gaussian limit is expected to fail it.

    Args:
        stats: Ensemble moments
        model: Covariance model or tabulated covariance on the same grid
        abs_tol: Absolute tolerance per cell
        z_tol: Multiple of the jackknife standard error
        rel_tol: Relative tolerance per cell
        skew_limit: Skewness limit of the Gaussian screen
        kurt_limit: Excess kurtosis limit of the Gaussian screen

    Returns:
        ComparisonReport

    Raises:
        GridMismatch: A tabulated covariance on another grid
    """
    grid = np.asarray(stats.grid, dtype=np.float64)
    theory = model.covariance_matrix(grid)
    empirical = stats.cov_array()
    if theory.shape != empirical.shape:
        raise GridMismatch(f"theory shape {theory.shape} differs from empirical {empirical.shape}")
    se = stats.se_array()

    diff = np.abs(empirical - theory)
    allowed = np.maximum(np.maximum(abs_tol, z_tol * se), rel_tol * np.abs(theory))
    cell_ok = diff <= allowed
    with np.errstate(divide='ignore', invalid='ignore'):
        z = np.where(se > 0, diff / se, np.where(diff > 0, np.inf, 0.0))

    i, j = np.unravel_index(int(np.argmax(diff)), diff.shape)
    failures = [
        {'s': float(grid[a]), 't': float(grid[b]), 'empirical': float(empirical[a, b]),
         'theory': float(theory[a, b]), 'se': float(se[a, b])}
        for a, b in zip(*np.nonzero(~cell_ok))
    ]

    drift = np.abs(np.asarray(stats.mean) - model.mean(grid))
    mean_allowed = z_tol * np.sqrt(np.clip(np.diag(theory), 0.0, None) / stats.R)
    mean_ok = bool(np.all(drift <= mean_allowed))

    normalization = getattr(model, 'normalization', None)
    match = None if normalization is None else normalization == stats.normalization
    if match is False:
        logger.warning(f"Normalization differs: ensemble {stats.normalization!r}, theory {normalization!r}")

    report = ComparisonReport(
        passed=bool(cell_ok.all()) and mean_ok,
        covariance_passed=bool(cell_ok.all()),
        mean_passed=mean_ok,
        max_abs_diff=float(diff.max()),
        max_z=float(z.max()),
        worst_cell=(float(grid[i]), float(grid[j])),
        max_mean_drift=float(drift.max()),
        mean_drift=drift.tolist(),
        normalization_match=match,
        gaussian_screen={**gaussian_screen(stats, skew_limit, kurt_limit), 'limit_gaussian': bool(model.is_gaussian)},
        tolerances={'abs_tol': abs_tol, 'rel_tol': rel_tol, 'z_tol': z_tol},
        failures=failures,
    )
    logger.info(
        f"Comparison {'passed' if report.passed else 'failed'}: max |diff| {report.max_abs_diff:.4g} "
        f"at {report.worst_cell}, {len(failures)} failing cell(s)"
    )
    return report
