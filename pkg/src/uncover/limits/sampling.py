"""
Gaussian samplers for the limit processes on finite grids.
"""

import logging
from typing import Optional

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ..errors import NotPSD, OutOfDomain, SpecInvalid
from .models import CovarianceKind, CovarianceModel

logger = logging.getLogger(__name__)


def _check_grid(grid: ArrayLike, allow_one: bool = True) -> NDArray[np.float64]:
    grid = np.asarray(grid, dtype=np.float64)
    if grid.ndim != 1 or len(grid) == 0:
        raise SpecInvalid("grid must be a non-empty vector")
    upper_ok = grid <= 1.0 if allow_one else grid < 1.0
    if np.any(~((grid >= 0.0) & upper_ok)):
        raise OutOfDomain(f"grid points outside the domain: {grid}")
    if np.any(np.diff(grid) <= 0):
        raise SpecInvalid("grid must be strictly increasing")
    return grid


def sqrt_factor(cov: NDArray[np.float64], clip_tol: float = 1e-10) -> NDArray[np.float64]:
    """
    Square root F with F @ F.T == cov, via eigendecomposition.

    Eigenvalues in [-clip_tol * trace, 0) are clipped to zero.

    Raises:
        NotPSD: If an eigenvalue falls below -clip_tol * trace
    """
    trace = float(np.trace(cov))
    if trace == 0.0:
        return np.zeros_like(cov)
    eigvals, eigvecs = np.linalg.eigh(cov)
    if eigvals.min() < -clip_tol * trace:
        raise NotPSD(f"smallest eigenvalue {eigvals.min():.3e} below -{clip_tol:g} * trace")
    return eigvecs * np.sqrt(np.clip(eigvals, 0.0, None))


def _centered_normal(cov: NDArray[np.float64], rng: np.random.Generator, size: int,
                     clip_tol: float) -> NDArray[np.float64]:
    out = np.zeros((size, cov.shape[0]))
    live = np.diag(cov) > 0
    if live.any():
        factor = sqrt_factor(cov[np.ix_(live, live)], clip_tol)
        out[:, live] = rng.standard_normal((size, factor.shape[1])) @ factor.T
    return out


def gaussian_sample(model: CovarianceModel, grid: ArrayLike, rng: np.random.Generator,
                    size: Optional[int] = None, clip_tol: float = 1e-10) -> NDArray[np.float64]:
    """
    Draw the limit process on a grid.

    Gaussian kinds are drawn with the model covariance (grid points of zero
    variance are exactly 0). The bipartite kind draws a Brownian bridge B on
    the grid and returns -B(t)^2 / 4.

    Args:
        model: Covariance model
        grid: Strictly increasing times in [0, 1]
        rng: Random stream
        size: Number of paths; None returns a single vector
        clip_tol: Relative eigenvalue clipping tolerance

    Returns:
        Array of shape (len(grid),) or (size, len(grid))
    """
    grid = _check_grid(grid)
    count = 1 if size is None else int(size)

    if model.kind is CovarianceKind.BIPARTITE_SQUARE:
        bridge_cov = np.minimum.outer(grid, grid) - np.outer(grid, grid)
        bridge = _centered_normal(bridge_cov, rng, count, clip_tol)
        samples = -0.25 * bridge ** 2
    else:
        samples = _centered_normal(model.covariance_matrix(grid), rng, count, clip_tol)

    return samples[0] if size is None else samples


def brownian_representation_sample(a: float, b: float, grid: ArrayLike, rng: np.random.Generator,
                                   size: int = 1) -> NDArray[np.float64]:
    """
    Sample phi(t) W(t^2 / phi(t)) with phi(t) = a (1-t)^2 + b t (1-t).

    The result has covariance s^2 phi(t) for s <= t, the shape shared by the
    Gaussian limits. Grid points must lie in [0, 1).

    Args:
        a: Coefficient of (1-t)^2, nonnegative
        b: Coefficient of t(1-t), nonnegative
        grid: Strictly increasing times in [0, 1)
        rng: Random stream
        size: Number of paths

    Returns:
        Array of shape (size, len(grid))
    """
    grid = _check_grid(grid, allow_one=False)
    if a < 0 or b < 0:
        raise SpecInvalid(f"a and b must be nonnegative, got a={a}, b={b}")
    phi = a * (1 - grid) ** 2 + b * grid * (1 - grid)
    with np.errstate(divide='ignore', invalid='ignore'):
        clock = np.where(phi > 0, grid ** 2 / np.where(phi > 0, phi, 1.0), 0.0)
    clock = np.maximum.accumulate(clock)

    steps = np.diff(np.concatenate([[0.0], clock]))
    increments = rng.standard_normal((int(size), len(grid))) * np.sqrt(steps)
    brownian = np.cumsum(increments, axis=1)
    return phi * brownian
