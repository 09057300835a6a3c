"""
Clock changes between continuous-time and discrete-time limit covariances.

Passing from the continuous clock to the discrete clock removes the
fluctuation of the visible-vertex count: with centering b_n f(t) and
n^(-1/2) a_n b_n -> c,

    sigma_discrete(s, t) = sigma_continuous(s, t) - c^2 s (1-t) f'(s) f'(t),  s <= t.
"""

import logging
from typing import Sequence, Union

import numpy as np
from numpy.polynomial import Polynomial

from ..errors import InvalidSpec
from .models import ClockCorrection, Clock, CovarianceModel

logger = logging.getLogger(__name__)

# f'(t) for edge counts centered at t^2|E| (with c = dstar or alpha)
EDGE_FPRIME = (0.0, 1.0)
# f'(t) for component counts centered at t(1-t)n (with c = 1)
COMPONENT_FPRIME = (1.0, -2.0)

FPrime = Union[Sequence[float], Polynomial]


def _coefs(fprime: FPrime) -> tuple:
    if isinstance(fprime, Polynomial):
        fprime = fprime.coef
    coefs = tuple(float(x) for x in np.atleast_1d(np.asarray(fprime, dtype=np.float64)))
    if not coefs:
        raise InvalidSpec("f' needs at least one coefficient")
    return coefs


def _with_correction(model: CovarianceModel, weight: float, fprime: tuple, clock: Clock) -> CovarianceModel:
    corrections = model.corrections
    if weight == 0.0:
        pass
    elif corrections and corrections[-1].fprime == fprime and corrections[-1].weight == -weight:
        corrections = corrections[:-1]
    else:
        corrections = corrections + (ClockCorrection(weight=weight, fprime=fprime),)
    return CovarianceModel(kind=model.kind, params=model.params, clock=clock, corrections=corrections)


def derandomize(model: CovarianceModel, c: float, fprime: FPrime) -> CovarianceModel:
    """
    Continuous-clock covariance to discrete clock.

    Args:
        model: Model on the continuous clock
        c: Limit of n^(-1/2) a_n b_n, nonnegative
        fprime: Derivative of the centering shape f, as ascending coefficients

    Returns:
        Model with sigma - c^2 s (1-t) f'(s) f'(t) on the discrete clock
    """
    if model.clock is not Clock.CONTINUOUS:
        raise InvalidSpec(f"derandomize needs a continuous-clock model, got {model.clock.value}")
    if not c >= 0:
        raise InvalidSpec(f"c must be >= 0, got {c}")
    return _with_correction(model, -float(c) ** 2, _coefs(fprime), Clock.DISCRETE)


def randomize(model: CovarianceModel, c: float, fprime: FPrime) -> CovarianceModel:
    """Discrete-clock covariance to continuous clock, the inverse of ``derandomize``."""
    if model.clock is not Clock.DISCRETE:
        raise InvalidSpec(f"randomize needs a discrete-clock model, got {model.clock.value}")
    if not c >= 0:
        raise InvalidSpec(f"c must be >= 0, got {c}")
    return _with_correction(model, float(c) ** 2, _coefs(fprime), Clock.CONTINUOUS)
