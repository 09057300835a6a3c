"""
Closed-form covariance functions of the limit processes.

Every Gaussian kind has the form, for s <= t,

    sigma(s, t) = s^2 * (a (1-t)^2 + b t (1-t)) + extra(s, t) + corrections

where (a, b) depend on the kind and its parameters, ``extra`` is the
vertex-count term of the continuous component model, and ``corrections`` are
clock changes c^2 s (1-t) f'(s) f'(t) added or removed by the transforms.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Mapping, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial import polynomial as P
from numpy.typing import ArrayLike, NDArray

from ..errors import InvalidSpec

logger = logging.getLogger(__name__)


class CovarianceKind(str, Enum):
    DISCRETE_A = 'discrete_a'
    CONTINUOUS_A = 'continuous_a'
    DISCRETE_B = 'discrete_b'
    CONTINUOUS_B = 'continuous_b'
    DISCRETE_C = 'discrete_c'
    CONTINUOUS_C = 'continuous_c'
    CONTINUOUS_C_INFINITE_ALPHA = 'continuous_c_infinite_alpha'
    COMPONENTS_DISCRETE = 'components_discrete'
    COMPONENTS_CONTINUOUS = 'components_continuous'
    GNM_BRIDGE = 'gnm_bridge'
    BIPARTITE_SQUARE = 'bipartite_square'


class Clock(str, Enum):
    DISCRETE = 'discrete'
    CONTINUOUS = 'continuous'


K = CovarianceKind

REQUIRED_PARAMS: Dict[CovarianceKind, Tuple[str, ...]] = {
    K.DISCRETE_A: ('dstar', 'gammastar'),
    K.CONTINUOUS_A: ('dstar', 'chistar'),
    K.DISCRETE_B: (),
    K.CONTINUOUS_B: ('d_inf',),
    K.DISCRETE_C: ('lambda1', 'lambda2'),
    K.CONTINUOUS_C: ('lambda1', 'lambda2', 'alpha'),
    K.CONTINUOUS_C_INFINITE_ALPHA: (),
    K.COMPONENTS_DISCRETE: ('gammastar',),
    K.COMPONENTS_CONTINUOUS: ('gammastar',),
    K.GNM_BRIDGE: (),
    K.BIPARTITE_SQUARE: (),
}

BASE_CLOCK: Dict[CovarianceKind, Clock] = {
    K.DISCRETE_A: Clock.DISCRETE,
    K.CONTINUOUS_A: Clock.CONTINUOUS,
    K.DISCRETE_B: Clock.DISCRETE,
    K.CONTINUOUS_B: Clock.CONTINUOUS,
    K.DISCRETE_C: Clock.DISCRETE,
    K.CONTINUOUS_C: Clock.CONTINUOUS,
    K.CONTINUOUS_C_INFINITE_ALPHA: Clock.CONTINUOUS,
    K.COMPONENTS_DISCRETE: Clock.DISCRETE,
    K.COMPONENTS_CONTINUOUS: Clock.CONTINUOUS,
    K.GNM_BRIDGE: Clock.DISCRETE,
    K.BIPARTITE_SQUARE: Clock.DISCRETE,
}

# Scale and centering each kind describes; the ensemble reports the same strings.
NORMALIZATION: Dict[CovarianceKind, str] = {
    K.DISCRETE_A: 'edges/sqrt(n)',
    K.CONTINUOUS_A: 'edges/sqrt(n)',
    K.DISCRETE_B: 'edges/sqrt(n*d)',
    K.CONTINUOUS_B: 'edges/(sqrt(n)*d)',
    K.DISCRETE_C: 'edges/beta_n',
    K.CONTINUOUS_C: 'edges/beta_n',
    K.CONTINUOUS_C_INFINITE_ALPHA: 'edges/(sqrt(n)*dbar)',
    K.COMPONENTS_DISCRETE: 'components/sqrt(n)',
    K.COMPONENTS_CONTINUOUS: 'components/sqrt(n)',
    K.GNM_BRIDGE: 'edges/beta_n',
    K.BIPARTITE_SQUARE: 'bipartite/n',
}


@dataclass(frozen=True)
class ClockCorrection:
    """Term weight * s (1-t) f'(s) f'(t), f' given by ascending coefficients."""

    weight: float
    fprime: Tuple[float, ...]


@dataclass(frozen=True)
class CovarianceModel:
    """Limit covariance of one regime, possibly moved to the other clock."""

    kind: CovarianceKind
    params: Mapping[str, float] = field(default_factory=dict)
    clock: Optional[Clock] = None
    corrections: Tuple[ClockCorrection, ...] = ()

    def __post_init__(self):
        kind = CovarianceKind(self.kind)
        object.__setattr__(self, 'kind', kind)
        object.__setattr__(self, 'clock', Clock(self.clock) if self.clock else BASE_CLOCK[kind])
        params = {k: float(v) for k, v in dict(self.params).items()}
        missing = [p for p in REQUIRED_PARAMS[kind] if p not in params]
        if missing:
            raise InvalidSpec(f"{kind.value} needs parameters {missing}")
        unknown = sorted(set(params) - set(REQUIRED_PARAMS[kind]))
        if unknown:
            raise InvalidSpec(f"{kind.value} does not take parameters {unknown}")
        for name, value in params.items():
            if math.isnan(value) or value < 0:
                raise InvalidSpec(f"{kind.value}: parameter {name} must be >= 0, got {value}")
            if math.isinf(value) and name != 'd_inf':
                raise InvalidSpec(f"{kind.value}: parameter {name} must be finite")
        if kind is K.CONTINUOUS_B and params['d_inf'] == 0:
            raise InvalidSpec("continuous_b needs d_inf > 0")
        object.__setattr__(self, 'params', params)

    @property
    def normalization(self) -> str:
        return NORMALIZATION[self.kind]

    @property
    def is_gaussian(self) -> bool:
        return self.kind is not K.BIPARTITE_SQUARE

    def shape(self) -> Tuple[float, float]:
        """Coefficients (a, b) of s^2 (a (1-t)^2 + b t (1-t))."""
        p = self.params
        kind = self.kind
        if kind is K.DISCRETE_A:
            return p['dstar'] / 2, p['gammastar']
        if kind is K.CONTINUOUS_A:
            return p['dstar'] / 2, p['chistar']
        if kind is K.DISCRETE_B:
            return 0.5, 0.0
        if kind is K.CONTINUOUS_B:
            return 1.0 / (2.0 * p['d_inf']), 1.0
        if kind is K.DISCRETE_C:
            return p['lambda1'] / 2, p['lambda2']
        if kind is K.CONTINUOUS_C:
            return p['lambda1'] / 2, p['lambda2'] + p['alpha'] ** 2
        if kind is K.CONTINUOUS_C_INFINITE_ALPHA:
            return 0.0, 1.0
        if kind in (K.COMPONENTS_DISCRETE, K.COMPONENTS_CONTINUOUS):
            return 1.0, p['gammastar']
        if kind is K.GNM_BRIDGE:
            return 1.0, 2.0
        return 1.0 / 8.0, 0.0

    def covariance(self, s: ArrayLike, t: ArrayLike) -> NDArray[np.float64]:
        s = np.asarray(s, dtype=np.float64)
        t = np.asarray(t, dtype=np.float64)
        lo = np.minimum(s, t)
        hi = np.maximum(s, t)
        a, b = self.shape()
        value = lo * lo * (a * (1 - hi) ** 2 + b * hi * (1 - hi))
        if self.kind is K.COMPONENTS_CONTINUOUS:
            value = value + lo * (1 - 2 * lo) * (1 - hi) * (1 - 2 * hi)
        for corr in self.corrections:
            value = value + corr.weight * lo * (1 - hi) * P.polyval(lo, corr.fprime) * P.polyval(hi, corr.fprime)
        return value

    def covariance_matrix(self, grid: ArrayLike) -> NDArray[np.float64]:
        grid = np.asarray(grid, dtype=np.float64)
        return self.covariance(grid[:, None], grid[None, :])

    def mean(self, t: ArrayLike) -> NDArray[np.float64]:
        t = np.asarray(t, dtype=np.float64)
        if self.kind is K.BIPARTITE_SQUARE:
            return -t * (1 - t) / 4.0
        return np.zeros_like(t)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'clock': self.clock.value,
            'corrections': [{'fprime': list(c.fprime), 'weight': c.weight} for c in self.corrections],
            'kind': self.kind.value,
            'normalization': self.normalization,
            'params': dict(sorted(self.params.items())),
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> 'CovarianceModel':
        try:
            corrections = tuple(
                ClockCorrection(weight=float(c['weight']), fprime=tuple(float(x) for x in c['fprime']))
                for c in data.get('corrections', [])
            )
            return cls(kind=data['kind'], params=data.get('params', {}), clock=data.get('clock'),
                       corrections=corrections)
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidSpec(f"malformed covariance model: {e}") from e


def covariance(model: CovarianceModel, s: float, t: float) -> float:
    """sigma(s, t) of the model; arguments may come in either order."""
    return float(model.covariance(s, t))


def covariance_matrix(model: CovarianceModel, grid: Sequence[float]) -> NDArray[np.float64]:
    return model.covariance_matrix(grid)


def theory_model(kind: str, params: Optional[Mapping[str, float]] = None) -> CovarianceModel:
    """Model of a named kind with explicit parameters."""
    try:
        kind = CovarianceKind(kind)
    except ValueError as e:
        raise InvalidSpec(f"unknown covariance kind {kind!r}") from e
    return CovarianceModel(kind=kind, params=dict(params or {}))


def plugin_params(kind: CovarianceKind, plugin: Mapping[str, float]) -> Dict[str, float]:
    """
    Parameters of a kind evaluated at finite-n degree quantities.

    Args:
        kind: Covariance kind
        plugin: Averages of 'dbar', 'chi', 'lambda1', 'lambda2', 'alpha'

    Returns:
        Parameter mapping for the kind
    """
    kind = CovarianceKind(kind)
    dbar = plugin['dbar']
    chi = plugin['chi']
    if kind is K.DISCRETE_A:
        return {'dstar': dbar, 'gammastar': max(chi - dbar ** 2, 0.0)}
    if kind is K.CONTINUOUS_A:
        return {'dstar': dbar, 'chistar': chi}
    if kind is K.CONTINUOUS_B:
        return {'d_inf': dbar}
    if kind is K.DISCRETE_C:
        return {'lambda1': plugin['lambda1'], 'lambda2': plugin['lambda2']}
    if kind is K.CONTINUOUS_C:
        return {'lambda1': plugin['lambda1'], 'lambda2': plugin['lambda2'], 'alpha': plugin['alpha']}
    if kind in (K.COMPONENTS_DISCRETE, K.COMPONENTS_CONTINUOUS):
        return {'gammastar': max(chi - dbar ** 2, 0.0)}
    return {}


def plugin_model(kind: str, plugin: Mapping[str, float],
                 overrides: Optional[Mapping[str, float]] = None) -> CovarianceModel:
    """Model with finite-n parameters, explicit ``overrides`` taking precedence."""
    try:
        kind = CovarianceKind(kind)
    except ValueError as e:
        raise InvalidSpec(f"unknown covariance kind {kind!r}") from e
    params = plugin_params(kind, plugin)
    params.update(overrides or {})
    return CovarianceModel(kind=kind, params=params)
