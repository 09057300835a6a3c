"""
Right-continuous paths on [0, 1].
"""

from dataclasses import dataclass
from typing import Union

import numpy as np
from numpy.polynomial import polynomial as P
from numpy.typing import ArrayLike, NDArray

from ..errors import OutOfDomain, TildeAtOne


def check_domain(t: ArrayLike) -> NDArray[np.float64]:
    t = np.asarray(t, dtype=np.float64)
    if np.any(~((t >= 0.0) & (t <= 1.0))):
        raise OutOfDomain(f"time outside [0, 1]: {t}")
    return t


@dataclass(frozen=True)
class StepPath:
    """
    Piecewise-constant cadlag path.

    ``values[i]`` holds on [event_times[i], event_times[i+1]); ``initial``
    holds before the first event.
    """

    event_times: NDArray[np.float64]
    values: NDArray
    initial: Union[int, float] = 0

    def eval(self, t: float):
        """Value of the last event at or before t."""
        check_domain(t)
        idx = int(np.searchsorted(self.event_times, t, side='right'))
        return self.initial if idx == 0 else self.values[idx - 1]

    def evaluate(self, ts: ArrayLike) -> NDArray:
        ts = check_domain(ts)
        idx = np.searchsorted(self.event_times, ts, side='right')
        padded = np.concatenate([[self.initial], self.values]).astype(self.values.dtype, copy=False)
        return padded[idx]

    @property
    def final(self):
        return self.values[-1] if len(self.values) else self.initial


@dataclass(frozen=True)
class PolyPath:
    """
    Cadlag path that is a polynomial in t between events.

    ``coefs[p]`` (ascending powers) applies on piece p: piece 0 is
    [0, event_times[0]) and piece p is [event_times[p-1], event_times[p]).
    """

    event_times: NDArray[np.float64]
    coefs: NDArray[np.float64]

    def _piece(self, ts: NDArray[np.float64]) -> NDArray[np.int64]:
        return np.searchsorted(self.event_times, ts, side='right')

    def eval(self, t: float) -> float:
        check_domain(t)
        return float(P.polyval(t, self.coefs[int(self._piece(np.float64(t)))]))

    def evaluate(self, ts: ArrayLike) -> NDArray[np.float64]:
        ts = check_domain(ts)
        c = self.coefs[self._piece(ts)]
        powers = ts[..., None] ** np.arange(c.shape[-1])
        return np.sum(c * powers, axis=-1)

    def at_events(self) -> NDArray[np.float64]:
        """Values right after each event."""
        return self.evaluate(self.event_times)


@dataclass(frozen=True)
class TildePath:
    """Plain path divided by (1 - t)**power, defined on [0, 1)."""

    base: PolyPath
    power: int

    def eval(self, t: float) -> float:
        check_domain(t)
        if t >= 1.0:
            raise TildeAtOne(f"tilde path with power {self.power} is undefined at t=1")
        return self.base.eval(t) / (1.0 - t) ** self.power

    def evaluate(self, ts: ArrayLike) -> NDArray[np.float64]:
        ts = check_domain(ts)
        if np.any(ts >= 1.0):
            raise TildeAtOne(f"tilde path with power {self.power} is undefined at t=1")
        return self.base.evaluate(ts) / (1.0 - ts) ** self.power
