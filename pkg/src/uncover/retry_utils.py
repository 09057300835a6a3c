"""
Retry helpers for rejection samplers.
"""

import logging
from functools import wraps
from typing import Type

from .errors import UncoverError

logger = logging.getLogger(__name__)


class Rejected(Exception):
    """Raised by a single sampling attempt whose draw must be discarded."""


def retry_until_accepted(exhausted: Type[UncoverError], max_attempts: int = 10_000,
                         warn_every: int = 1000):
    """
    Decorator that re-runs a sampling attempt until it is accepted.

    The wrapped function signals rejection by raising ``Rejected``. Every call
    of the decorated function also accepts a ``max_attempts`` keyword that
    overrides the default cap.

    Args:
        exhausted: Error class raised once the cap is reached
        max_attempts: Default number of attempts (default: 10000)
        warn_every: Log a warning every this many consecutive rejections

    Returns:
        Decorated function returning the first accepted draw
    """
    def decorator(func):
        @wraps(func)
        def wrapper(*args, max_attempts: int = max_attempts, **kwargs):
            last_rejection = None

            for attempt in range(max_attempts):
                try:
                    return func(*args, **kwargs)
                except Rejected as e:
                    last_rejection = e
                    if (attempt + 1) % warn_every == 0:
                        logger.warning(
                            f"{func.__name__} still rejecting "
                            f"(attempt {attempt + 1}/{max_attempts}): {e}"
                        )

            logger.error(f"{func.__name__} rejected {max_attempts} draws: {last_rejection}")
            raise exhausted(
                f"{func.__name__}: no accepted draw after {max_attempts} attempts "
                f"(last rejection: {last_rejection})"
            )

        return wrapper
    return decorator
