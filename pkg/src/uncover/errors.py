"""
Exception hierarchy for the uncover workbench.

Each error carries the process exit code the command line reports for it:
2 for usage and configuration problems, 3 for runtime failures.
"""

USAGE_EXIT = 2
RUNTIME_EXIT = 3


class UncoverError(Exception):
    """Base class for all workbench errors."""

    exit_code = RUNTIME_EXIT


class InvalidGraph(UncoverError):
    """Edge list has loops, duplicates, bad labels or no vertices."""

    exit_code = USAGE_EXIT


class NotRegular(UncoverError):
    """Regular regime requested for a graph with unequal degrees."""

    exit_code = USAGE_EXIT


class BadScale(UncoverError):
    """Scaling constant is missing or not positive."""

    exit_code = USAGE_EXIT


class InvalidSpec(UncoverError):
    """Model specification violates its invariants."""

    exit_code = USAGE_EXIT


class SpecInvalid(UncoverError):
    """Experiment specification violates its invariants."""

    exit_code = USAGE_EXIT


class ConfigError(UncoverError):
    """Configuration document could not be read or validated."""

    exit_code = USAGE_EXIT


class ConfigRejectionExceeded(UncoverError):
    """Configuration-model matching never became simple within the cap."""


class RejectionBudgetExceeded(UncoverError):
    """Conditioned offspring sum was not hit within the cap."""


class DimensionMismatch(UncoverError):
    """Time assignment and graph disagree on the vertex count."""


class OutOfDomain(UncoverError):
    """Path evaluated outside [0, 1]."""


class TildeAtOne(UncoverError):
    """Tilde martingale evaluated at t = 1."""


class NotPSD(UncoverError):
    """Covariance matrix has a materially negative eigenvalue."""


class GridMismatch(UncoverError):
    """Empirical statistics and model live on different grids."""

    exit_code = USAGE_EXIT


class TooLarge(UncoverError):
    """Exact enumeration requested for too many vertices."""

    exit_code = USAGE_EXIT
