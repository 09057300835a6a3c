"""
Experiment specification for Monte Carlo ensembles.
"""

import json
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, ValidationError, field_validator, model_validator

from ..errors import ConfigError, SpecInvalid
from ..generators import ModelKind, ModelSpec
from ..graph import Regime


class Process(str, Enum):
    EDGES_DISCRETE = 'edges_discrete'
    EDGES_CONTINUOUS = 'edges_continuous'
    COMPONENTS_DISCRETE = 'components_discrete'
    COMPONENTS_CONTINUOUS = 'components_continuous'
    TRIANGLES_DISCRETE = 'triangles_discrete'
    BIPARTITE_DISCRETE = 'bipartite_discrete'


class ExperimentSpec(BaseModel):
    """One normalized process of one graph model, replicated R times."""

    model_config = ConfigDict(extra='forbid', frozen=True, protected_namespaces=())

    model: ModelSpec
    replicates: int
    grid: List[float]
    process: Process
    regime: Regime = Regime.SPARSE
    beta_n: Optional[float] = None
    seed: int = 0
    infinite_alpha: bool = False

    @field_validator('grid')
    @classmethod
    def _check_grid(cls, grid: List[float]) -> List[float]:
        if not grid:
            raise ValueError("grid must not be empty")
        if any(not 0.0 < t < 1.0 for t in grid):
            raise ValueError("grid points must lie strictly inside (0, 1)")
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise ValueError("grid must be strictly increasing")
        return grid

    @model_validator(mode='after')
    def _check_invariants(self) -> 'ExperimentSpec':
        if self.replicates < 100:
            raise ValueError(f"need at least 100 replicates, got {self.replicates}")
        if self.seed < 0:
            raise ValueError("seed must be nonnegative")
        if self.process is Process.BIPARTITE_DISCRETE and self.model.kind is not ModelKind.COMPLETE_BIPARTITE:
            raise ValueError("bipartite_discrete needs the complete_bipartite model")
        if self.regime is Regime.GENERAL and (self.beta_n is None or self.beta_n <= 0):
            raise ValueError("general regime needs beta_n > 0")
        if self.infinite_alpha and self.process is not Process.EDGES_CONTINUOUS:
            raise ValueError("infinite_alpha applies to edges_continuous only")
        return self

    @property
    def n(self) -> int:
        return self.model.n

    def grid_array(self) -> np.ndarray:
        return np.asarray(self.grid, dtype=np.float64)


def experiment_spec(data: Mapping[str, Any]) -> ExperimentSpec:
    """
    Validate an experiment specification.

    Raises:
        SpecInvalid: On unknown keys or violated invariants
    """
    try:
        return ExperimentSpec.model_validate(dict(data))
    except ValidationError as e:
        raise SpecInvalid(f"invalid experiment spec: {e}") from e


class OutputBlock(BaseModel):
    """Where an ensemble run writes its results; paths are relative to the working directory."""

    model_config = ConfigDict(extra='forbid')

    stats: Optional[str] = None
    covariance_csv: Optional[str] = None
    report: Optional[str] = None


class TheoryBlock(BaseModel):
    """
    Limit model to compare against. Parameters left out are filled from the
    ensemble's plug-in averages.
    """

    model_config = ConfigDict(extra='forbid')

    kind: str
    params: Dict[str, float] = {}
    abs_tol: Optional[float] = None
    z_tol: Optional[float] = None
    rel_tol: Optional[float] = None


class ExperimentConfig(BaseModel):
    """Configuration document of the ``ensemble`` command."""

    model_config = ConfigDict(extra='forbid')

    experiment: ExperimentSpec
    output: OutputBlock = OutputBlock()
    theory: Optional[TheoryBlock] = None


def load_experiment_config(path: Union[str, Path]) -> ExperimentConfig:
    """
    Read and validate an experiment configuration file.

    Raises:
        ConfigError: Unreadable JSON or a document violating the schema
    """
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigError(f"cannot read config {path}: {e}") from e
    try:
        return ExperimentConfig.model_validate(data)
    except ValidationError as e:
        raise ConfigError(f"invalid config {path}: {e}") from e
