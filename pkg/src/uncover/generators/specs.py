"""
Model specifications for the graph generators.
"""

import math
from enum import Enum
from typing import Any, Dict, List, Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, ValidationError, model_validator

from ..errors import InvalidSpec


class ModelKind(str, Enum):
    LABELLED_TREE = 'labelled_tree'
    COND_GW = 'cond_gw'
    BST = 'bst'
    RECURSIVE_TREE = 'recursive_tree'
    GNM = 'gnm'
    GNP = 'gnp'
    CONFIG_MODEL = 'config_model'
    PATH = 'path'
    CYCLE = 'cycle'
    COMPLETE_BIPARTITE = 'complete_bipartite'
    CYCLE_WITH_ISOLATED = 'cycle_with_isolated'


class Offspring(str, Enum):
    """Critical offspring laws, all with mean 1."""
    POISSON1 = 'poisson1'
    BINOMIAL2 = 'binomial2'
    GEOMETRIC = 'geometric'


# Variance of each offspring law; the limiting second degree moment is var + 4.
OFFSPRING_VARIANCE = {
    Offspring.POISSON1: 1.0,
    Offspring.BINOMIAL2: 0.5,
    Offspring.GEOMETRIC: 2.0,
}

RANDOM_KINDS = frozenset({
    ModelKind.LABELLED_TREE, ModelKind.COND_GW, ModelKind.BST, ModelKind.RECURSIVE_TREE,
    ModelKind.GNM, ModelKind.GNP, ModelKind.CONFIG_MODEL,
})


class DegreeDesign(BaseModel):
    """
    Degree sequence recipe for the configuration model.

    ``regular``: every vertex has degree d.
    ``two_level``: half the vertices a+b, the other half a-b.
    ``hubs``: degree 2 except about n*delta hubs of degree floor(1/delta).
    """

    model_config = ConfigDict(extra='forbid', frozen=True)

    kind: Literal['regular', 'two_level', 'hubs']
    d: Optional[int] = None
    a: Optional[int] = None
    b: Optional[int] = None
    delta: Optional[float] = None

    @model_validator(mode='after')
    def _check_fields(self) -> 'DegreeDesign':
        if self.kind == 'regular' and (self.d is None or self.d < 0):
            raise ValueError("regular design needs d >= 0")
        if self.kind == 'two_level':
            if self.a is None or self.b is None or not 0 <= self.b <= self.a:
                raise ValueError("two_level design needs 0 <= b <= a")
        if self.kind == 'hubs' and (self.delta is None or not 0 < self.delta < 0.5):
            raise ValueError("hubs design needs 0 < delta < 0.5")
        return self

    def degrees(self, n: int) -> List[int]:
        if self.kind == 'regular':
            return [self.d] * n
        if self.kind == 'two_level':
            half = n // 2
            return [self.a + self.b] * half + [self.a - self.b] * (n - half)

        hub_degree = int(math.floor(1 / self.delta))
        hubs = max(1, int(round(n * self.delta)))
        if hub_degree % 2 == 1 and hubs % 2 == 1:
            hubs += 1
        hubs = min(hubs, n)
        return [hub_degree] * hubs + [2] * (n - hubs)


class ModelSpec(BaseModel):
    """Graph model plus its size and parameters."""

    model_config = ConfigDict(extra='forbid', frozen=True)

    kind: ModelKind
    n: int
    m: Optional[int] = None
    p: Optional[float] = None
    offspring: Optional[Offspring] = None
    degrees: Optional[List[int]] = None
    design: Optional[DegreeDesign] = None
    matching: Literal['reject', 'repair'] = 'reject'
    cycle_length: Optional[int] = None

    @model_validator(mode='after')
    def _check_invariants(self) -> 'ModelSpec':
        n = self.n
        if n < 1:
            raise ValueError(f"n must be at least 1, got {n}")
        kind = self.kind

        if kind is ModelKind.GNM:
            if self.m is None or not 0 <= self.m <= n * (n - 1) // 2:
                raise ValueError(f"gnm needs 0 <= m <= {n * (n - 1) // 2}, got m={self.m}")
        elif kind is ModelKind.GNP:
            if self.p is None or not 0.0 <= self.p <= 1.0:
                raise ValueError(f"gnp needs 0 <= p <= 1, got p={self.p}")
        elif kind is ModelKind.COND_GW:
            if self.offspring is None:
                raise ValueError("cond_gw needs an offspring law")
        elif kind is ModelKind.CONFIG_MODEL:
            if (self.degrees is None) == (self.design is None):
                raise ValueError("config_model needs exactly one of degrees or design")
            degs = self.degree_sequence()
            if len(degs) != n:
                raise ValueError(f"degree list has {len(degs)} entries for n={n}")
            if any(d < 0 or d > n - 1 for d in degs):
                raise ValueError(f"degrees must lie in 0..{n - 1}")
            if sum(degs) % 2:
                raise ValueError("degree sum must be even")
        elif kind is ModelKind.COMPLETE_BIPARTITE:
            if n % 2:
                raise ValueError(f"complete_bipartite needs even n, got {n}")
        elif kind is ModelKind.CYCLE:
            if n < 3:
                raise ValueError(f"cycle needs n >= 3, got {n}")
        elif kind is ModelKind.CYCLE_WITH_ISOLATED:
            if self.cycle_length is None or not 3 <= self.cycle_length <= n:
                raise ValueError(f"cycle_with_isolated needs 3 <= cycle_length <= {n}")
        return self

    @property
    def is_random(self) -> bool:
        return self.kind in RANDOM_KINDS

    def degree_sequence(self) -> List[int]:
        if self.degrees is not None:
            return list(self.degrees)
        return self.design.degrees(self.n)

    def degree_array(self) -> np.ndarray:
        return np.asarray(self.degree_sequence(), dtype=np.int64)


def model_spec(data: Optional[Dict[str, Any]] = None, **fields: Any) -> ModelSpec:
    """
    Validate a model specification.

    Args:
        data: Mapping of fields, e.g. parsed from JSON
        **fields: Fields given as keywords (merged over ``data``)

    Returns:
        Validated ModelSpec

    Raises:
        InvalidSpec: On unknown kinds, unknown keys or violated invariants
    """
    payload = dict(data or {})
    payload.update(fields)
    try:
        return ModelSpec.model_validate(payload)
    except ValidationError as e:
        raise InvalidSpec(f"invalid model spec: {e}") from e
