"""
Seeded samplers for the graph and tree models.
"""

import logging
from typing import Optional

import numpy as np

from ..graph import Graph
from .deterministic import complete_bipartite, complete_graph, cycle_graph, cycle_with_isolated, path_graph
from .random_graphs import config_model, gnm, gnp
from .specs import (OFFSPRING_VARIANCE, DegreeDesign, ModelKind, ModelSpec, Offspring,
                    model_spec)
from .trees import (bst_tree, cond_gw_tree, cycle_lemma_rotation, gw_degree_sequence, labelled_tree,
                    recursive_tree, tree_from_child_counts)

logger = logging.getLogger(__name__)


def generate(spec: ModelSpec, rng: np.random.Generator, config_cap: Optional[int] = None,
             gw_cap: Optional[int] = None) -> Graph:
    """
    Draw one graph from a model.

    Args:
        spec: Validated model specification
        rng: Random stream; deterministic kinds ignore it
        config_cap: Cap on discarded configuration-model matchings
        gw_cap: Cap on rejected offspring sums

    Returns:
        Graph on exactly spec.n vertices
    """
    n = spec.n
    kind = spec.kind

    if kind is ModelKind.LABELLED_TREE:
        return labelled_tree(n, rng)
    if kind is ModelKind.COND_GW:
        return cond_gw_tree(spec.offspring, n, rng, max_attempts=gw_cap or 100_000)
    if kind is ModelKind.BST:
        return bst_tree(n, rng)
    if kind is ModelKind.RECURSIVE_TREE:
        return recursive_tree(n, rng)
    if kind is ModelKind.GNM:
        return gnm(n, spec.m, rng)
    if kind is ModelKind.GNP:
        return gnp(n, spec.p, rng)
    if kind is ModelKind.CONFIG_MODEL:
        return config_model(spec.degree_array(), rng, matching=spec.matching, max_attempts=config_cap)
    if kind is ModelKind.PATH:
        return path_graph(n)
    if kind is ModelKind.CYCLE:
        return cycle_graph(n)
    if kind is ModelKind.COMPLETE_BIPARTITE:
        return complete_bipartite(n)
    return cycle_with_isolated(n, spec.cycle_length)


__all__ = [
    'generate', 'ModelKind', 'ModelSpec', 'Offspring', 'DegreeDesign', 'model_spec', 'OFFSPRING_VARIANCE',
    'labelled_tree', 'cond_gw_tree', 'gw_degree_sequence', 'cycle_lemma_rotation', 'tree_from_child_counts',
    'bst_tree', 'recursive_tree', 'gnm', 'gnp', 'config_model',
    'path_graph', 'cycle_graph', 'complete_bipartite', 'cycle_with_isolated', 'complete_graph',
]
