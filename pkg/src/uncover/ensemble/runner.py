"""
Monte Carlo ensembles of normalized uncovering processes.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from ..engine import Realization, run, sample_uncover_times
from ..generators import generate
from ..graph import Graph, LimitParams, Regime, degree_stats, limit_params, triangle_census
from .spec import ExperimentSpec, Process
from .stats import EnsembleStats, summarize

logger = logging.getLogger(__name__)

PLUGIN_KEYS = ('num_edges', 'dbar', 'chi', 'gamma', 'lambda1', 'lambda2', 'alpha')

COMPONENT_PROCESSES = (Process.COMPONENTS_DISCRETE, Process.COMPONENTS_CONTINUOUS)


def replicate_stream(seed: int, index: int) -> np.random.Generator:
    """Independent stream of replicate ``index`` under master ``seed``."""
    return np.random.default_rng(np.random.SeedSequence([seed, index]))


def edge_normalization(spec: ExperimentSpec) -> str:
    if spec.infinite_alpha:
        return 'edges/(sqrt(n)*dbar)'
    if spec.regime is Regime.SPARSE:
        return 'edges/sqrt(n)'
    if spec.regime is Regime.REGULAR:
        if spec.process is Process.EDGES_CONTINUOUS:
            return 'edges/(sqrt(n)*d)'
        return 'edges/sqrt(n*d)'
    return 'edges/beta_n'


def normalization_label(spec: ExperimentSpec) -> str:
    """Normalization tag recorded with the ensemble and matched by the limit model."""
    if spec.process in COMPONENT_PROCESSES:
        return 'components/sqrt(n)'
    if spec.process is Process.BIPARTITE_DISCRETE:
        return 'bipartite/n'
    label = edge_normalization(spec)
    if spec.process is Process.TRIANGLES_DISCRETE:
        return label.replace('edges', 'triangles', 1)
    return label


def edge_scale(spec: ExperimentSpec, graph: Graph, params: LimitParams) -> float:
    label = edge_normalization(spec)
    if label == 'edges/(sqrt(n)*dbar)':
        return math.sqrt(graph.n) * 2.0 * graph.num_edges / graph.n
    if label == 'edges/(sqrt(n)*d)':
        return math.sqrt(graph.n) * params.dstar
    return params.beta_n


def normalized_values(spec: ExperimentSpec, graph: Graph, realization: Realization, params: LimitParams,
                      triangles_total: int = 0) -> NDArray[np.float64]:
    """
    The normalized process of one realization on the grid.

    Discrete processes read step floor(n t); continuous ones read the path
    at t. Edge counts are centered at t^2 |E| of the drawn graph, component
    counts at t (1-t) n, triangles at t^3 T(1) and the bipartite count at
    floor(n t)^2 / 4.
    """
    grid = spec.grid_array()
    n = graph.n
    k = np.floor(n * grid).astype(np.int64)
    m = graph.num_edges
    process = spec.process

    if process is Process.EDGES_DISCRETE:
        return (realization.L_dot[k] - grid ** 2 * m) / edge_scale(spec, graph, params)
    if process is Process.EDGES_CONTINUOUS:
        return (realization.L.evaluate(grid) - grid ** 2 * m) / edge_scale(spec, graph, params)
    if process is Process.COMPONENTS_DISCRETE:
        return (realization.K_dot[k] - grid * (1 - grid) * n) / math.sqrt(n)
    if process is Process.COMPONENTS_CONTINUOUS:
        return (realization.K.evaluate(grid) - grid * (1 - grid) * n) / math.sqrt(n)
    if process is Process.TRIANGLES_DISCRETE:
        return (realization.T_dot[k] - grid ** 3 * triangles_total) / edge_scale(spec, graph, params)
    return (realization.L_dot[k] - k.astype(np.float64) ** 2 / 4.0) / n


def _plugin_row(graph: Graph, params: LimitParams) -> List[float]:
    stats = degree_stats(graph)
    return [float(graph.num_edges), stats.mean_deg, stats.second_moment, stats.variance,
            params.lambda1, params.lambda2, params.alpha]


def run_chunk(payload: Tuple[Dict[str, Any], int, int, Optional[int], Optional[int]]
              ) -> Tuple[NDArray[np.float64], NDArray[np.float64]]:
    """
    Replicates start..stop-1 of an experiment.

    Returns:
        (values, plugin) with one row per replicate
    """
    spec_data, start, stop, config_cap, gw_cap = payload
    spec = ExperimentSpec.model_validate(spec_data)
    track_components = spec.process in COMPONENT_PROCESSES
    track_triangles = spec.process is Process.TRIANGLES_DISCRETE

    def prepare(rng: np.random.Generator):
        graph = generate(spec.model, rng, config_cap=config_cap, gw_cap=gw_cap)
        params = limit_params(degree_stats(graph), regime=spec.regime, beta_n=spec.beta_n)
        census = triangle_census(graph) if track_triangles else None
        return graph, params, census

    # deterministic models ignore the stream
    fixed = None if spec.model.is_random else prepare(np.random.default_rng(spec.seed))

    values = np.empty((stop - start, len(spec.grid)))
    plugin = np.empty((stop - start, len(PLUGIN_KEYS)))
    for row, index in enumerate(range(start, stop)):
        rng = replicate_stream(spec.seed, index)
        graph, params, census = fixed if fixed is not None else prepare(rng)
        assignment = sample_uncover_times(graph.n, rng)
        realization = run(graph, assignment, track_triangles=track_triangles,
                          track_components=track_components, census=census)
        values[row] = normalized_values(spec, graph, realization, params,
                                        triangles_total=census.t1 if census is not None else 0)
        plugin[row] = _plugin_row(graph, params)
    return values, plugin


def chunk_bounds(replicates: int, chunk_size: int) -> List[Tuple[int, int]]:
    return [(s, min(s + chunk_size, replicates)) for s in range(0, replicates, chunk_size)]


def run_ensemble(spec: ExperimentSpec, workers: int = 1, chunk_size: int = 100, jackknife_blocks: int = 50,
                 config_cap: Optional[int] = None, gw_cap: Optional[int] = None) -> EnsembleStats:
    """
    Run R replicates and summarize the normalized process.

    Replicate r draws everything from stream (seed, r); a fresh graph is
    drawn per replicate when the model is random. Chunks may run in worker
    processes, but samples are accumulated in replicate order, so the result
    does not depend on the number of workers.

    Args:
        spec: Validated experiment specification
        workers: Number of worker processes (1 runs in-process)
        chunk_size: Replicates per work item
        jackknife_blocks: Blocks of the covariance jackknife
        config_cap: Cap on discarded configuration-model matchings
        gw_cap: Cap on rejected offspring sums

    Returns:
        EnsembleStats of the normalized process
    """
    spec_data = spec.model_dump(mode='json')
    chunks = chunk_bounds(spec.replicates, max(1, chunk_size))
    payloads = [(spec_data, start, stop, config_cap, gw_cap) for start, stop in chunks]
    logger.info(
        f"Running {spec.replicates} replicates of {spec.process.value} on {spec.model.kind.value} "
        f"(n={spec.n}) in {len(chunks)} chunks with {workers} worker(s)"
    )

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_chunk, payloads))
    else:
        results = [run_chunk(p) for p in payloads]

    samples = np.concatenate([values for values, _ in results])
    plugin_rows = np.concatenate([plugin for _, plugin in results])
    plugin = {key: float(v) for key, v in zip(PLUGIN_KEYS, plugin_rows.mean(axis=0))}
    logger.debug(f"Plug-in averages: {plugin}")

    return EnsembleStats(
        grid=list(spec.grid),
        R=spec.replicates,
        n=spec.n,
        seed=spec.seed,
        process=spec.process.value,
        normalization=normalization_label(spec),
        plugin=plugin,
        **summarize(samples, blocks=jackknife_blocks),
    )
