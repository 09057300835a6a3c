"""
Immutable simple graph on vertices 1..n and its edge-list text format.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Tuple, Union

import networkx as nx
import numpy as np
from numpy.typing import NDArray
from scipy import sparse
from scipy.sparse.csgraph import connected_components

from ..errors import InvalidGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Graph:
    """
    Undirected simple graph with vertices 1..n.

    ``edges`` holds each edge once as a 1-based pair (u, v) with u < v, in
    lexicographic order. ``indptr``/``indices`` are the 0-based CSR adjacency
    with every neighbor list sorted ascending.
    """

    n: int
    edges: NDArray[np.int64]
    indptr: NDArray[np.int64]
    indices: NDArray[np.int64]

    @classmethod
    def from_edges(cls, n: int, edges: Union[Iterable[Tuple[int, int]], NDArray]) -> 'Graph':
        """
        Build a validated graph from 1-based vertex pairs.

        Args:
            n: Number of vertices (at least 1)
            edges: Iterable of (u, v) pairs in any order and orientation

        Returns:
            Graph in canonical form

        Raises:
            InvalidGraph: On n < 1, labels outside 1..n, loops or duplicate edges
        """
        if int(n) != n or n < 1:
            raise InvalidGraph(f"graph needs at least one vertex, got n={n}")
        n = int(n)

        arr = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
        if arr.size == 0:
            arr = np.empty((0, 2), dtype=np.int64)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise InvalidGraph(f"edges must be pairs, got array of shape {arr.shape}")
        if arr.size and (arr.min() < 1 or arr.max() > n):
            raise InvalidGraph(f"edge endpoints must lie in 1..{n}")
        if np.any(arr[:, 0] == arr[:, 1]):
            loop = arr[arr[:, 0] == arr[:, 1]][0]
            raise InvalidGraph(f"self-loop at vertex {loop[0]}")

        canon = np.sort(arr, axis=1)
        canon = canon[np.lexsort((canon[:, 1], canon[:, 0]))]
        if len(canon) > 1:
            dup = np.all(canon[1:] == canon[:-1], axis=1)
            if dup.any():
                u, v = canon[1:][dup][0]
                raise InvalidGraph(f"duplicate edge {u} {v}")

        rows = np.concatenate([canon[:, 0], canon[:, 1]]) - 1
        cols = np.concatenate([canon[:, 1], canon[:, 0]]) - 1
        order = np.lexsort((cols, rows))
        indices = cols[order]
        indptr = np.concatenate([[0], np.cumsum(np.bincount(rows, minlength=n))]).astype(np.int64)

        for a in (canon, indptr, indices):
            a.setflags(write=False)
        return cls(n=n, edges=canon, indptr=indptr, indices=indices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.edges, other.edges)

    __hash__ = None

    def __repr__(self) -> str:
        return f"<Graph n={self.n} m={self.num_edges}>"

    @property
    def num_edges(self) -> int:
        return int(self.edges.shape[0])

    @property
    def degrees(self) -> NDArray[np.int64]:
        """Degree of vertex v at index v-1."""
        return np.diff(self.indptr)

    def neighbors(self, v: int) -> NDArray[np.int64]:
        """Sorted 1-based neighbors of vertex v."""
        if not 1 <= v <= self.n:
            raise InvalidGraph(f"vertex {v} not in 1..{self.n}")
        return self.indices[self.indptr[v - 1]:self.indptr[v]] + 1

    def adjacency_matrix(self) -> sparse.csr_matrix:
        """0-based symmetric adjacency matrix."""
        data = np.ones(len(self.indices), dtype=np.int64)
        return sparse.csr_matrix((data, self.indices, self.indptr), shape=(self.n, self.n))

    def component_count(self) -> int:
        count, _ = connected_components(self.adjacency_matrix(), directed=False)
        return int(count)

    def is_forest(self) -> bool:
        return self.num_edges == self.n - self.component_count()

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(1, self.n + 1))
        g.add_edges_from(map(tuple, self.edges.tolist()))
        return g


def edge_list_text(graph: Graph) -> str:
    """Serialize as "n m" followed by one "u v" line per edge."""
    lines = [f"{graph.n} {graph.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges.tolist())
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """
    Parse the edge-list text format.

    Args:
        text: File contents; first line "n m", then m lines "u v"

    Returns:
        Validated Graph

    Raises:
        InvalidGraph: On malformed headers, wrong edge counts, loops or duplicates
    """
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise InvalidGraph("empty edge list")
    try:
        header = [int(x) for x in rows[0]]
        pairs = [tuple(int(x) for x in row) for row in rows[1:]]
    except ValueError as e:
        raise InvalidGraph(f"non-integer token in edge list: {e}") from e

    if len(header) != 2:
        raise InvalidGraph(f"header must be 'n m', got {rows[0]}")
    n, m = header
    if any(len(p) != 2 for p in pairs):
        raise InvalidGraph("every edge line must hold exactly two vertices")
    if len(pairs) != m:
        raise InvalidGraph(f"header announces {m} edges, found {len(pairs)}")
    return Graph.from_edges(n, pairs)


def read_edge_list(path: Union[str, Path]) -> Graph:
    graph = parse_edge_list(Path(path).read_text())
    logger.debug(f"Read {graph!r} from {path}")
    return graph


def write_edge_list(graph: Graph, path: Union[str, Path]) -> None:
    Path(path).write_text(edge_list_text(graph))
    logger.debug(f"Wrote {graph!r} to {path}")
