"""
Test configuration and fixtures.
"""

import numpy as np
import pytest
from click.testing import CliRunner

from src.uncover import create_app
from src.uncover.generators import complete_graph, cycle_graph, path_graph
from src.uncover.graph import Graph


@pytest.fixture
def app():
    """Create application for testing."""
    return create_app('testing')


@pytest.fixture
def runner():
    """Create command-line test runner."""
    return CliRunner()


@pytest.fixture
def settings(app):
    """Testing configuration class."""
    from src.uncover.config import config
    return config['testing']


@pytest.fixture
def rng():
    """Seeded random stream."""
    return np.random.default_rng(20240611)


@pytest.fixture
def p3():
    """Path 1-2-3."""
    return path_graph(3)


@pytest.fixture
def p5():
    """Path on five vertices."""
    return path_graph(5)


@pytest.fixture
def c6():
    """Cycle on six vertices."""
    return cycle_graph(6)


@pytest.fixture
def k3():
    """Triangle."""
    return complete_graph(3)


@pytest.fixture
def k4():
    """Complete graph on four vertices."""
    return complete_graph(4)


@pytest.fixture
def star():
    """Star with centre 1 and four leaves, plus an isolated vertex 6."""
    return Graph.from_edges(6, [(1, 2), (1, 3), (1, 4), (1, 5)])


@pytest.fixture
def p3_file(tmp_path, p3):
    """Edge-list file of the path 1-2-3."""
    from src.uncover.graph import write_edge_list
    path = tmp_path / 'p3.edges'
    write_edge_list(p3, path)
    return path
