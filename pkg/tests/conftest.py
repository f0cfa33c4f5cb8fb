"""Shared fixtures: hand-written city files and seeded grid cities."""

import numpy as np
import pytest

from cityroute import load_city_graph
from cityroute.bench import build_grid_city, generate_grid_city
from cityroute.pathfind import TerminalSet

# The three-vertex city used by the loader examples.
SPEC_VERTICES = """\
1 6.20 -75.57
2 6.21 -75.58
3 6.22 -75.57
"""

SPEC_EDGES = """\
1 2 150.0
2 3 210.5
"""

# Five vertices with explicit weights and an isolated vertex 5:
# 1-2:4, 2-3:1, 1-3:7, 3-4:3.  Shortest 1->4 is 1-2-3-4 = 8.
FIVE_VERTICES = """\
1 6.20 -75.57
2 6.21 -75.58
3 6.22 -75.57
4 6.23 -75.58
5 6.24 -75.57
"""

FIVE_EDGES = """\
1 2 4
2 3 1
1 3 7
3 4 3
"""

# Two path-graph clusters with no road between them.
SPLIT_VERTICES = """\
1 6.20 -75.57
2 6.21 -75.57
3 6.22 -75.57
4 6.23 -75.57
5 7.20 -74.57
6 7.21 -74.57
7 7.22 -74.57
8 7.23 -74.57
"""

SPLIT_EDGES = """\
1 2 100
2 3 100
3 4 100
5 6 100
6 7 100
7 8 100
"""


@pytest.fixture
def write_city(tmp_path):
    """Factory writing vertex/edge text and returning the two paths."""

    def _write(vertex_text, edge_text, name="city"):
        vpath = tmp_path / f"{name}_vertices.txt"
        epath = tmp_path / f"{name}_edges.txt"
        vpath.write_text(vertex_text)
        epath.write_text(edge_text)
        return vpath, epath

    return _write


@pytest.fixture
def spec_city(write_city):
    vpath, epath = write_city(SPEC_VERTICES, SPEC_EDGES)
    return load_city_graph(vpath, epath)


@pytest.fixture
def five_city(write_city):
    vpath, epath = write_city(FIVE_VERTICES, FIVE_EDGES)
    return load_city_graph(vpath, epath)


@pytest.fixture(scope="session")
def split_city_files(tmp_path_factory):
    tmp = tmp_path_factory.mktemp("split-city")
    vpath = tmp / "vertices.txt"
    epath = tmp / "edges.txt"
    vpath.write_text(SPLIT_VERTICES)
    epath.write_text(SPLIT_EDGES)
    return vpath, epath


@pytest.fixture(scope="session")
def split_city(split_city_files):
    return load_city_graph(*split_city_files)


@pytest.fixture(scope="session")
def grid20():
    """20x20 jittered grid, 400 vertices."""
    return build_grid_city(20, 20, spacing_m=100.0, perturbation=0.15, seed=7)


@pytest.fixture(scope="session")
def grid50():
    """50x50 jittered grid for the snapping oracle."""
    return build_grid_city(50, 50, spacing_m=100.0, perturbation=0.15, seed=11)


@pytest.fixture(scope="session")
def grid12_files(tmp_path_factory):
    """12x12 grid written to disk for tests that drive the CLI."""
    tmp = tmp_path_factory.mktemp("grid12")
    vpath = tmp / "vertices.txt"
    epath = tmp / "edges.txt"
    generate_grid_city(12, 12, 100.0, 0.15, 3, vpath, epath)
    return vpath, epath


@pytest.fixture(scope="session")
def grid12(grid12_files):
    return load_city_graph(*grid12_files)


@pytest.fixture
def make_terminals():
    """Factory: TerminalSet over the given vertex ids of a graph."""

    def _make(graph, ids):
        points = [graph.point_of(v) for v in ids]
        return TerminalSet(vertex_ids=list(ids), points=points, origin_points=points)

    return _make


@pytest.fixture
def random_terminal_ids():
    """Factory: n distinct vertex ids drawn with a seeded generator."""

    def _pick(graph, n, seed):
        rng = np.random.default_rng(seed)
        return [int(v) for v in rng.choice(graph.ids, size=n, replace=False)]

    return _pick
