"""Shortest paths on the road network and the terminal distance matrix.

The tour solvers never look at the full graph: they work on a metric
closure of the snapped waypoints (terminals), an n x n matrix of
road distances plus the full vertex path behind every entry.  For a
handful of terminals the matrix is filled with point-to-point A*
searches; past a threshold one Dijkstra sweep per terminal is cheaper.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import kernels
from .citygraph import CityGraph
from .errors import Unreachable
from .geo import GeoPoint

DEFAULT_ASTAR_THRESHOLD = 5

HEURISTICS = {"zero": 0, "euclidean": 1, "manhattan": 2}


@dataclass
class TerminalSet:
    """Waypoints snapped onto the graph, in user order.

    `vertex_ids[i]` is the snapped vertex for the i-th waypoint,
    `points[i]` its coordinate in the graph and `origin_points[i]` the
    coordinate the user actually entered.  Terminal 0 is the start and
    end of every tour.
    """

    vertex_ids: list[int]
    points: list[GeoPoint]
    origin_points: list[GeoPoint]

    def __post_init__(self):
        n = len(self.vertex_ids)
        if n < 2:
            raise ValueError(f"need at least 2 terminals, got {n}")
        if len(set(self.vertex_ids)) != n:
            raise ValueError("terminal vertex ids must be unique")
        if len(self.points) != n or len(self.origin_points) != n:
            raise ValueError("terminal lists must have equal length")

    def __len__(self):
        return len(self.vertex_ids)


@dataclass
class ClosureMatrix:
    """Terminal-to-terminal road distances with the paths behind them.

    `dist[i, j]` is meters from terminal i to terminal j, infinity when
    no road connects them.  `paths[i][j]` is the full vertex-id walk for
    finite entries and None otherwise; matrices built by hand for tests
    may omit paths entirely.
    """

    dist: np.ndarray
    paths: list[list[list[int] | None]] | None = None
    build_seconds: float = 0.0
    heuristic: str = "euclidean"

    @property
    def n(self) -> int:
        return int(self.dist.shape[0])


def _check_heuristic(name: str) -> int:
    try:
        return HEURISTICS[name]
    except KeyError:
        raise ValueError(f"unknown heuristic {name!r}, expected one of {sorted(HEURISTICS)}") from None


def dijkstra_sssp(graph: CityGraph, source: int) -> tuple[dict[int, float], dict[int, int]]:
    """Distances and predecessors from `source` to every vertex.

    The distance map covers all vertices, with infinity marking the
    unreachable ones; the predecessor map only holds reached vertices.
    Equal priorities settle lowest vertex id first.
    """
    src = graph.index_of(source)
    dist, pred = kernels.dijkstra_csr(graph.indptr, graph.targets, graph.weights, src)
    dist_map = {int(graph.ids[i]): float(dist[i]) for i in range(graph.vertex_count)}
    pred_map = {int(graph.ids[i]): int(graph.ids[pred[i]]) for i in np.flatnonzero(pred >= 0)}
    return dist_map, pred_map


def astar(graph: CityGraph, source: int, target: int, heuristic: str = "euclidean") -> tuple[float, list[int]]:
    """Point-to-point search; returns (meters, vertex-id path).

    `euclidean` and `zero` heuristics never overestimate road distance,
    so they return true shortest paths.  `manhattan` (|dx| + |dy| on the
    projection) can overestimate and may return a slightly longer path.
    """
    hkind = _check_heuristic(heuristic)
    si = graph.index_of(source)
    ti = graph.index_of(target)
    if si == ti:
        return 0.0, [source]
    d, pred = kernels.astar_csr(
        graph.indptr, graph.targets, graph.weights, graph.xs, graph.ys, si, ti, hkind
    )
    if not np.isfinite(d):
        raise Unreachable(source, target)
    return float(d), _walk_ids(graph, pred, si, ti)


def _walk_ids(graph, pred, src_idx, dst_idx):
    seq = [dst_idx]
    while seq[-1] != src_idx:
        seq.append(int(pred[seq[-1]]))
    seq.reverse()
    return [int(graph.ids[i]) for i in seq]


def build_closure(
    graph: CityGraph,
    terminals: TerminalSet,
    heuristic: str = "euclidean",
    astar_threshold: int = DEFAULT_ASTAR_THRESHOLD,
) -> ClosureMatrix:
    """Metric closure of the terminals: all-pairs road distances.

    Uses A* per ordered pair when the terminal count is at or below
    `astar_threshold`, one Dijkstra sweep per terminal otherwise.
    Unreachable pairs get infinity, not an error; callers decide.
    """
    hkind = _check_heuristic(heuristic)
    started = time.perf_counter()
    n = len(terminals)
    idx = [graph.index_of(v) for v in terminals.vertex_ids]
    dist = np.zeros((n, n), dtype=np.float64)
    paths: list[list[list[int] | None]] = [[None] * n for _ in range(n)]
    for i in range(n):
        paths[i][i] = [terminals.vertex_ids[i]]

    if n <= astar_threshold:
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                d, pred = kernels.astar_csr(
                    graph.indptr, graph.targets, graph.weights,
                    graph.xs, graph.ys, idx[i], idx[j], hkind,
                )
                dist[i, j] = d
                if np.isfinite(d):
                    paths[i][j] = _walk_ids(graph, pred, idx[i], idx[j])
    else:
        for i in range(n):
            row, pred = kernels.dijkstra_csr(graph.indptr, graph.targets, graph.weights, idx[i])
            for j in range(n):
                if i == j:
                    continue
                dist[i, j] = row[idx[j]]
                if np.isfinite(dist[i, j]):
                    paths[i][j] = _walk_ids(graph, pred, idx[i], idx[j])

    matrix = ClosureMatrix(dist=dist, paths=paths, heuristic=heuristic)
    matrix.build_seconds = time.perf_counter() - started
    return matrix
