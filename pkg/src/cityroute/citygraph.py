"""City road network: text-file loading and waypoint snapping.

Input is two plain-text files.  The vertex file has one `id lat lon`
row per vertex, the edge file one `from_id to_id weight_meters` row per
road segment.  Fields are separated by ASCII whitespace, blank lines
and lines starting with `#` are skipped, and the decimal separator is
always `.`.  Edges are undirected unless the loader is told otherwise;
duplicate rows for the same pair keep the minimum weight.
"""

from __future__ import annotations

import math
import time

import numpy as np

from .errors import EmptyGraph, MalformedLine, MissingFile, UnknownEndpoint, UnknownVertex
from .geo import METERS_PER_DEGREE, GeoPoint


class CityGraph:
    """Immutable road network over integer vertex ids.

    Internally the adjacency lives in CSR arrays (indptr/targets/weights
    over dense indices) so the shortest-path kernels can run on plain
    numpy buffers.  Dense indices follow ascending vertex id.
    """

    def __init__(self, ids, lats, lons, indptr, targets, weights, edge_count, directed):
        self.ids = ids
        self.lats = lats
        self.lons = lons
        self.indptr = indptr
        self.targets = targets
        self.weights = weights
        self.edge_count = int(edge_count)
        self.directed = bool(directed)
        self.load_seconds = 0.0
        self._index = {int(v): i for i, v in enumerate(ids)}
        # Projection for the straight-line heuristic.  The reference
        # latitude is the largest |lat| in the graph, so the planar
        # distance never exceeds the per-pair equirectangular length
        # and the heuristic stays a lower bound on road distance.
        ref = float(np.max(np.abs(lats))) if ids.size else 0.0
        self.xs = lons * (METERS_PER_DEGREE * math.cos(math.radians(ref)))
        self.ys = lats * METERS_PER_DEGREE

    @property
    def vertex_count(self) -> int:
        return int(self.ids.size)

    def has_vertex(self, vertex_id: int) -> bool:
        return vertex_id in self._index

    def index_of(self, vertex_id: int) -> int:
        try:
            return self._index[vertex_id]
        except KeyError:
            raise UnknownVertex(vertex_id) from None

    def id_of(self, index: int) -> int:
        return int(self.ids[index])

    def point_of(self, vertex_id: int) -> GeoPoint:
        i = self.index_of(vertex_id)
        return GeoPoint(float(self.lats[i]), float(self.lons[i]))

    def neighbors(self, vertex_id: int) -> list[tuple[int, float]]:
        i = self.index_of(vertex_id)
        lo, hi = int(self.indptr[i]), int(self.indptr[i + 1])
        return [(int(self.ids[self.targets[e]]), float(self.weights[e])) for e in range(lo, hi)]

    def arc_weight(self, u: int, v: int) -> float:
        """Weight of the stored arc u -> v, infinity when there is none."""
        i = self.index_of(u)
        j = self.index_of(v)
        for e in range(int(self.indptr[i]), int(self.indptr[i + 1])):
            if self.targets[e] == j:
                return float(self.weights[e])
        return math.inf


def _data_rows(path):
    try:
        fh = open(path, "r", encoding="utf-8")
    except (FileNotFoundError, IsADirectoryError):
        raise MissingFile(path) from None
    with fh:
        for lineno, line in enumerate(fh, 1):
            parts = line.split()
            if not parts or parts[0].startswith("#"):
                continue
            yield lineno, parts


def load_city_graph(vertices_path, edges_path, directed: bool = False) -> CityGraph:
    """Load a road network from a vertex file and an edge file.

    Raises MissingFile, MalformedLine, UnknownEndpoint or EmptyGraph.
    The wall time spent loading is exposed as `load_seconds`.
    """
    started = time.perf_counter()

    points: dict[int, tuple[float, float]] = {}
    for lineno, parts in _data_rows(vertices_path):
        if len(parts) != 3:
            raise MalformedLine(vertices_path, lineno, f"expected 3 fields, got {len(parts)}")
        try:
            vid = int(parts[0])
            lat = float(parts[1])
            lon = float(parts[2])
        except ValueError:
            raise MalformedLine(vertices_path, lineno, "unparseable number") from None
        if not (-90.0 <= lat <= 90.0 and -180.0 <= lon <= 180.0):
            raise MalformedLine(vertices_path, lineno, f"coordinate out of range: {lat},{lon}")
        points[vid] = (lat, lon)
    if not points:
        raise EmptyGraph(vertices_path)

    ids = np.array(sorted(points), dtype=np.int64)
    index = {int(v): i for i, v in enumerate(ids)}
    lats = np.array([points[int(v)][0] for v in ids], dtype=np.float64)
    lons = np.array([points[int(v)][1] for v in ids], dtype=np.float64)

    edges: dict[tuple[int, int], float] = {}
    for lineno, parts in _data_rows(edges_path):
        if len(parts) != 3:
            raise MalformedLine(edges_path, lineno, f"expected 3 fields, got {len(parts)}")
        try:
            u = int(parts[0])
            v = int(parts[1])
            w = float(parts[2])
        except ValueError:
            raise MalformedLine(edges_path, lineno, "unparseable number") from None
        if not (math.isfinite(w) and w >= 0.0):
            raise MalformedLine(edges_path, lineno, f"weight must be finite and non-negative: {parts[2]}")
        if u not in index:
            raise UnknownEndpoint(edges_path, lineno, u)
        if v not in index:
            raise UnknownEndpoint(edges_path, lineno, v)
        key = (u, v) if directed or u <= v else (v, u)
        old = edges.get(key)
        if old is None or w < old:
            edges[key] = w

    n = ids.size
    src = np.empty(2 * len(edges), dtype=np.int64)
    dst = np.empty(2 * len(edges), dtype=np.int64)
    wgt = np.empty(2 * len(edges), dtype=np.float64)
    count = 0
    for (u, v), w in edges.items():
        iu, iv = index[u], index[v]
        src[count] = iu
        dst[count] = iv
        wgt[count] = w
        count += 1
        if not directed and iu != iv:
            src[count] = iv
            dst[count] = iu
            wgt[count] = w
            count += 1
    src = src[:count]
    order = np.argsort(src, kind="stable")
    targets = dst[:count][order]
    weights = wgt[:count][order]
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])

    graph = CityGraph(ids, lats, lons, indptr, targets, weights, len(edges), directed)
    graph.load_seconds = time.perf_counter() - started
    return graph


def nearest_vertex(graph: CityGraph, point: GeoPoint) -> tuple[int, GeoPoint]:
    """Graph vertex closest to `point` in projected meters.

    Returns the vertex id and its own coordinates.  Exhaustive scan;
    distances use the mean latitude of each candidate pair.  Ties go to
    the lowest vertex id.
    """
    if graph.vertex_count == 0:
        raise EmptyGraph()
    dy = (graph.lats - point.lat) * METERS_PER_DEGREE
    mean = np.radians((graph.lats + point.lat) * 0.5)
    dx = (graph.lons - point.lon) * (METERS_PER_DEGREE * np.cos(mean))
    best = int(np.argmin(dx * dx + dy * dy))
    return int(graph.ids[best]), GeoPoint(float(graph.lats[best]), float(graph.lons[best]))
