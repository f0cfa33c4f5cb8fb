"""Multi-stop route planning on city road graphs.

Load a road network from text files, snap waypoints from a Google Maps
directions URL onto it, build the terminal distance matrix with
Dijkstra or A*, and order the stops with exact or heuristic tour
solvers.  `cityroute run` wraps the whole pipeline in an interactive
session; the same pieces are importable for library use.
"""

from .citygraph import CityGraph, load_city_graph, nearest_vertex
from .geo import GeoPoint, projected_distance
from .pathfind import ClosureMatrix, TerminalSet, astar, build_closure, dijkstra_sssp
from .solvers import (
    Tour,
    expand_tour,
    radial_order,
    solve_best_of_both,
    solve_exact,
    solve_natural,
    solve_nearest_neighbor,
    tour_length,
)
from .urlcodec import WaypointRequest, emit_gmaps_url, parse_gmaps_url

__version__ = "0.1.0"

__all__ = [
    "CityGraph",
    "ClosureMatrix",
    "GeoPoint",
    "TerminalSet",
    "Tour",
    "WaypointRequest",
    "astar",
    "build_closure",
    "dijkstra_sssp",
    "emit_gmaps_url",
    "expand_tour",
    "load_city_graph",
    "nearest_vertex",
    "parse_gmaps_url",
    "projected_distance",
    "radial_order",
    "solve_best_of_both",
    "solve_exact",
    "solve_natural",
    "solve_nearest_neighbor",
    "tour_length",
]
