"""Tour construction over the terminal distance matrix.

Four strategies with very different cost/quality trade-offs:

* `solve_exact` - subset dynamic programming, optimal, O(n^2 * 2^n)
  time and n * 2^n table entries, practical to around 20 terminals.
* `solve_nearest_neighbor` - greedy, O(n^2), no quality guarantee.
* `solve_natural` - radial sweep around the centroid, O(n log n);
  fast mode never touches the matrix and reports no distance, normal
  mode additionally tries the reversed ring and keeps the shorter.
* `solve_best_of_both` - the better of natural-normal and greedy.

Every tour starts and ends at terminal 0 and visits each terminal once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cmp_to_key

import numpy as np

from . import kernels
from .errors import Disconnected, MissingPath, TooLarge, UnreachableLeg
from .geo import METERS_PER_DEGREE
from .pathfind import ClosureMatrix, TerminalSet

DEFAULT_EXACT_CAP = 24


@dataclass
class Tour:
    """A closed visiting order over terminal indices.

    `order` starts and ends with 0.  `total_m` is the road length in
    meters, or None when the solver never computed distances (natural
    fast mode).  `dp_states` is filled by the exact solver only.
    """

    order: list[int]
    total_m: float | None
    algorithm: str = ""
    dp_states: int | None = None


def tour_length(matrix: ClosureMatrix, order: list[int]) -> float:
    """Sum of leg distances along `order`, left to right."""
    total = 0.0
    for a, b in zip(order, order[1:]):
        d = float(matrix.dist[a, b])
        if math.isinf(d):
            raise UnreachableLeg(a, b)
        total += d
    return total


def _require_connected(matrix: ClosureMatrix):
    if not np.isfinite(matrix.dist).all():
        raise Disconnected()


def solve_exact(matrix: ClosureMatrix, cap: int | None = DEFAULT_EXACT_CAP) -> Tour:
    """Optimal tour by subset DP; raises TooLarge past `cap` terminals.

    Ties between equally short tours go to the lexicographically
    smallest order: the DP keeps the lowest predecessor index, and for
    symmetric matrices the returned direction is the smaller of the
    tour and its reversal, which cost the same.
    """
    n = matrix.n
    if n < 2:
        raise ValueError(f"need at least 2 terminals, got {n}")
    if cap is not None and n > cap:
        raise TooLarge(n, cap)
    _require_connected(matrix)
    dist = np.ascontiguousarray(matrix.dist, dtype=np.float64)
    _, order_arr, dp_size = kernels.held_karp(dist)
    order = [int(v) for v in order_arr]
    if np.array_equal(dist, dist.T):
        reversed_order = order[::-1]
        if reversed_order < order:
            order = reversed_order
    return Tour(
        order=order,
        total_m=tour_length(matrix, order),
        algorithm="exact",
        dp_states=int(dp_size),
    )


def solve_nearest_neighbor(matrix: ClosureMatrix) -> Tour:
    """Greedy tour: repeatedly hop to the closest unvisited terminal.

    Ties pick the lowest terminal index.  Requires a fully finite
    matrix and closes the cycle back to terminal 0.
    """
    _require_connected(matrix)
    n = matrix.n
    order = [0]
    visited = np.zeros(n, dtype=bool)
    visited[0] = True
    current = 0
    for _ in range(n - 1):
        row = np.where(visited, np.inf, matrix.dist[current])
        current = int(np.argmin(row))
        visited[current] = True
        order.append(current)
    order.append(0)
    return Tour(order=order, total_m=tour_length(matrix, order), algorithm="nearest_neighbor")


def radial_order(terminals: TerminalSet) -> list[int]:
    """Terminal indices swept around their centroid, terminal 0 first.

    Points are projected to meters, the centroid is their arithmetic
    mean, and ordering is by half-plane (upper first), then cross
    product, then distance to the centroid, then terminal index.
    """
    ref = sum(p.lat for p in terminals.points) / len(terminals)
    scale = METERS_PER_DEGREE * math.cos(math.radians(ref))
    xs = [p.lon * scale for p in terminals.points]
    ys = [p.lat * METERS_PER_DEGREE for p in terminals.points]
    cx = sum(xs) / len(xs)
    cy = sum(ys) / len(ys)

    def compare(a, b):
        upper_a = ys[a] > cy or (ys[a] == cy and xs[a] >= cx)
        upper_b = ys[b] > cy or (ys[b] == cy and xs[b] >= cx)
        if upper_a != upper_b:
            return -1 if upper_a else 1
        cross = (xs[a] - cx) * (ys[b] - cy) - (ys[a] - cy) * (xs[b] - cx)
        if cross > 0:
            return -1
        if cross < 0:
            return 1
        ra = (xs[a] - cx) ** 2 + (ys[a] - cy) ** 2
        rb = (xs[b] - cx) ** 2 + (ys[b] - cy) ** 2
        if ra != rb:
            return -1 if ra < rb else 1
        return a - b

    ring = sorted(range(len(terminals)), key=cmp_to_key(compare))
    start = ring.index(0)
    return ring[start:] + ring[:start]


def solve_natural(
    terminals: TerminalSet,
    mode: str = "normal",
    matrix: ClosureMatrix | None = None,
) -> Tour:
    """Radial-sweep tour around the centroid of the terminals.

    Fast mode orders points by geometry alone: no distance matrix, no
    total.  Normal mode scores the ring and its reversal with real road
    distances and keeps the shorter (the forward ring on a tie).
    """
    if mode not in ("fast", "normal"):
        raise ValueError(f"unknown mode {mode!r}, expected 'fast' or 'normal'")
    ring = radial_order(terminals)
    forward = ring + [0]
    if mode == "fast":
        return Tour(order=forward, total_m=None, algorithm="natural_fast")
    if matrix is None:
        raise ValueError("normal mode needs the distance matrix")
    _require_connected(matrix)
    backward = [0] + ring[:0:-1] + [0]
    forward_m = tour_length(matrix, forward)
    backward_m = tour_length(matrix, backward)
    if backward_m < forward_m:
        return Tour(order=backward, total_m=backward_m, algorithm="natural_normal")
    return Tour(order=forward, total_m=forward_m, algorithm="natural_normal")


def solve_best_of_both(terminals: TerminalSet, matrix: ClosureMatrix) -> Tour:
    """The better of natural-normal and nearest-neighbor.

    Returns the natural tour when they tie, keeping each tour's own
    algorithm label so callers can see which one won.
    """
    natural = solve_natural(terminals, "normal", matrix)
    greedy = solve_nearest_neighbor(matrix)
    return greedy if greedy.total_m < natural.total_m else natural


def expand_tour(tour: Tour, matrix: ClosureMatrix) -> list[int]:
    """Street-level vertex walk behind a tour.

    Concatenates the stored leg paths, dropping each duplicated
    junction vertex.  Raises MissingPath when the matrix has no stored
    path for a leg.
    """
    if matrix.paths is None:
        raise MissingPath(tour.order[0], tour.order[1])
    walk: list[int] = []
    for a, b in zip(tour.order, tour.order[1:]):
        seg = matrix.paths[a][b]
        if seg is None:
            raise MissingPath(a, b)
        walk.extend(seg if not walk else seg[1:])
    return walk
