"""Synthetic cities and desk-scale benchmarks.

`generate_grid_city` fabricates a city-like road network (a jittered
4-connected grid) so the rest of the package can be exercised at any
size without real map extracts.  The timing suite reports median wall
seconds per solver and terminal count, the quality suite compares the
heuristic tours against the optimum, and the backend comparison times
the numba kernels against the pure numpy fallback.  Reports serialize
to CSV with the header `algorithm,n,seconds,meters,dp_states,seed`.
"""

from __future__ import annotations

import csv
import math
import os
import platform
import statistics
import tempfile
import time
from dataclasses import dataclass

import numpy as np

from . import kernels
from .citygraph import CityGraph, load_city_graph
from .errors import InvalidDimensions
from .geo import METERS_PER_DEGREE
from .pathfind import TerminalSet, build_closure
from .solvers import solve_best_of_both, solve_exact, solve_natural, solve_nearest_neighbor

# South-west corner of the synthetic grids; roughly an Andean city.
GRID_ORIGIN = (6.15, -75.65)

CSV_HEADER = ["algorithm", "n", "seconds", "meters", "dp_states", "seed"]


@dataclass
class BenchRow:
    algorithm: str
    n: int
    seconds: float
    meters: float | None
    dp_states: int | None
    seed: int


@dataclass
class BenchReport:
    rows: list[BenchRow]
    environment: str
    seed: int
    ratio_summary: dict[str, tuple[float, float, float]] | None = None


def _pair_meters(lat_a, lon_a, lat_b, lon_b):
    dy = (lat_a - lat_b) * METERS_PER_DEGREE
    dx = (lon_a - lon_b) * METERS_PER_DEGREE * np.cos(np.radians((lat_a + lat_b) / 2.0))
    return np.hypot(dx, dy)


def generate_grid_city(rows, cols, spacing_m, perturbation, seed, vertices_path, edges_path):
    """Write a jittered rows x cols grid city to two text files.

    Vertices sit `spacing_m` apart, displaced by up to
    `perturbation * spacing_m` per axis; edge weights are the projected
    distance between the written coordinates.  Output is byte-identical
    for identical arguments.
    """
    if rows < 1 or cols < 1 or rows * cols < 2:
        raise InvalidDimensions(f"grid must have at least 2 vertices, got {rows}x{cols}")
    rng = np.random.default_rng(seed)
    lat0, lon0 = GRID_ORIGIN
    dlat = spacing_m / METERS_PER_DEGREE
    lon_scale = METERS_PER_DEGREE * math.cos(math.radians(lat0))
    dlon = spacing_m / lon_scale
    amp = perturbation * spacing_m
    lat_jitter = rng.uniform(-amp, amp, (rows, cols)) / METERS_PER_DEGREE
    lon_jitter = rng.uniform(-amp, amp, (rows, cols)) / lon_scale
    lats = lat0 + np.arange(rows)[:, None] * dlat + lat_jitter
    lons = lon0 + np.arange(cols)[None, :] * dlon + lon_jitter
    ids = np.arange(1, rows * cols + 1).reshape(rows, cols)

    lines = [f"# grid city: {rows} rows x {cols} cols, spacing {spacing_m} m, seed {seed}"]
    for vid, la, lo in zip(ids.ravel().tolist(), lats.ravel().tolist(), lons.ravel().tolist()):
        lines.append(f"{vid} {la!r} {lo!r}")
    with open(vertices_path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")

    east = _pair_meters(lats[:, :-1], lons[:, :-1], lats[:, 1:], lons[:, 1:])
    south = _pair_meters(lats[:-1, :], lons[:-1, :], lats[1:, :], lons[1:, :])
    lines = [f"# grid city edges, undirected, seed {seed}"]
    pairs = (
        (ids[:, :-1], ids[:, 1:], east),
        (ids[:-1, :], ids[1:, :], south),
    )
    for us, vs, ws in pairs:
        for u, v, w in zip(us.ravel().tolist(), vs.ravel().tolist(), ws.ravel().tolist()):
            lines.append(f"{u} {v} {w!r}")
    with open(edges_path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def build_grid_city(rows, cols, spacing_m=100.0, perturbation=0.15, seed=0) -> CityGraph:
    """Generate a grid city into temporary files and load it back."""
    with tempfile.TemporaryDirectory(prefix="cityroute-grid-") as tmp:
        vertices = os.path.join(tmp, "vertices.txt")
        edges = os.path.join(tmp, "edges.txt")
        generate_grid_city(rows, cols, spacing_m, perturbation, seed, vertices, edges)
        return load_city_graph(vertices, edges)


def _environment() -> str:
    cpu = ""
    try:
        with open("/proc/cpuinfo", encoding="utf-8") as fh:
            for line in fh:
                if line.lower().startswith("model name"):
                    cpu = line.split(":", 1)[1].strip()
                    break
    except OSError:
        pass
    if not cpu:
        cpu = platform.processor() or platform.machine()
    return f"{cpu}; python {platform.python_version()}; backend {kernels.active_backend()}"


def sample_terminals(graph: CityGraph, n: int, rng) -> TerminalSet:
    """A random terminal set of n distinct graph vertices."""
    picks = rng.choice(graph.ids, size=n, replace=False)
    ids = [int(v) for v in picks]
    points = [graph.point_of(v) for v in ids]
    return TerminalSet(vertex_ids=ids, points=points, origin_points=points)


def _timed(fn, *args, **kwargs):
    started = time.perf_counter()
    result = fn(*args, **kwargs)
    return time.perf_counter() - started, result


def run_timing_suite(graph: CityGraph, ns, trials: int = 5, seed: int = 0) -> BenchReport:
    """Median wall seconds for closure build and every solver, per n.

    Each trial draws a fresh random terminal set; medians damp
    scheduler noise.  The exact rows also carry the solver's DP table
    size (n * 2^n entries).
    """
    rng = np.random.default_rng(seed)
    rows = []
    solvers = (
        ("exact", lambda t, m: solve_exact(m)),
        ("nearest_neighbor", lambda t, m: solve_nearest_neighbor(m)),
        ("natural_normal", lambda t, m: solve_natural(t, "normal", m)),
        ("natural_fast", lambda t, m: solve_natural(t, "fast")),
        ("best_of_both", lambda t, m: solve_best_of_both(t, m)),
    )
    for n in ns:
        build_secs = []
        secs = {name: [] for name, _ in solvers}
        meters = {name: [] for name, _ in solvers}
        dp_states = None
        for _ in range(trials):
            terminals = sample_terminals(graph, n, rng)
            closure = build_closure(graph, terminals)
            build_secs.append(closure.build_seconds)
            for name, run in solvers:
                dt, tour = _timed(run, terminals, closure)
                secs[name].append(dt)
                if tour.total_m is not None:
                    meters[name].append(tour.total_m)
                if tour.dp_states is not None:
                    dp_states = tour.dp_states
        rows.append(BenchRow("build_subgraph", n, statistics.median(build_secs), None, None, seed))
        for name, _ in solvers:
            med_m = statistics.median(meters[name]) if meters[name] else None
            states = dp_states if name == "exact" else None
            rows.append(BenchRow(name, n, statistics.median(secs[name]), med_m, states, seed))
    return BenchReport(rows=rows, environment=_environment(), seed=seed)


def run_quality_suite(graph: CityGraph, n: int, trials: int = 50, seed: int = 0) -> BenchReport:
    """Tour lengths of every solver against the optimum, per trial.

    Rows carry one record per (trial, solver) with that trial's own
    seed, so any single row can be reproduced.  `ratio_summary` maps
    each heuristic to its (min, median, max) length ratio to exact.
    """
    master = np.random.default_rng(seed)
    trial_seeds = [int(s) for s in master.integers(1, 2**31 - 1, size=trials)]
    heuristics = (
        ("nearest_neighbor", lambda t, m: solve_nearest_neighbor(m)),
        ("natural_normal", lambda t, m: solve_natural(t, "normal", m)),
        ("best_of_both", lambda t, m: solve_best_of_both(t, m)),
    )
    ratios = {name: [] for name, _ in heuristics}
    rows = []
    for trial_seed in trial_seeds:
        rng = np.random.default_rng(trial_seed)
        terminals = sample_terminals(graph, n, rng)
        closure = build_closure(graph, terminals)
        dt, exact = _timed(solve_exact, closure)
        rows.append(BenchRow("exact", n, dt, exact.total_m, exact.dp_states, trial_seed))
        for name, run in heuristics:
            dt, tour = _timed(run, terminals, closure)
            rows.append(BenchRow(name, n, dt, tour.total_m, None, trial_seed))
            ratios[name].append(tour.total_m / exact.total_m)
    summary = {
        name: (min(values), statistics.median(values), max(values))
        for name, values in ratios.items()
    }
    return BenchReport(rows=rows, environment=_environment(), seed=seed, ratio_summary=summary)


def run_backend_compare(graph: CityGraph, ns, trials: int = 3, seed: int = 0) -> BenchReport:
    """Closure-build and exact-solve timings for each kernel backend.

    The same seed drives every backend, so each one sees identical
    terminal sets.  Row labels carry the backend in brackets, e.g.
    `exact[numpy]`.
    """
    previous = kernels.active_backend()
    rows = []
    try:
        for backend in kernels.available_backends():
            kernels.use_backend(backend)
            rng = np.random.default_rng(seed)
            for n in ns:
                build_secs = []
                exact_secs = []
                exact_meters = []
                dp_states = None
                for _ in range(trials):
                    terminals = sample_terminals(graph, n, rng)
                    closure = build_closure(graph, terminals)
                    build_secs.append(closure.build_seconds)
                    dt, tour = _timed(solve_exact, closure)
                    exact_secs.append(dt)
                    exact_meters.append(tour.total_m)
                    dp_states = tour.dp_states
                rows.append(BenchRow(f"build_subgraph[{backend}]", n,
                                     statistics.median(build_secs), None, None, seed))
                rows.append(BenchRow(f"exact[{backend}]", n, statistics.median(exact_secs),
                                     statistics.median(exact_meters), dp_states, seed))
    finally:
        kernels.use_backend(previous)
    return BenchReport(rows=rows, environment=_environment(), seed=seed)


def write_csv(report: BenchReport, dest):
    """Write rows to a path or file object; floats keep full precision."""
    own = isinstance(dest, (str, os.PathLike))
    fh = open(dest, "w", encoding="utf-8", newline="") if own else dest
    try:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for r in report.rows:
            writer.writerow([
                r.algorithm,
                r.n,
                repr(float(r.seconds)),
                "" if r.meters is None else repr(float(r.meters)),
                "" if r.dp_states is None else int(r.dp_states),
                r.seed,
            ])
    finally:
        if own:
            fh.close()


def read_csv(source) -> BenchReport:
    """Read rows back from a path or file object."""
    own = isinstance(source, (str, os.PathLike))
    fh = open(source, encoding="utf-8", newline="") if own else source
    try:
        rows = []
        for rec in csv.DictReader(fh):
            rows.append(BenchRow(
                algorithm=rec["algorithm"],
                n=int(rec["n"]),
                seconds=float(rec["seconds"]),
                meters=float(rec["meters"]) if rec["meters"] else None,
                dp_states=int(rec["dp_states"]) if rec["dp_states"] else None,
                seed=int(rec["seed"]),
            ))
    finally:
        if own:
            fh.close()
    return BenchReport(rows=rows, environment="", seed=rows[0].seed if rows else 0)
