"""Interactive route-planning session and the command-line entry point.

The `run` subcommand loads a city graph, asks for a Google Maps
directions URL, and offers five ways to order the stops into a closed
tour.  Typing `x` (either case) exits, `extreme-mode` at the URL prompt
lifts the size limit on the exact solver, and `c` in the menu switches
to a new URL.  A scripted mode (`--url`/`--algo`) pushes the same
inputs through the identical loop for use in tests and pipelines.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field

import numpy as np

from . import bench as bench_mod
from .citygraph import CityGraph, load_city_graph, nearest_vertex
from .errors import CityRouteError, CoordinateOutOfRange, InvalidUrl, TooFewPoints, TooLarge
from .geo import GeoPoint
from .pathfind import DEFAULT_ASTAR_THRESHOLD, ClosureMatrix, TerminalSet, build_closure
from .solvers import (
    DEFAULT_EXACT_CAP,
    Tour,
    expand_tour,
    solve_best_of_both,
    solve_exact,
    solve_natural,
    solve_nearest_neighbor,
)
from .urlcodec import WaypointRequest, emit_gmaps_url, parse_gmaps_url

# Above this many terminals the menu hides the exact option unless
# extreme mode is on.
MENU_EXACT_LIMIT = 20

URL_PROMPT = (
    "Paste here the Google Maps URL containing the points you want to visit.\n"
    "Remember that the first point will be also the last one in the tour:"
)

INVALID_URL = "Invalid URL! Try again:"

GRAPH_WARNING = (
    "WARNING: The distance is computed using our graph of the city, which might\n"
    "differ from the one used by Google Maps. This means that what for us is the\n"
    "shortest tour may not be the same for them, also because they might\n"
    "have used a different way to complete the paths between every\n"
    "pair of vertices"
)

EXTREME_WARNING = (
    "WARNING: extreme mode removes the point limit on the Exact option.\n"
    "Large inputs may need a very long time and a lot of memory."
)

DISCONNECTED_NOTICE = (
    "At least two of the given points are not connected in our graph, so a\n"
    "distance cannot be calculated. Using Natural approximation fast mode to\n"
    "compute a possible route:"
)

MENU_HEADER = "Choose (write the number and press enter):"

MENU_BODY = (
    " 1. Natural approximation fast mode -- won't show total distance\n"
    "    (ALMOST INSTANT)\n"
    " 2. Natural approximation normal mode -- might get a better tour than\n"
    "    option 1 (medium)\n"
    " 3. Nearest Neighbor (medium)\n"
    " 4. The best of both (options 2 and 3 combined) (medium)"
)

MENU_EXACT = (
    " 5. Exact -- potentially very slow, about 30 seconds for 20 points\n"
    "    (SLOW)"
)

MENU_TAIL = " c. Change URL\n x. Exit"


@dataclass
class SessionState:
    """Everything one interactive session carries between prompts."""

    graph: CityGraph
    heuristic: str = "euclidean"
    astar_threshold: int = DEFAULT_ASTAR_THRESHOLD
    exact_cap: int = DEFAULT_EXACT_CAP
    verbose: bool = False
    extreme: bool = False
    request: WaypointRequest | None = None
    terminals: TerminalSet | None = None
    closure: ClosureMatrix | None = None
    point_echo: dict[int, GeoPoint] = field(default_factory=dict)

    def exact_visible(self) -> bool:
        return self.extreme or len(self.terminals) <= MENU_EXACT_LIMIT

    def exact_cap_now(self):
        return None if self.extreme else self.exact_cap


def _reader(lines):
    """Turn an iterable of input lines into a read() -> str|None callable."""
    it = iter(lines)

    def read():
        try:
            return next(it)
        except StopIteration:
            return None

    return read


def _stdin_reader(stream):
    def read():
        line = stream.readline()
        if line == "":
            return None
        return line.rstrip("\n")

    return read


def _prompt_url(state: SessionState, read, out):
    """URL loop: returns a WaypointRequest, or None when the user exits."""
    print(URL_PROMPT, file=out)
    while True:
        line = read()
        if line is None:
            return None
        text = line.strip()
        if text in ("x", "X"):
            return None
        if text == "extreme-mode":
            state.extreme = True
            print(EXTREME_WARNING, file=out)
            print(URL_PROMPT, file=out)
            continue
        try:
            return parse_gmaps_url(text)
        except (InvalidUrl, TooFewPoints, CoordinateOutOfRange):
            print(INVALID_URL, file=out)


def _snap_request(state: SessionState, request, out) -> bool:
    """Snap request points to vertices; False when too few remain."""
    ids: list[int] = []
    points: list[GeoPoint] = []
    origins: list[GeoPoint] = []
    merged = 0
    for p in request.points:
        vid, snapped = nearest_vertex(state.graph, p)
        if vid in ids:
            merged += 1
            continue
        ids.append(vid)
        points.append(snapped)
        origins.append(p)
    if merged:
        print(f"Note: {merged} point(s) snapped to an already used road vertex and were merged.", file=out)
    if len(ids) < 2:
        print("All points snapped to the same road vertex; there is nothing to tour.", file=out)
        return False
    state.request = request
    state.terminals = TerminalSet(vertex_ids=ids, points=points, origin_points=origins)
    state.closure = None  # any cached subgraph belongs to the old URL
    state.point_echo = dict(zip(ids, origins))
    return True


def show_menu(state: SessionState, read, out) -> str:
    """Print the menu and read choices until one is valid."""
    print(MENU_HEADER, file=out)
    print(MENU_BODY, file=out)
    if state.exact_visible():
        print(MENU_EXACT, file=out)
    print(MENU_TAIL, file=out)
    valid = {"1", "2", "3", "4", "c", "x"}
    if state.exact_visible():
        valid.add("5")
    while True:
        line = read()
        if line is None:
            return "x"
        choice = line.strip().lower()
        if choice in valid:
            return choice
        print("Invalid option! Try again:", file=out)


def _print_route(state: SessionState, tour: Tour, out):
    terminals = state.terminals
    points = [terminals.origin_points[i] for i in tour.order]
    print("Route: " + " -> ".join(f"{p.lat:.6f},{p.lon:.6f}" for p in points), file=out)
    print(emit_gmaps_url(points), file=out)
    if state.verbose and state.closure is not None and state.closure.paths is not None:
        walk = expand_tour(tour, state.closure)
        print("Vertices: " + " ".join(str(v) for v in walk), file=out)


def _run_natural_fast(state: SessionState, out):
    started = time.perf_counter()
    tour = solve_natural(state.terminals, "fast")
    print(f"Time required to compute route: {time.perf_counter() - started:.3f}s", file=out)
    _print_route(state, tour, out)


def execute_choice(state: SessionState, choice: str, out):
    """Run one menu option and print its route."""
    if choice == "1":
        return _run_natural_fast(state, out)
    if state.closure is None:
        state.closure = build_closure(
            state.graph, state.terminals, state.heuristic, state.astar_threshold
        )
        print(f"Time required to build subgraph: {state.closure.build_seconds:.3f}s", file=out)
    if not np.isfinite(state.closure.dist).all():
        print(DISCONNECTED_NOTICE, file=out)
        return _run_natural_fast(state, out)
    started = time.perf_counter()
    if choice == "2":
        tour = solve_natural(state.terminals, "normal", state.closure)
    elif choice == "3":
        tour = solve_nearest_neighbor(state.closure)
    elif choice == "4":
        tour = solve_best_of_both(state.terminals, state.closure)
    else:
        try:
            tour = solve_exact(state.closure, cap=state.exact_cap_now())
        except TooLarge as exc:
            print(f"Too many points for the Exact option ({exc.n} > {exc.cap}).", file=out)
            print('Write "extreme-mode" at the URL prompt to lift the limit.', file=out)
            return
    print(f"Time required to compute route: {time.perf_counter() - started:.3f}s", file=out)
    print(f"Total distance: {tour.total_m:.1f} m", file=out)
    _print_route(state, tour, out)


def run_session(
    vertices_path,
    edges_path,
    *,
    directed: bool = False,
    heuristic: str = "euclidean",
    astar_threshold: int = DEFAULT_ASTAR_THRESHOLD,
    exact_cap: int = DEFAULT_EXACT_CAP,
    url: str | None = None,
    algo: int | None = None,
    extreme: bool = False,
    verbose: bool = False,
    stdin=None,
    stdout=None,
) -> int:
    """Drive a full session; returns the process exit code.

    With `url`/`algo` the same loop runs on a synthesized script of
    inputs instead of stdin, so scripted runs behave exactly like a
    user typing.
    """
    out = stdout if stdout is not None else sys.stdout
    if url is not None:
        script = ["extreme-mode"] if extreme else []
        script += [url, str(algo), "x"]
        read = _reader(script)
    elif stdin is not None:
        read = _stdin_reader(stdin) if hasattr(stdin, "readline") else _reader(stdin)
    else:
        read = _stdin_reader(sys.stdin)

    print("Initializing ...", file=out)
    try:
        graph = load_city_graph(vertices_path, edges_path, directed=directed)
    except CityRouteError as exc:
        print(f"Could not load the city graph: {exc}", file=out)
        return 1
    print(f"Time required to build graph: {graph.load_seconds:.3f}s", file=out)

    state = SessionState(
        graph=graph,
        heuristic=heuristic,
        astar_threshold=astar_threshold,
        exact_cap=exact_cap,
        verbose=verbose,
        extreme=extreme,
    )
    while True:
        request = _prompt_url(state, read, out)
        if request is None:
            return 0
        if not _snap_request(state, request, out):
            continue  # ask for another URL
        print(GRAPH_WARNING, file=out)
        while True:
            choice = show_menu(state, read, out)
            if choice == "x":
                return 0
            if choice == "c":
                break
            execute_choice(state, choice, out)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="cityroute",
        description="Plan multi-stop tours on a city road graph.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="interactive route-planning session")
    run_p.add_argument("vertices", help="vertex file: one 'id lat lon' row per vertex")
    run_p.add_argument("edges", help="edge file: one 'from_id to_id weight_meters' row per edge")
    run_p.add_argument("--directed", action="store_true", help="treat edge rows as one-way arcs")
    run_p.add_argument("--heuristic", choices=("euclidean", "manhattan"), default="euclidean")
    run_p.add_argument("--astar-threshold", type=int, default=DEFAULT_ASTAR_THRESHOLD,
                       help="terminal count up to which the subgraph uses A* per pair")
    run_p.add_argument("--exact-cap", type=int, default=DEFAULT_EXACT_CAP,
                       help="largest terminal count the Exact option accepts outside extreme mode")
    run_p.add_argument("--url", help="run one scripted request instead of prompting")
    run_p.add_argument("--algo", type=int, choices=(1, 2, 3, 4, 5), help="menu option for --url")
    run_p.add_argument("--extreme", action="store_true", help="start with extreme mode enabled")
    run_p.add_argument("--verbose", action="store_true", help="also print the street-level vertex walk")

    gen_p = sub.add_parser("gen-city", help="write a synthetic grid city to vertex/edge files")
    gen_p.add_argument("vertices", help="output vertex file")
    gen_p.add_argument("edges", help="output edge file")
    gen_p.add_argument("--rows", type=int, required=True)
    gen_p.add_argument("--cols", type=int, required=True)
    gen_p.add_argument("--spacing", type=float, default=100.0, help="grid spacing in meters")
    gen_p.add_argument("--perturbation", type=float, default=0.15,
                       help="coordinate jitter as a fraction of spacing")
    gen_p.add_argument("--seed", type=int, default=0)

    bench_p = sub.add_parser("bench", help="timing and quality suites on a synthetic city")
    bench_p.add_argument("--ns", type=int, nargs="+", default=[5, 10, 15],
                         help="terminal counts for the timing suite")
    bench_p.add_argument("--trials", type=int, default=5)
    bench_p.add_argument("--seed", type=int, default=0)
    bench_p.add_argument("--out", help="write the CSV here instead of stdout")
    bench_p.add_argument("--rows", type=int, default=60)
    bench_p.add_argument("--cols", type=int, default=60)
    bench_p.add_argument("--spacing", type=float, default=100.0)
    bench_p.add_argument("--perturbation", type=float, default=0.15)
    bench_p.add_argument("--quality-n", type=int,
                         help="also run the tour-quality suite at this terminal count")
    bench_p.add_argument("--quality-trials", type=int, default=50)
    bench_p.add_argument("--compare-backends", action="store_true",
                         help="time the numba and numpy kernel backends side by side")

    args = parser.parse_args(argv)

    if args.command == "run":
        if (args.url is None) != (args.algo is None):
            parser.error("--url and --algo must be given together")
        return run_session(
            args.vertices,
            args.edges,
            directed=args.directed,
            heuristic=args.heuristic,
            astar_threshold=args.astar_threshold,
            exact_cap=args.exact_cap,
            url=args.url,
            algo=args.algo,
            extreme=args.extreme,
            verbose=args.verbose,
        )

    if args.command == "gen-city":
        try:
            bench_mod.generate_grid_city(
                args.rows, args.cols, args.spacing, args.perturbation, args.seed,
                args.vertices, args.edges,
            )
        except CityRouteError as exc:
            print(str(exc), file=sys.stderr)
            return 1
        return 0

    return _run_bench(args)


def _run_bench(args) -> int:
    graph = bench_mod.build_grid_city(
        args.rows, args.cols, args.spacing, args.perturbation, args.seed
    )
    report = bench_mod.run_timing_suite(graph, args.ns, trials=args.trials, seed=args.seed)
    if args.quality_n:
        quality = bench_mod.run_quality_suite(
            graph, args.quality_n, trials=args.quality_trials, seed=args.seed
        )
        report.rows.extend(quality.rows)
        for algorithm, (lo, mid, hi) in sorted((quality.ratio_summary or {}).items()):
            print(f"# {algorithm} ratio to exact: min {lo:.4f} median {mid:.4f} max {hi:.4f}",
                  file=sys.stderr)
    if args.compare_backends:
        compare = bench_mod.run_backend_compare(graph, args.ns, trials=args.trials, seed=args.seed)
        report.rows.extend(compare.rows)
    if args.out:
        bench_mod.write_csv(report, args.out)
        print(f"wrote {len(report.rows)} rows to {args.out}", file=sys.stderr)
    else:
        bench_mod.write_csv(report, sys.stdout)
    return 0
