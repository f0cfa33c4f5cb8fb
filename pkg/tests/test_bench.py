"""Synthetic grid cities and the timing/quality suites."""

import io
import statistics

import numpy as np
import pytest

from cityroute import build_closure, load_city_graph, projected_distance, solve_exact
from cityroute.bench import (
    BenchRow,
    build_grid_city,
    generate_grid_city,
    read_csv,
    run_backend_compare,
    run_quality_suite,
    run_timing_suite,
    sample_terminals,
    write_csv,
)
from cityroute.errors import InvalidDimensions
from cityroute.kernels import available_backends
from cityroute.solvers import solve_natural, solve_nearest_neighbor


@pytest.mark.parametrize("rows,cols", [(1, 1), (0, 5), (3, 0)])
def test_generator_rejects_bad_dimensions(tmp_path, rows, cols):
    with pytest.raises(InvalidDimensions):
        generate_grid_city(rows, cols, 100.0, 0.0, 0, tmp_path / "v", tmp_path / "e")


def test_two_by_two_unperturbed_grid(tmp_path):
    generate_grid_city(2, 2, 100.0, 0.0, 0, tmp_path / "v", tmp_path / "e")
    g = load_city_graph(tmp_path / "v", tmp_path / "e")
    assert g.vertex_count == 4
    assert g.edge_count == 4
    for vid in (1, 2, 3, 4):
        for _, w in g.neighbors(vid):
            assert w == pytest.approx(100.0, abs=0.01)


def test_grid_edge_count_formula(tmp_path):
    generate_grid_city(5, 7, 100.0, 0.15, 1, tmp_path / "v", tmp_path / "e")
    g = load_city_graph(tmp_path / "v", tmp_path / "e")
    assert g.vertex_count == 35
    assert g.edge_count == 5 * 6 + 4 * 7


def test_same_seed_means_byte_identical_files(tmp_path):
    for name in ("a", "b"):
        generate_grid_city(4, 4, 100.0, 0.15, 9, tmp_path / f"v{name}", tmp_path / f"e{name}")
    assert (tmp_path / "va").read_bytes() == (tmp_path / "vb").read_bytes()
    assert (tmp_path / "ea").read_bytes() == (tmp_path / "eb").read_bytes()
    generate_grid_city(4, 4, 100.0, 0.15, 10, tmp_path / "vc", tmp_path / "ec")
    assert (tmp_path / "va").read_bytes() != (tmp_path / "vc").read_bytes()


def test_edge_weights_match_written_coordinates(tmp_path):
    generate_grid_city(4, 5, 80.0, 0.2, 2, tmp_path / "v", tmp_path / "e")
    g = load_city_graph(tmp_path / "v", tmp_path / "e")
    for vid in g.ids.tolist():
        for nbr, w in g.neighbors(vid):
            assert w == pytest.approx(
                projected_distance(g.point_of(vid), g.point_of(nbr)), rel=1e-9
            )


def test_build_grid_city_loads_in_one_call():
    g = build_grid_city(3, 3, seed=4)
    assert g.vertex_count == 9
    assert g.edge_count == 12


def test_sample_terminals_distinct_and_seeded(grid12):
    a = sample_terminals(grid12, 8, np.random.default_rng(77))
    b = sample_terminals(grid12, 8, np.random.default_rng(77))
    assert a.vertex_ids == b.vertex_ids
    assert len(set(a.vertex_ids)) == 8
    assert a.points == a.origin_points


def test_timing_suite_shape_and_dominance(grid12):
    report = run_timing_suite(grid12, [4, 6], trials=2, seed=5)
    assert len(report.rows) == 2 * 6
    by_algo = {(r.algorithm, r.n): r for r in report.rows}
    for n in (4, 6):
        assert by_algo[("build_subgraph", n)].meters is None
        assert by_algo[("exact", n)].dp_states == n * 2**n
        assert by_algo[("natural_fast", n)].meters is None
        assert by_algo[("nearest_neighbor", n)].dp_states is None
        # Medians of pointwise-dominated trial values stay dominated.
        assert by_algo[("exact", n)].meters <= by_algo[("nearest_neighbor", n)].meters + 1e-9
        assert by_algo[("exact", n)].meters <= by_algo[("natural_normal", n)].meters + 1e-9
        assert by_algo[("best_of_both", n)].meters <= by_algo[("nearest_neighbor", n)].meters + 1e-9
    assert report.environment
    assert "backend" in report.environment


def test_timing_suite_deterministic_tours(grid12):
    a = run_timing_suite(grid12, [5], trials=2, seed=6)
    b = run_timing_suite(grid12, [5], trials=2, seed=6)
    for ra, rb in zip(a.rows, b.rows):
        assert ra.algorithm == rb.algorithm
        assert ra.meters == rb.meters
        assert ra.dp_states == rb.dp_states


def test_quality_suite_rows_and_ratios(grid12):
    report = run_quality_suite(grid12, 6, trials=8, seed=7)
    assert len(report.rows) == 8 * 4
    assert set(report.ratio_summary) == {"nearest_neighbor", "natural_normal", "best_of_both"}
    for lo, mid, hi in report.ratio_summary.values():
        assert lo >= 1.0 - 1e-9
        assert lo <= mid <= hi
    by_seed = {}
    for row in report.rows:
        by_seed.setdefault(row.seed, {})[row.algorithm] = row
    assert len(by_seed) == 8
    for group in by_seed.values():
        exact_m = group["exact"].meters
        best = group["best_of_both"].meters
        assert exact_m <= best + 1e-9
        assert best <= min(group["nearest_neighbor"].meters, group["natural_normal"].meters)


def test_quality_rows_reproducible_from_their_seed(grid12):
    report = run_quality_suite(grid12, 5, trials=3, seed=8)
    row = next(r for r in report.rows if r.algorithm == "natural_normal")
    rng = np.random.default_rng(row.seed)
    terminals = sample_terminals(grid12, 5, rng)
    closure = build_closure(grid12, terminals)
    assert solve_natural(terminals, "normal", closure).total_m == row.meters
    exact_row = next(r for r in report.rows if r.algorithm == "exact" and r.seed == row.seed)
    assert solve_exact(closure).total_m == exact_row.meters
    greedy_row = next(
        r for r in report.rows if r.algorithm == "nearest_neighbor" and r.seed == row.seed
    )
    assert solve_nearest_neighbor(closure).total_m == greedy_row.meters


@pytest.mark.skipif(
    set(available_backends()) != {"numba", "numpy"},
    reason="needs both kernel backends importable",
)
def test_backend_compare_same_tours(grid12):
    report = run_backend_compare(grid12, [5], trials=1, seed=9)
    algos = [r.algorithm for r in report.rows]
    assert "exact[numba]" in algos and "exact[numpy]" in algos
    assert "build_subgraph[numba]" in algos and "build_subgraph[numpy]" in algos
    exact = {r.algorithm: r for r in report.rows if r.algorithm.startswith("exact")}
    assert exact["exact[numba]"].meters == exact["exact[numpy]"].meters
    assert exact["exact[numba]"].dp_states == exact["exact[numpy]"].dp_states


def test_csv_round_trip_exact(tmp_path, grid12):
    report = run_timing_suite(grid12, [4], trials=1, seed=10)
    dest = tmp_path / "report.csv"
    write_csv(report, dest)
    first_line = dest.read_text().splitlines()[0]
    assert first_line == "algorithm,n,seconds,meters,dp_states,seed"
    again = read_csv(dest)
    assert again.rows == report.rows


def test_csv_round_trip_via_file_objects():
    rows = [
        BenchRow("exact", 5, 0.125, 1234.5678901234567, 160, 3),
        BenchRow("natural_fast", 5, 1e-05, None, None, 3),
    ]
    from cityroute.bench import BenchReport

    buf = io.StringIO()
    write_csv(BenchReport(rows=rows, environment="test", seed=3), buf)
    buf.seek(0)
    assert read_csv(buf).rows == rows


def test_timing_median_matches_trial_count(grid12):
    # Heuristic solver rows at desk scale finish in well under 10 ms.
    report = run_timing_suite(grid12, [6], trials=3, seed=11)
    for row in report.rows:
        if row.algorithm in ("nearest_neighbor", "natural_normal", "natural_fast"):
            assert row.seconds < 0.01
