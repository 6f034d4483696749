import numpy as np
import pytest

from graphutil import k3, path
from netslice.dendrogram import SplitEvent
from netslice.stats import (
    RegionSpec,
    classify_region,
    degree_histogram,
    duration_histogram,
    permanence_histogram,
    scatter_summary,
)
from netslice.walk import run_parallel, run_sequential
from netslice.graph import Graph


def ev(n, m, total):
    return SplitEvent(tick=1, parent_id=0, parent_size=n + m,
                      n=n, m=m, child_small_id=1, child_big_id=2)


def test_classify_maximally_unbalanced_is_left():
    assert classify_region(1, 5, RegionSpec(n_total=100)) == "L"


def test_classify_balanced_vertex_is_right():
    assert classify_region(50, 50, RegionSpec(n_total=100)) == "R"


def test_classify_boundary_inclusive_right():
    assert classify_region(25, 40, RegionSpec(n_total=100)) == "R"
    assert classify_region(24, 40, RegionSpec(n_total=100)) == "L"


def test_classify_rejects_point_outside_triangle():
    with pytest.raises(ValueError):
        classify_region(60, 50, RegionSpec(n_total=100))
    with pytest.raises(ValueError):
        classify_region(5, 3, RegionSpec(n_total=100))


def test_region_cut_bounds():
    with pytest.raises(ValueError):
        RegionSpec(n_total=100, cut=60)


def test_scatter_all_unbalanced_p_r_zero():
    events = [ev(1, m, 100) for m in (5, 9, 30)]
    s = scatter_summary(events, RegionSpec(n_total=100))
    assert s.p_r == 0.0
    assert s.p_l == 1.0


def test_scatter_hand_built_two_thirds():
    events = [ev(1, 9, 0), ev(3, 3, 0), ev(5, 5, 0)]
    s = scatter_summary(events, RegionSpec(n_total=100, cut=2.5))
    assert s.p_r == pytest.approx(2 / 3)
    assert s.p_l + s.p_r == pytest.approx(1.0)


def test_scatter_means_and_stds():
    events = [ev(1, 3, 0), ev(3, 5, 0)]
    s = scatter_summary(events, RegionSpec(n_total=100))
    assert s.mean_n == pytest.approx(2.0)
    assert s.mean_m == pytest.approx(4.0)
    assert s.std_n == pytest.approx(1.0)


def test_scatter_empty_is_flagged():
    s = scatter_summary([], RegionSpec(n_total=100))
    assert s.empty
    assert np.isnan(s.mean_n)


def test_engine_events_always_inside_triangle():
    from netslice.generators import GenSpec, Model, generate

    g = generate(GenSpec(model=Model.ER, seed=3))
    _, events, _ = run_parallel(g, seed=4)
    s = scatter_summary(events, RegionSpec(n_total=g.node_count))
    assert len(s.points) == len(events)


def test_permanence_histogram_single_edges():
    reps = [run_parallel(path(2), seed=s)[2] for s in range(5)]
    summary = permanence_histogram(reps)
    centers = (summary.bin_edges[:-1] + summary.bin_edges[1:]) / 2
    mass_bin = int(np.argmax(summary.mean))
    lo, hi = summary.bin_edges[mass_bin], summary.bin_edges[mass_bin + 1]
    assert lo <= 1 < hi
    assert summary.std[mass_bin] == 0.0


def test_permanence_histogram_k3_masses():
    reps = [run_parallel(k3(), seed=s)[2] for s in range(10)]
    summary = permanence_histogram(reps, bins=np.arange(1, 5, dtype=float))
    # every K3 run has exactly one P=1 and one P=2 component
    assert np.allclose(summary.mean[:2], [1.0, 1.0])
    assert np.allclose(summary.std[:2], 0.0)


def test_duration_histogram_k3_single_spike():
    reps = [[run_sequential(k3(), seed=s) for s in range(20)] for _ in range(3)]
    summary = duration_histogram(reps, bins=np.arange(0, 6, dtype=float))
    assert summary.mean[3] == 20.0  # all durations are exactly 3
    assert summary.mean.sum() == 20.0


def test_degree_histogram_complete_graph():
    graphs = []
    for _ in range(4):
        g = Graph(4)
        for i in range(4):
            for j in range(i + 1, 4):
                g.add_edge(i, j)
        graphs.append(g)
    summary = degree_histogram(graphs)
    assert summary.mean[3] == 4.0
    assert np.all(summary.std == 0.0)


def test_histogram_mass_conserved_per_replication():
    reps = [[run_sequential(k3(), seed=s + r * 100) for s in range(15)]
            for r in range(4)]
    summary = duration_histogram(reps)
    assert summary.per_replication is not None
    assert np.all(summary.per_replication.sum(axis=1) == 15)


def test_aggregation_permutation_invariant():
    reps = [[run_sequential(path(6), seed=s + r * 50) for s in range(10)]
            for r in range(5)]
    a = duration_histogram(reps, bins=np.arange(0, 20, dtype=float))
    b = duration_histogram(reps[::-1], bins=np.arange(0, 20, dtype=float))
    assert np.allclose(a.mean, b.mean)
    assert np.allclose(a.std, b.std)


def test_stat_summary_csv_shape():
    reps = [[run_sequential(k3(), seed=s) for s in range(5)]]
    csv = duration_histogram(reps).to_csv()
    lines = csv.strip().splitlines()
    assert lines[0] == "bin_low,bin_high,mean,std"
    assert len(lines) >= 2
