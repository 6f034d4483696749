"""Statistics over dismantling runs: the (n, m) split-balance scatter with
left/right region probabilities, and mean +- std histogram aggregation of
permanence, walk duration, and node degree across replications.

Split pairs live in the triangle 1 <= n <= m, n + m <= N. The dividing
line between the unbalanced (L) and balanced (R) regions is vertical at
n = cut (default N/4), inclusive on the R side.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from netslice.dendrogram import ComponentRecord, SplitEvent
from netslice.graph import Graph
from netslice.walk import WalkTrace


@dataclass(frozen=True)
class RegionSpec:
    n_total: int
    cut: Optional[float] = None  # defaults to n_total / 4

    def __post_init__(self):
        c = self.resolved_cut()
        if not (1 <= c <= self.n_total / 2):
            raise ValueError(f"cut {c} outside [1, N/2] for N={self.n_total}")

    def resolved_cut(self) -> float:
        return self.n_total / 4 if self.cut is None else self.cut


def classify_region(n: int, m: int, spec: RegionSpec) -> str:
    """'R' (balanced side) iff n >= cut, else 'L'."""
    if not (1 <= n <= m) or n + m > spec.n_total:
        raise ValueError(f"({n}, {m}) outside the split triangle for N={spec.n_total}")
    return "R" if n >= spec.resolved_cut() else "L"


@dataclass
class ScatterSummary:
    points: list[tuple[int, int]]
    n_total: int
    cut: float
    mean_n: float = float("nan")
    mean_m: float = float("nan")
    std_n: float = float("nan")
    std_m: float = float("nan")
    p_l: float = float("nan")
    p_r: float = float("nan")
    empty: bool = False

    def to_json_dict(self) -> dict:
        return {
            "n_total": self.n_total,
            "cut": self.cut,
            "count": len(self.points),
            "mean_n": self.mean_n,
            "mean_m": self.mean_m,
            "std_n": self.std_n,
            "std_m": self.std_m,
            "p_l": self.p_l,
            "p_r": self.p_r,
            "empty": self.empty,
        }


def scatter_summary(events: Iterable[SplitEvent], spec: RegionSpec) -> ScatterSummary:
    """Aggregate (n, m) pairs of split events; includes every hierarchy
    level. p_r is the fraction of events on the balanced side of the cut."""
    points = [(ev.n, ev.m) for ev in events]
    cut = spec.resolved_cut()
    if not points:
        return ScatterSummary(points=[], n_total=spec.n_total, cut=cut, empty=True)
    in_r = sum(1 for n, m in points if classify_region(n, m, spec) == "R")
    arr = np.asarray(points, dtype=float)
    return ScatterSummary(
        points=points,
        n_total=spec.n_total,
        cut=cut,
        mean_n=float(arr[:, 0].mean()),
        mean_m=float(arr[:, 1].mean()),
        std_n=float(arr[:, 0].std()),
        std_m=float(arr[:, 1].std()),
        p_r=in_r / len(points),
        p_l=1.0 - in_r / len(points),
    )


@dataclass
class StatSummary:
    """Per-bin counts averaged across replications."""

    bin_edges: np.ndarray
    mean: np.ndarray
    std: np.ndarray
    replication_count: int
    per_replication: Optional[np.ndarray] = field(default=None, repr=False)

    def to_csv(self) -> str:
        lines = ["bin_low,bin_high,mean,std"]
        for lo, hi, mu, sd in zip(self.bin_edges[:-1], self.bin_edges[1:], self.mean, self.std):
            lines.append(f"{lo:g},{hi:g},{mu:g},{sd:g}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "bin_edges": [float(x) for x in self.bin_edges],
            "mean": [float(x) for x in self.mean],
            "std": [float(x) for x in self.std],
            "replication_count": self.replication_count,
        }


def _aggregate(samples_per_rep: Sequence[Sequence[float]], bin_edges: np.ndarray) -> StatSummary:
    counts = np.array([
        np.histogram(np.asarray(rep, dtype=float), bins=bin_edges)[0]
        for rep in samples_per_rep
    ])
    return StatSummary(
        bin_edges=bin_edges,
        mean=counts.mean(axis=0),
        std=counts.std(axis=0),
        replication_count=len(samples_per_rep),
        per_replication=counts,
    )


def permanence_histogram(
    records_per_rep: Sequence[Sequence[ComponentRecord]],
    bins: Optional[np.ndarray] = None,
) -> StatSummary:
    """Histogram of permanence over split (non-leaf) components. Default
    bins are unit-width up to the pooled 99th percentile plus one overflow
    bin."""
    values = [
        [r.permanence for r in rep if not r.is_leaf and not r.truncated]
        for rep in records_per_rep
    ]
    return permanence_histogram_from_values(values, bins)


def permanence_histogram_from_values(
    values: Sequence[Sequence[int]],
    bins: Optional[np.ndarray] = None,
) -> StatSummary:
    if bins is None:
        pooled = [v for rep in values for v in rep]
        if not pooled:
            raise ValueError("no split components to histogram")
        cap = int(np.percentile(pooled, 99))
        top = max(max(pooled) + 1, cap + 2)
        bins = np.concatenate([np.arange(1, cap + 2, dtype=float), [float(top)]])
    return _aggregate(values, np.asarray(bins, dtype=float))


def duration_histogram(
    traces_per_network: Sequence[Sequence[WalkTrace]],
    bins: Optional[np.ndarray] = None,
    bin_width: int = 25,
) -> StatSummary:
    """Per-network histogram of sequential walk durations, aggregated
    across networks. Default bin width is 25 steps."""
    values = [[t.duration for t in traces] for traces in traces_per_network]
    if bins is None:
        top = max((v for rep in values for v in rep), default=0)
        edges = np.arange(0, top + 2 * bin_width, bin_width, dtype=float)
        bins = edges
    return _aggregate(values, np.asarray(bins, dtype=float))


def degree_histogram(
    graphs: Sequence[Graph],
    bins: Optional[np.ndarray] = None,
) -> StatSummary:
    """Per-graph degree histograms aggregated to mean +- std per degree
    value (unit-width bins by default)."""
    values = [[g.degree(i) for i in range(g.node_count)] for g in graphs]
    return degree_histogram_from_values(values, bins)


def degree_histogram_from_values(
    values: Sequence[Sequence[int]],
    bins: Optional[np.ndarray] = None,
) -> StatSummary:
    if bins is None:
        top = max(max(rep) for rep in values)
        bins = np.arange(0, top + 2, dtype=float)
    return _aggregate(values, np.asarray(bins, dtype=float))
