"""Campaign harness: generate networks, run walks with derived seed
substreams, aggregate statistics, and persist everything with an audit
trail (config hash + master seed in every output).

Seed derivation is `derive_seed(master_seed, model, purpose, indices...)`,
so any single network or walk can be re-executed in isolation. Replication
results merge in replication order, which makes campaign outputs a pure
function of the config, independent of worker count.
"""

from __future__ import annotations

import hashlib
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from netslice import io, stats
from netslice.dendrogram import SplitEvent
from netslice.generators import GenSpec, Model, generate
from netslice.rng import derive_seed
from netslice.walk import WalkTrace, run_parallel, run_sequential

ALL_MODELS = [Model.ER, Model.BA, Model.GEO]


@dataclass(frozen=True)
class ExperimentConfig:
    model: str = "all"                 # er | ba | geo | all
    n: int = 100
    replications: int = 50             # networks per model
    walks_per_network: int = 200       # sequential walks per network
    mode: str = "parallel"             # used by the single-graph walk command
    master_seed: int = 0
    region_cut: Optional[float] = None # defaults to n/4
    output_dir: str = "out"
    truncate_at_tick: Optional[int] = None
    workers: int = 1

    def __post_init__(self):
        if self.replications < 1 or self.walks_per_network < 1:
            raise ValueError("counts must be >= 1")
        if self.model not in ("all", "er", "ba", "geo"):
            raise ValueError(f"unknown model {self.model!r}")
        if self.mode not in ("sequential", "parallel"):
            raise ValueError(f"unknown mode {self.mode!r}")

    def models(self) -> list[Model]:
        return ALL_MODELS if self.model == "all" else [Model(self.model)]

    def result_fields(self) -> dict:
        """Config fields that determine campaign results: excludes plumbing
        (output_dir, workers) so outputs are byte-identical across worker
        counts and directories."""
        d = asdict(self)
        d.pop("output_dir")
        d.pop("workers")
        return d

    def config_hash(self) -> str:
        blob = json.dumps(self.result_fields(), sort_keys=True)
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def audit(self) -> dict:
        return {"config": self.config_hash(), "master_seed": self.master_seed}


def make_genspec(model: Model, n: int, seed: int) -> GenSpec:
    if model is Model.GEO:
        rows = int(round(n ** 0.5))
        if rows * rows != n:
            raise ValueError(f"GEO needs a square n, got {n}")
        return GenSpec(model=model, n_target=n, geo_rows=rows, geo_cols=rows, seed=seed)
    return GenSpec(model=model, n_target=n, seed=seed)


def network_seed(config: ExperimentConfig, model: Model, rep: int) -> int:
    return derive_seed(config.master_seed, model.value, "gen", rep)


def walk_seed(config: ExperimentConfig, model: Model, rep: int, walk: int) -> int:
    return derive_seed(config.master_seed, model.value, "walk", rep, walk)


def parallel_seed(config: ExperimentConfig, model: Model, rep: int) -> int:
    return derive_seed(config.master_seed, model.value, "par", rep)


def _replication(payload: tuple) -> dict:
    """One replication: generate a network, one parallel dismantling, and
    walks_per_network sequential walks. Runs inside a worker process."""
    config, model, rep = payload
    try:
        g = generate(make_genspec(model, config.n, network_seed(config, model, rep)))
        dendro, events, records = run_parallel(
            g, parallel_seed(config, model, rep),
            truncate_at_tick=config.truncate_at_tick,
            meta={"model": model.value},
        )
        durations = []
        traces = []
        for w in range(config.walks_per_network):
            t = run_sequential(g, walk_seed(config, model, rep, w))
            durations.append(t.duration)
            traces.append((t.seed, t.start_node, t.duration, t.num_splits))
        result = {
            "rep": rep,
            "n": g.node_count,
            "edges": g.edge_count,
            "degrees": [g.degree(i) for i in range(g.node_count)],
            "events": [(e.tick, e.parent_id, e.parent_size, e.n, e.m,
                        e.child_small_id, e.child_big_id) for e in events],
            "permanences": [r.permanence for r in records
                            if not r.is_leaf and not r.truncated],
            "durations": durations,
            "traces": traces,
            "edgelist": g.to_edgelist(),
        }
        if rep == 0:
            result["dendro_size"] = dendro.export_size_axis()
            result["dendro_time"] = dendro.export_time_axis()
            result["newick_size"] = dendro.export_newick("size")
            result["newick_time"] = dendro.export_newick("time")
        return result
    except Exception as exc:  # recorded in the failure manifest
        return {"rep": rep, "error": f"{type(exc).__name__}: {exc}"}


def _run_model(config: ExperimentConfig, model: Model, executor) -> tuple[dict, list[dict]]:
    payloads = [(config, model, rep) for rep in range(config.replications)]
    if executor is None:
        results = [_replication(p) for p in payloads]
    else:
        results = list(executor.map(_replication, payloads))
    failures = [r for r in results if "error" in r]
    ok = [r for r in results if "error" not in r]

    out = Path(config.output_dir) / model.value
    (out / "graphs").mkdir(parents=True, exist_ok=True)
    (out / "events").mkdir(exist_ok=True)
    (out / "traces").mkdir(exist_ok=True)
    audit = config.audit()

    all_events: list[SplitEvent] = []
    records_per_rep = []
    traces_per_rep = []
    for r in ok:
        rep = r["rep"]
        (out / "graphs" / f"{model.value}_r{rep}.edges").write_text(r["edgelist"])
        events = [SplitEvent(*tup) for tup in r["events"]]
        io.write_events_csv(out / "events" / f"r{rep}.csv", events, audit)
        traces = [WalkTrace(seed=s, start_node=sn, duration=d, num_splits=k)
                  for s, sn, d, k in r["traces"]]
        io.write_traces_csv(out / "traces" / f"r{rep}.csv", traces, audit)
        all_events.extend(events)
        traces_per_rep.append(traces)
        records_per_rep.append(r["permanences"])
        if rep == 0:
            io.write_json(out / "dendrogram_size.json", {**r["dendro_size"], "audit": audit})
            io.write_json(out / "dendrogram_time.json", {**r["dendro_time"], "audit": audit})
            (out / "dendrogram_size.nwk").write_text(r["newick_size"] + "\n")
            (out / "dendrogram_time.nwk").write_text(r["newick_time"] + "\n")

    summary: dict = {"failures": [f["error"] for f in failures],
                     "replications_ok": len(ok)}
    if ok:
        region = stats.RegionSpec(n_total=config.n, cut=config.region_cut)
        scat = stats.scatter_summary(all_events, region)
        (out / "scatter_points.csv").write_text(
            "\n".join(["# " + " ".join(f"{k}={v}" for k, v in sorted(audit.items())),
                       "n,m", *(f"{n},{m}" for n, m in scat.points)]) + "\n")

        dur = stats.duration_histogram(traces_per_rep)
        (out / "duration_hist.csv").write_text(dur.to_csv())

        perm = stats.permanence_histogram_from_values(records_per_rep)
        (out / "permanence_hist.csv").write_text(perm.to_csv())

        deg = stats.degree_histogram_from_values([r["degrees"] for r in ok])
        (out / "degree_hist.csv").write_text(deg.to_csv())

        all_durations = [t.duration for rep in traces_per_rep for t in rep]
        all_perms = [p for rep in records_per_rep for p in rep]
        summary.update({
            "scatter": scat.to_json_dict(),
            "p_l": scat.p_l,
            "p_r": scat.p_r,
            "region_cut": scat.cut,
            "duration_mean": float(np.mean(all_durations)),
            "duration_std": float(np.std(all_durations)),
            "permanence_mean": float(np.mean(all_perms)),
            "permanence_std": float(np.std(all_perms)),
            "mean_degree": float(np.mean([2 * r["edges"] / r["n"] for r in ok])),
        })
    return summary, failures


def run_experiment(config: ExperimentConfig) -> int:
    """Full campaign. Returns the process exit code (0 iff no replication
    failed)."""
    out = Path(config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    executor = None
    if config.workers > 1:
        executor = ProcessPoolExecutor(max_workers=config.workers)
    try:
        summaries = {}
        any_failures = False
        for model in config.models():
            summary, failures = _run_model(config, model, executor)
            summaries[model.value] = summary
            any_failures = any_failures or bool(failures)
    finally:
        if executor is not None:
            executor.shutdown()
    payload = {
        "config": config.result_fields(),
        "config_hash": config.config_hash(),
        "master_seed": config.master_seed,
        "models": summaries,
    }
    io.write_json(out / "summary.json", payload)
    return 1 if any_failures else 0
