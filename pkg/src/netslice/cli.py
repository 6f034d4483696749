"""Command-line harness.

Subcommands:
  generate    write network edge-list files
  walk        run one dismantling on an edge-list file
  experiment  full campaign (generate + walks + aggregated statistics)
  stats       recompute summaries from stored CSV outputs

Values resolve as: command-line flag > config file (TOML, --config) >
NETSLICE_SEED env var (master seed only) > built-in default.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

try:
    import tomllib
except ImportError:  # Python < 3.11
    import tomli as tomllib

from netslice import io, stats
from netslice.dendrogram import build
from netslice.experiment import (
    ExperimentConfig,
    make_genspec,
    network_seed,
    run_experiment,
)
from netslice.generators import Model, generate
from netslice.graph import Graph
from netslice.rng import derive_seed
from netslice.walk import run_parallel, run_sequential


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", type=Path, help="TOML config file (flags win)")
    p.add_argument("--master-seed", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--out", type=str, default=None, help="output directory")


def _resolve_config(args: argparse.Namespace) -> ExperimentConfig:
    file_cfg = {}
    if getattr(args, "config", None):
        file_cfg = tomllib.loads(args.config.read_text())

    def pick(flag_name, file_key, default):
        v = getattr(args, flag_name, None)
        if v is not None:
            return v
        if file_key in file_cfg:
            return file_cfg[file_key]
        return default

    master = pick("master_seed", "master_seed", None)
    if master is None:
        master = int(os.environ.get("NETSLICE_SEED", "0"))
    return ExperimentConfig(
        model=pick("model", "model", "all"),
        n=pick("n", "n", 100),
        replications=pick("replications", "replications", 50),
        walks_per_network=pick("walks", "walks_per_network", 200),
        mode=pick("mode", "mode", "parallel"),
        master_seed=master,
        region_cut=pick("cut", "region_cut", None),
        output_dir=pick("out", "output_dir", "out"),
        truncate_at_tick=pick("truncate_at_tick", "truncate_at_tick", None),
        workers=pick("workers", "workers", 1),
    )


def cmd_generate(args) -> int:
    config = _resolve_config(args)
    out = Path(config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    manifest = {"config_hash": config.config_hash(), "master_seed": config.master_seed,
                "files": [], "genspecs": []}
    for model in config.models():
        for rep in range(config.replications):
            seed = network_seed(config, model, rep)
            spec = make_genspec(model, config.n, seed)
            g = generate(spec)
            name = f"{model.value}_{seed}.edges"
            (out / name).write_text(g.to_edgelist())
            manifest["files"].append(name)
            manifest["genspecs"].append(
                {k: (v.value if isinstance(v, Model) else v)
                 for k, v in spec.__dict__.items()})
    io.write_json(out / "manifest.json", manifest)
    print(f"wrote {len(manifest['files'])} graph(s) to {out}")
    return 0


def cmd_walk(args) -> int:
    config = _resolve_config(args)
    g = Graph.from_edgelist(Path(args.graph).read_text())
    out = Path(config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    audit = config.audit()
    stem = Path(args.graph).stem
    if config.mode == "parallel":
        seed = derive_seed(config.master_seed, "walk-cmd", stem)
        dendro, events, _records = run_parallel(
            g, seed, truncate_at_tick=config.truncate_at_tick)
        io.write_events_csv(out / f"{stem}_events.csv", events, audit)
        io.write_json(out / f"{stem}_dendrogram_size.json",
                      {**dendro.export_size_axis(), "audit": audit})
        io.write_json(out / f"{stem}_dendrogram_time.json",
                      {**dendro.export_time_axis(), "audit": audit})
        (out / f"{stem}.nwk").write_text(dendro.export_newick("size") + "\n")
    else:
        traces = []
        events = []
        for w in range(config.walks_per_network):
            t = run_sequential(g, derive_seed(config.master_seed, "walk-cmd", stem, w))
            traces.append(t)
            events.extend(t.events)
        io.write_traces_csv(out / f"{stem}_traces.csv", traces, audit)
        io.write_events_csv(out / f"{stem}_events.csv", events, audit)
    print(f"walk outputs written to {out}")
    return 0


def cmd_experiment(args) -> int:
    config = _resolve_config(args)
    code = run_experiment(config)
    print(f"campaign written to {config.output_dir} "
          f"({'with failures' if code else 'all replications ok'})")
    return code


def cmd_stats(args) -> int:
    config = _resolve_config(args)
    out = Path(config.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    kind = args.kind
    paths = [Path(p) for p in args.inputs]
    if kind == "scatter":
        events = [ev for p in paths for ev in io.read_events_csv(p)]
        summary = stats.scatter_summary(
            events, stats.RegionSpec(n_total=config.n, cut=config.region_cut))
        io.write_json(out / "scatter_summary.json", summary.to_json_dict())
    elif kind == "duration":
        per_network = [io.read_traces_csv(p) for p in paths]
        (out / "duration_hist.csv").write_text(
            stats.duration_histogram(per_network).to_csv())
    elif kind == "permanence":
        values = []
        for p in paths:
            d = build(io.read_events_csv(p), config.n)
            values.append([r.permanence for r in d.internal()])
        (out / "permanence_hist.csv").write_text(
            stats.permanence_histogram_from_values(values).to_csv())
    elif kind == "degree":
        graphs = [Graph.from_edgelist(p.read_text()) for p in paths]
        (out / "degree_hist.csv").write_text(
            stats.degree_histogram(graphs).to_csv())
    else:
        raise ValueError(kind)
    print(f"stats ({kind}) written to {out}")
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netslice",
        description="Dismantle networks by edge-deleting random walks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write network edge-list files")
    _add_common(p)
    p.add_argument("--model", choices=["er", "ba", "geo", "all"], default=None)
    p.add_argument("--replications", type=int, default=None)
    p.add_argument("--seed", dest="master_seed", type=int, default=None)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("walk", help="run one dismantling on an edge-list file")
    _add_common(p)
    p.add_argument("graph", help="edge-list file")
    p.add_argument("--mode", choices=["sequential", "parallel"], default=None)
    p.add_argument("--walks", type=int, default=None,
                   help="sequential walks to run (sequential mode)")
    p.add_argument("--truncate-at-tick", type=int, default=None)
    p.set_defaults(func=cmd_walk)

    p = sub.add_parser("experiment", help="full campaign")
    _add_common(p)
    p.add_argument("--model", choices=["er", "ba", "geo", "all"], default=None)
    p.add_argument("--replications", type=int, default=None)
    p.add_argument("--walks", type=int, default=None)
    p.add_argument("--cut", type=float, default=None, help="region boundary (default n/4)")
    p.add_argument("--truncate-at-tick", type=int, default=None)
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("stats", help="recompute summaries from CSV outputs")
    _add_common(p)
    p.add_argument("kind", choices=["scatter", "duration", "permanence", "degree"])
    p.add_argument("inputs", nargs="+", help="input CSV / edge-list files")
    p.add_argument("--cut", type=float, default=None)
    p.set_defaults(func=cmd_stats)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
