"""File formats for campaign outputs.

CSV files may begin with `#`-prefixed comment lines carrying the audit
trail (config hash, master seed); readers here skip them.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Optional

from netslice.dendrogram import SplitEvent
from netslice.walk import WalkTrace


def _audit_lines(audit: Optional[dict]) -> list[str]:
    if not audit:
        return []
    pairs = " ".join(f"{k}={v}" for k, v in sorted(audit.items()))
    return [f"# {pairs}"]


def write_events_csv(path: Path, events: Iterable[SplitEvent], audit: Optional[dict] = None) -> None:
    lines = _audit_lines(audit) + [SplitEvent.CSV_HEADER]
    lines.extend(ev.to_csv_row() for ev in events)
    path.write_text("\n".join(lines) + "\n")


def read_events_csv(path: Path) -> list[SplitEvent]:
    events = []
    for line in path.read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#") or line.startswith("tick,"):
            continue
        events.append(SplitEvent.from_csv_row(line))
    return events


def write_traces_csv(path: Path, traces: Iterable[WalkTrace], audit: Optional[dict] = None) -> None:
    lines = _audit_lines(audit) + [WalkTrace.CSV_HEADER]
    lines.extend(t.to_csv_row() for t in traces)
    path.write_text("\n".join(lines) + "\n")


def read_traces_csv(path: Path) -> list[WalkTrace]:
    traces = []
    for line in path.read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#") or line.startswith("seed,"):
            continue
        seed, start, duration, num_splits = (int(x) for x in line.split(","))
        traces.append(WalkTrace(seed=seed, start_node=start, duration=duration,
                                num_splits=num_splits))
    return traces


def write_json(path: Path, payload: dict) -> None:
    path.write_text(json.dumps(payload, indent=1, sort_keys=True) + "\n")


def read_json(path: Path) -> dict:
    return json.loads(path.read_text())
