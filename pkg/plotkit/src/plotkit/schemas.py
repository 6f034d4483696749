"""Readers for the netslice output files that plotkit renders.

Three formats are understood:

* histogram CSV with header ``bin_low,bin_high,mean,std``
* scatter CSV with header ``n,m`` (comment lines start with ``#``)
* dendrogram layout JSON with top-level ``meta`` and ``nodes`` keys

Every reader raises :class:`SchemaError` with a message naming the missing
or malformed column/key, so a bad input never produces an empty image.
"""

import csv
import json
from dataclasses import dataclass


class SchemaError(ValueError):
    """An input file does not match the documented schema."""


HIST_COLUMNS = ["bin_low", "bin_high", "mean", "std"]
SCATTER_COLUMNS = ["n", "m"]
NODE_KEYS = ["id", "parent", "size", "children", "truncated", "x", "y0", "y1"]


@dataclass
class HistTable:
    """One histogram: per-bin means with a standard-deviation band."""

    bin_low: list[float]
    bin_high: list[float]
    mean: list[float]
    std: list[float]

    def __len__(self) -> int:
        return len(self.mean)


def _data_lines(path):
    with open(path, newline="") as handle:
        for line in handle:
            line = line.strip()
            if line and not line.startswith("#"):
                yield line


def _check_header(path, header, expected):
    got = [c.strip() for c in header.split(",")]
    for col in expected:
        if col not in got:
            raise SchemaError(f"{path}: missing column {col!r} (header was {header!r})")
    extra = [c for c in got if c not in expected]
    if extra:
        raise SchemaError(f"{path}: unexpected column {extra[0]!r}")
    return got


def read_hist_csv(path) -> HistTable:
    """Parse a ``bin_low,bin_high,mean,std`` CSV into a HistTable."""
    lines = list(_data_lines(path))
    if not lines:
        raise SchemaError(f"{path}: empty file, expected header {','.join(HIST_COLUMNS)}")
    cols = _check_header(path, lines[0], HIST_COLUMNS)
    rows = list(csv.DictReader(lines[1:], fieldnames=cols))
    if not rows:
        raise SchemaError(f"{path}: no data rows under column 'mean'")
    table = HistTable([], [], [], [])
    for i, row in enumerate(rows, start=2):
        for col, dest in zip(HIST_COLUMNS, (table.bin_low, table.bin_high, table.mean, table.std)):
            try:
                dest.append(float(row[col]))
            except (TypeError, ValueError):
                raise SchemaError(f"{path}: line {i}: column {col!r} is not a number "
                                  f"({row[col]!r})") from None
    return table


def read_scatter_csv(path) -> list[tuple[int, int]]:
    """Parse an ``n,m`` split-size CSV into a list of (n, m) pairs."""
    lines = list(_data_lines(path))
    if not lines:
        raise SchemaError(f"{path}: empty file, expected header n,m")
    _check_header(path, lines[0], SCATTER_COLUMNS)
    points = []
    for i, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != 2:
            raise SchemaError(f"{path}: line {i}: expected two columns n,m, got {line!r}")
        try:
            n, m = int(parts[0]), int(parts[1])
        except ValueError:
            raise SchemaError(f"{path}: line {i}: column 'n' or 'm' is not an integer "
                              f"({line!r})") from None
        points.append((n, m))
    if not points:
        raise SchemaError(f"{path}: no data rows under column 'n'")
    return points


def read_dendrogram_json(path) -> dict:
    """Parse a dendrogram layout JSON and validate its node records."""
    with open(path) as handle:
        try:
            doc = json.load(handle)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{path}: not valid JSON: {exc}") from None
    for key in ("meta", "nodes"):
        if key not in doc:
            raise SchemaError(f"{path}: missing top-level key {key!r}")
    if not doc["nodes"]:
        raise SchemaError(f"{path}: empty 'nodes' list")
    for node in doc["nodes"]:
        for key in NODE_KEYS:
            if key not in node:
                raise SchemaError(f"{path}: node {node.get('id', '?')} missing key {key!r}")
    if "axis" not in doc["meta"]:
        raise SchemaError(f"{path}: meta missing key 'axis'")
    return doc


def leaf_order(dendro: dict) -> list[int]:
    """Leaf component ids in left-to-right drawing order."""
    leaves = [node for node in dendro["nodes"] if not node["children"]]
    return [node["id"] for node in sorted(leaves, key=lambda n: n["x"])]
