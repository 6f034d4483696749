"""Binary split hierarchy of a dismantled network.

Every component that ever existed during a run is a ComponentRecord; a
record either has exactly two children (it split) or none (leaf). The
tree exports on two axes: the size axis (junction height = component
size) and the time axis (branch extent = component permanence), plus a
Newick serialization.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional


class DendrogramError(ValueError):
    """Inconsistent split history."""


@dataclass
class SplitEvent:
    """One two-way break: parent of `parent_size` into sizes n <= m."""

    tick: int
    parent_id: int
    parent_size: int
    n: int
    m: int
    child_small_id: int
    child_big_id: int

    CSV_HEADER = "tick,parent_id,parent_size,n,m,child_small_id,child_big_id"

    def __post_init__(self):
        if not (1 <= self.n <= self.m):
            raise ValueError(f"split sizes must satisfy 1 <= n <= m, got ({self.n}, {self.m})")
        if self.n + self.m != self.parent_size:
            raise ValueError(f"split sizes {self.n}+{self.m} != parent size {self.parent_size}")

    def to_csv_row(self) -> str:
        return (f"{self.tick},{self.parent_id},{self.parent_size},"
                f"{self.n},{self.m},{self.child_small_id},{self.child_big_id}")

    @classmethod
    def from_csv_row(cls, row: str) -> "SplitEvent":
        return cls(*(int(x) for x in row.strip().split(",")))


@dataclass
class ComponentRecord:
    id: int
    parent_id: Optional[int]
    size: int
    birth_tick: int
    death_tick: Optional[int] = None
    children: tuple[int, ...] = ()
    members: Optional[frozenset[int]] = None
    truncated: bool = False

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def permanence(self) -> Optional[int]:
        if self.death_tick is None:
            return None
        return self.death_tick - self.birth_tick


def permanence_of(record: ComponentRecord) -> int:
    """Steps the component's agent took between assignment and the split.

    Leaves never split, so their permanence is undefined.
    """
    if record.is_leaf or record.death_tick is None:
        raise ValueError(f"component {record.id} never split; permanence undefined")
    return record.death_tick - record.birth_tick


@dataclass
class Dendrogram:
    root_id: int
    records: dict[int, ComponentRecord]
    meta: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.records[self.root_id].size

    def leaves(self) -> list[ComponentRecord]:
        return [r for r in self.records.values() if r.is_leaf]

    def internal(self) -> list[ComponentRecord]:
        return [r for r in self.records.values() if not r.is_leaf]

    def final_tick(self) -> int:
        return self.meta.get(
            "final_tick",
            max((r.death_tick for r in self.records.values() if r.death_tick is not None),
                default=0),
        )

    def validate(self) -> None:
        root = self.records[self.root_id]
        if root.birth_tick != 0:
            raise DendrogramError("root birth tick must be 0")
        leaf_total = 0
        for r in self.records.values():
            if len(r.children) not in (0, 2):
                raise DendrogramError(f"node {r.id} has {len(r.children)} children")
            if r.children:
                a, b = (self.records[c] for c in r.children)
                if a.size + b.size != r.size:
                    raise DendrogramError(f"node {r.id}: child sizes do not sum")
                if r.death_tick is None:
                    raise DendrogramError(f"internal node {r.id} has no death tick")
                if a.birth_tick != r.death_tick or b.birth_tick != r.death_tick:
                    raise DendrogramError(f"node {r.id}: child birth != parent death")
            else:
                leaf_total += r.size
        if leaf_total != root.size:
            raise DendrogramError("leaf sizes do not sum to N")

    # -- layout -----------------------------------------------------------

    def _ordered_children(self, rec: ComponentRecord) -> list[ComponentRecord]:
        # Earlier-split child on the left; leaves go right; ties by id.
        def key(c: ComponentRecord):
            return (c.death_tick if c.death_tick is not None else float("inf"), c.id)

        return sorted((self.records[c] for c in rec.children), key=key)

    def _layout(self) -> dict[int, float]:
        """x positions: leaves at in-order indices, internals centered."""
        xs: dict[int, float] = {}
        next_leaf = 0

        def visit(rec: ComponentRecord) -> float:
            nonlocal next_leaf
            if rec.is_leaf:
                xs[rec.id] = float(next_leaf)
                next_leaf += 1
            else:
                child_x = [visit(c) for c in self._ordered_children(rec)]
                xs[rec.id] = sum(child_x) / len(child_x)
            return xs[rec.id]

        visit(self.records[self.root_id])
        return xs

    def _export(self, axis: str) -> dict:
        xs = self._layout()
        final = self.final_tick()
        nodes = []
        for rid in sorted(self.records):
            r = self.records[rid]
            if axis == "size":
                y0 = self.records[r.parent_id].size if r.parent_id is not None else r.size
                y1 = r.size
            else:
                y0 = r.birth_tick
                y1 = r.death_tick if r.death_tick is not None else final
            nodes.append({
                "id": r.id,
                "parent": r.parent_id,
                "size": r.size,
                "birth": r.birth_tick,
                "death": r.death_tick,
                "children": list(r.children),
                "truncated": r.truncated,
                "x": xs[r.id],
                "y0": y0,
                "y1": y1,
            })
        meta = dict(self.meta)
        meta.setdefault("n", self.n)
        meta["axis"] = axis
        meta["final_tick"] = final
        return {"meta": meta, "nodes": nodes}

    def export_size_axis(self) -> dict:
        """Layout with the vertical axis = component size."""
        return self._export("size")

    def export_time_axis(self) -> dict:
        """Layout with the vertical axis = ticks; branch extent = permanence."""
        return self._export("time")

    def to_json(self, axis: str = "size") -> str:
        return json.dumps(self._export(axis), indent=1, sort_keys=True)

    # -- Newick -----------------------------------------------------------

    def _branch_length(self, r: ComponentRecord, axis: str) -> float:
        if axis == "size":
            parent_size = self.records[r.parent_id].size if r.parent_id is not None else r.size
            return float(parent_size - r.size)
        end = r.death_tick if r.death_tick is not None else self.final_tick()
        return float(end - r.birth_tick)

    def export_newick(self, axis: str = "size") -> str:
        """Newick string; node labels are `c<id>x<size>` (and a trailing `T`
        marker for truncated leaves), branch lengths from the chosen axis."""

        def fmt(rec: ComponentRecord) -> str:
            label = f"c{rec.id}x{rec.size}" + ("T" if rec.truncated else "")
            length = self._branch_length(rec, axis)
            length_s = f"{length:g}"
            if rec.is_leaf:
                return f"{label}:{length_s}"
            kids = ",".join(fmt(c) for c in self._ordered_children(rec))
            return f"({kids}){label}:{length_s}"

        return fmt(self.records[self.root_id]) + ";"


@dataclass
class NewickNode:
    label: str
    length: float
    children: list["NewickNode"] = field(default_factory=list)


def parse_newick(text: str) -> NewickNode:
    """Parse the subset of Newick emitted by `export_newick`."""
    text = text.strip()
    if not text.endswith(";"):
        raise ValueError("Newick string must end with ';'")
    pos = 0
    s = text[:-1]

    def node() -> NewickNode:
        nonlocal pos
        children = []
        if pos < len(s) and s[pos] == "(":
            pos += 1
            children.append(node())
            while s[pos] == ",":
                pos += 1
                children.append(node())
            if s[pos] != ")":
                raise ValueError(f"expected ')' at position {pos}")
            pos += 1
        start = pos
        while pos < len(s) and s[pos] not in ":,()":
            pos += 1
        label = s[start:pos]
        length = 0.0
        if pos < len(s) and s[pos] == ":":
            pos += 1
            start = pos
            while pos < len(s) and s[pos] not in ",()":
                pos += 1
            length = float(s[start:pos])
        return NewickNode(label, length, children)

    root = node()
    if pos != len(s):
        raise ValueError(f"trailing characters at position {pos}")
    return root


def build(events: list[SplitEvent], n: int) -> Dendrogram:
    """Reconstruct the hierarchy from a split-event history rooted at one
    component of size `n`. Member sets are not recoverable from events."""
    if not events:
        root = ComponentRecord(id=0, parent_id=None, size=n, birth_tick=0)
        return Dendrogram(root_id=0, records={0: root})
    root_id = events[0].parent_id
    records = {root_id: ComponentRecord(id=root_id, parent_id=None, size=n, birth_tick=0)}
    for ev in events:
        parent = records.get(ev.parent_id)
        if parent is None:
            raise DendrogramError(f"event at tick {ev.tick}: unknown parent {ev.parent_id}")
        if parent.children:
            raise DendrogramError(f"parent {parent.id} split twice")
        if parent.size != ev.parent_size or ev.n + ev.m != parent.size:
            raise DendrogramError(
                f"event at tick {ev.tick}: sizes {ev.n}+{ev.m} inconsistent "
                f"with parent size {parent.size}"
            )
        parent.death_tick = ev.tick
        parent.children = (ev.child_small_id, ev.child_big_id)
        for cid, size in ((ev.child_small_id, ev.n), (ev.child_big_id, ev.m)):
            if cid in records:
                raise DendrogramError(f"duplicate component id {cid}")
            records[cid] = ComponentRecord(
                id=cid, parent_id=parent.id, size=size, birth_tick=ev.tick
            )
    d = Dendrogram(root_id=root_id, records=records)
    d.validate()
    return d
