"""Edge-deleting uniform random walk engine.

Each agent step traverses one edge, deletes it, and may disconnect the
agent's component into exactly two parts. SEQUENTIAL mode drives a single
agent that follows the component it moved into; PARALLEL mode assigns a
fresh agent to every child of size >= 2 and advances all agents on a
synchronous tick clock (ascending component id, which pins RNG
consumption; components are vertex-disjoint so the order cannot change
outcomes otherwise).

After a split every affected agent is placed on a node drawn uniformly
from its component; after a non-split move the agent simply stays on the
destination node.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from netslice import kernels
from netslice.dendrogram import ComponentRecord, Dendrogram, SplitEvent, permanence_of
from netslice.graph import Graph

__all__ = [
    "WalkMode", "WalkState", "WalkTrace", "run_sequential", "run_parallel",
    "permanence_of",
]


class WalkMode(str, Enum):
    SEQUENTIAL = "sequential"
    PARALLEL = "parallel"


@dataclass
class WalkTrace:
    """Summary of one sequential walk."""

    seed: int
    start_node: int
    duration: int
    num_splits: int = 0
    events: list[SplitEvent] = field(default_factory=list)
    chosen_ids: list[int] = field(default_factory=list)  # branch followed at each split

    CSV_HEADER = "seed,start_node,duration,num_splits"

    def to_csv_row(self) -> str:
        return f"{self.seed},{self.start_node},{self.duration},{self.num_splits}"


class WalkState:
    """Mutable state of one dismantling run (one replication worker)."""

    def __init__(self, graph: Graph, seed: int):
        if graph.node_count < 2 or graph.edge_count < 1:
            raise ValueError("walk needs a graph with >= 2 nodes and >= 1 edge")
        if len(graph.component_of(0)) != graph.node_count:
            raise ValueError("walk needs a connected graph")
        self.graph = graph.copy()
        self.rng = random.Random(seed)
        self.seed = seed
        self.tick = 0
        self.total_steps = 0
        self.next_id = 1
        self.events: list[SplitEvent] = []
        root = ComponentRecord(
            id=0, parent_id=None, size=graph.node_count, birth_tick=0,
            members=frozenset(range(graph.node_count)),
        )
        self.records: dict[int, ComponentRecord] = {0: root}
        # component id -> agent position, for components of size >= 2
        self.agents: dict[int, int] = {}
        self._pending_beta: Optional[int] = None

    def _uniform_member(self, members) -> int:
        ordered = sorted(members)
        return ordered[self.rng.randrange(len(ordered))]

    def place_agent(self, comp_id: int) -> None:
        rec = self.records[comp_id]
        self.agents[comp_id] = self._uniform_member(rec.members)

    def step_agent(self, comp_id: int) -> Optional[SplitEvent]:
        """Move the component's agent across one uniformly chosen edge,
        delete it, and report the split if the component broke in two."""
        rec = self.records[comp_id]
        if rec.size < 2:
            raise RuntimeError(f"agent stepped in size-1 component {comp_id}")
        alpha = self.agents[comp_id]
        nbrs = sorted(self.graph.adj[alpha])
        beta = nbrs[self.rng.randrange(len(nbrs))]
        self.graph.remove_edge(alpha, beta)
        self.total_steps += 1
        self.agents[comp_id] = beta

        comp_beta = kernels.reach_or_component(self.graph.adj, beta, alpha)
        if comp_beta is None:
            return None

        comp_alpha = rec.members - comp_beta
        # Deleting one edge yields exactly two parts.
        assert comp_beta <= rec.members and comp_alpha, "split escaped its component"
        small, big = sorted((comp_alpha, comp_beta), key=lambda s: (len(s), min(s)))
        small_id, big_id = self.next_id, self.next_id + 1
        self.next_id += 2
        event = SplitEvent(
            tick=self.tick, parent_id=comp_id, parent_size=rec.size,
            n=len(small), m=len(big),
            child_small_id=small_id, child_big_id=big_id,
        )
        rec.death_tick = self.tick
        rec.children = (small_id, big_id)
        for cid, members in ((small_id, small), (big_id, big)):
            self.records[cid] = ComponentRecord(
                id=cid, parent_id=comp_id, size=len(members),
                birth_tick=self.tick, members=frozenset(members),
            )
        del self.agents[comp_id]
        self._pending_beta = beta
        self.events.append(event)
        return event

    def resolve_split(self, event: SplitEvent, mode: WalkMode) -> Optional[int]:
        """Assign agents to the children of a fresh split.

        PARALLEL: every child of size >= 2 receives an agent (small child's
        draw first); the new agents first act on the next tick. SEQUENTIAL:
        the single agent continues only in the child it moved into, on a
        uniformly drawn node; returns that child's id.
        """
        beta = self._pending_beta
        self._pending_beta = None
        small = self.records[event.child_small_id]
        big = self.records[event.child_big_id]
        if mode is WalkMode.PARALLEL:
            for child in (small, big):
                if child.size >= 2:
                    self.place_agent(child.id)
            return None
        chosen = small if beta in small.members else big
        if chosen.size >= 2:
            self.place_agent(chosen.id)
        return chosen.id

    def to_dendrogram(self, meta: Optional[dict] = None) -> Dendrogram:
        d = Dendrogram(root_id=0, records=self.records, meta=dict(meta or {}))
        d.meta.setdefault("n", self.records[0].size)
        d.meta.setdefault("seed", self.seed)
        d.meta["final_tick"] = self.tick
        d.meta["total_steps"] = self.total_steps
        return d


def run_sequential(g: Graph, seed: int) -> WalkTrace:
    """Single-agent walk until the agent's component is a lone node.

    Duration is the total number of edge traversals.
    """
    state = WalkState(g, seed)
    start = state._uniform_member(range(g.node_count))
    current = state.records[0]
    state.agents[0] = start
    trace = WalkTrace(seed=seed, start_node=start, duration=0)
    while current.size >= 2:
        state.tick += 1
        event = state.step_agent(current.id)
        if event is not None:
            chosen = state.resolve_split(event, WalkMode.SEQUENTIAL)
            trace.events.append(event)
            trace.chosen_ids.append(chosen)
            current = state.records[chosen]
    trace.duration = state.total_steps
    trace.num_splits = len(trace.events)
    return trace


def run_parallel(
    g: Graph, seed: int, truncate_at_tick: Optional[int] = None,
    meta: Optional[dict] = None,
) -> tuple[Dendrogram, list[SplitEvent], list[ComponentRecord]]:
    """Agent-per-component dismantling until every component is a single
    node (or the optional tick budget runs out, leaving truncated leaves).

    Returns the dendrogram, the split events in emission order, and all
    component records.
    """
    state = WalkState(g, seed)
    state.place_agent(0)
    while state.agents:
        if truncate_at_tick is not None and state.tick >= truncate_at_tick:
            for cid in list(state.agents):
                state.records[cid].truncated = True
            state.agents.clear()
            break
        state.tick += 1
        for comp_id in sorted(state.agents):
            event = state.step_agent(comp_id)
            if event is not None:
                state.resolve_split(event, WalkMode.PARALLEL)
    dendro = state.to_dendrogram(meta)
    if truncate_at_tick is not None:
        dendro.meta["truncated_at"] = truncate_at_tick
    return dendro, state.events, list(state.records.values())
