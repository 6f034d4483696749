"""Mutable undirected simple graph with connectivity queries.

Nodes are dense integers 0..N-1. Adjacency is a list of neighbor sets;
anything that needs a deterministic order (uniform sampling, file export)
sorts the set first, so results are reproducible across platforms.
"""

from __future__ import annotations

from typing import Iterable, Optional, Set

from netslice import kernels


class GenerationError(RuntimeError):
    """A generator produced a structure too degenerate to walk on."""


class Graph:
    __slots__ = ("node_count", "adj", "edge_count", "layout")

    def __init__(self, node_count: int):
        if node_count < 1:
            raise ValueError("node_count must be positive")
        self.node_count = node_count
        self.adj: list[set[int]] = [set() for _ in range(node_count)]
        self.edge_count = 0
        # Optional {node: (x, y)} positions, set by the geometric generator.
        self.layout: Optional[dict[int, tuple[float, float]]] = None

    def _check_node(self, i: int) -> None:
        if not (0 <= i < self.node_count):
            raise ValueError(f"node id {i} out of range 0..{self.node_count - 1}")

    def degree(self, i: int) -> int:
        self._check_node(i)
        return len(self.adj[i])

    def has_edge(self, u: int, v: int) -> bool:
        self._check_node(u)
        self._check_node(v)
        return v in self.adj[u]

    def add_edge(self, u: int, v: int) -> None:
        self._check_node(u)
        self._check_node(v)
        if u == v:
            raise ValueError("self-loops are not allowed")
        if v not in self.adj[u]:
            self.adj[u].add(v)
            self.adj[v].add(u)
            self.edge_count += 1

    def remove_edge(self, u: int, v: int) -> None:
        self._check_node(u)
        self._check_node(v)
        if v not in self.adj[u]:
            # A missing edge here means the walk engine lost track of state.
            raise RuntimeError(f"edge ({u}, {v}) does not exist")
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        self.edge_count -= 1

    def neighbors(self, i: int) -> list[int]:
        """Sorted neighbor list (the sampling order contract)."""
        self._check_node(i)
        return sorted(self.adj[i])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as sorted (u, v) pairs with u < v."""
        out = []
        for u in range(self.node_count):
            for v in self.adj[u]:
                if u < v:
                    out.append((u, v))
        out.sort()
        return out

    def connected(self, u: int, v: int, within: Optional[Set[int]] = None) -> bool:
        self._check_node(u)
        self._check_node(v)
        return kernels.connected_within(self.adj, u, v, within)

    def component_of(self, u: int, within: Optional[Set[int]] = None) -> set[int]:
        self._check_node(u)
        return kernels.component_members(self.adj, u, set(within) if within is not None else None)

    def components(self) -> list[set[int]]:
        """All connected components, ordered by smallest contained node id."""
        seen: set[int] = set()
        out = []
        for u in range(self.node_count):
            if u not in seen:
                comp = self.component_of(u)
                seen |= comp
                out.append(comp)
        return out

    def largest_component(self) -> set[int]:
        """Maximum-cardinality component; ties broken by smallest node id."""
        if self.node_count == 0:
            raise ValueError("empty graph has no components")
        best: Optional[set[int]] = None
        for comp in self.components():
            if best is None or len(comp) > len(best):
                best = comp
        assert best is not None
        return best

    def mean_degree(self) -> float:
        return 2.0 * self.edge_count / self.node_count

    def check_invariants(self) -> None:
        total = 0
        for u in range(self.node_count):
            if u in self.adj[u]:
                raise AssertionError(f"self-loop at {u}")
            for v in self.adj[u]:
                if u not in self.adj[v]:
                    raise AssertionError(f"asymmetric edge ({u}, {v})")
            total += len(self.adj[u])
        if total != 2 * self.edge_count:
            raise AssertionError("edge_count out of sync with adjacency")

    def copy(self) -> "Graph":
        g = Graph(self.node_count)
        g.adj = [set(s) for s in self.adj]
        g.edge_count = self.edge_count
        g.layout = dict(self.layout) if self.layout else None
        return g

    # Edge-list text format: `# nodes=<N>` header, one `u v` line per edge
    # with u < v, LF line endings. GEO graphs append a `# layout` section.
    def to_edgelist(self) -> str:
        lines = [f"# nodes={self.node_count}"]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        if self.layout is not None:
            lines.append("# layout")
            lines.extend(
                f"{i} {x!r} {y!r}" for i, (x, y) in sorted(self.layout.items())
            )
        return "\n".join(lines) + "\n"

    @classmethod
    def from_edgelist(cls, text: str) -> "Graph":
        lines = text.splitlines()
        if not lines or not lines[0].startswith("# nodes="):
            raise ValueError("edge-list line 1: missing '# nodes=<N>' header")
        g = cls(int(lines[0].split("=", 1)[1]))
        in_layout = False
        for lineno, line in enumerate(lines[1:], start=2):
            line = line.strip()
            if not line:
                continue
            if line == "# layout":
                in_layout = True
                g.layout = {}
                continue
            parts = line.split()
            try:
                if in_layout:
                    g.layout[int(parts[0])] = (float(parts[1]), float(parts[2]))
                else:
                    u, v = int(parts[0]), int(parts[1])
                    g.add_edge(u, v)
            except (IndexError, ValueError) as exc:
                raise ValueError(f"edge-list line {lineno}: {line!r}") from exc
        return g


def induced_subgraph(g: Graph, members: Iterable[int]) -> Graph:
    """Subgraph on `members` with node ids re-densified to 0..len-1 in
    ascending original-id order."""
    order = sorted(members)
    remap = {old: new for new, old in enumerate(order)}
    sub = Graph(len(order))
    for old_u in order:
        for old_v in g.adj[old_u]:
            if old_v in remap and old_u < old_v:
                sub.add_edge(remap[old_u], remap[old_v])
    if g.layout is not None:
        sub.layout = {remap[i]: g.layout[i] for i in order if i in g.layout}
    return sub
