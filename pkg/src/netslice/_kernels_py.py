"""Pure-Python breadth-first kernels for the dismantling hot loop.

These are the fallback implementations; `netslice._speedups` provides the
same three functions compiled with Cython. The walk engine calls whichever
backend `netslice.kernels` selected at import time.
"""


def reach_or_component(adj, start, target):
    """Search from `start`; stop as soon as `target` is reached.

    Returns None when `target` is reachable (the common case right after an
    edge removal that did not disconnect anything), otherwise the full set
    of nodes reachable from `start`, i.e. its connected component.
    """
    visited = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v == target:
                return None
            if v not in visited:
                visited.add(v)
                stack.append(v)
    return visited


def component_members(adj, start, within=None):
    """Set of nodes reachable from `start`, optionally restricted to `within`."""
    visited = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in visited and (within is None or v in within):
                visited.add(v)
                stack.append(v)
    return visited


def connected_within(adj, u, v, within=None):
    """True iff a path from u to v exists, optionally restricted to `within`."""
    if u == v:
        return True
    visited = {u}
    stack = [u]
    while stack:
        a = stack.pop()
        for b in adj[a]:
            if b == v:
                return True
            if b not in visited and (within is None or b in within):
                visited.add(b)
                stack.append(b)
    return False
