# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled breadth-first kernels, mirroring netslice._kernels_py.

Operates on the same adjacency structure (a list of neighbor sets) so the
two backends are drop-in interchangeable; see benchmarks/bench_kernels.py
for the speed comparison.
"""


def reach_or_component(list adj, int start, int target):
    cdef set visited = {start}
    cdef list stack = [start]
    cdef int u
    cdef object v
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if <int> v == target:
                return None
            if v not in visited:
                visited.add(v)
                stack.append(v)
    return visited


def component_members(list adj, int start, set within=None):
    cdef set visited = {start}
    cdef list stack = [start]
    cdef int u
    cdef object v
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if v not in visited and (within is None or v in within):
                visited.add(v)
                stack.append(v)
    return visited


def connected_within(list adj, int u, int v, set within=None):
    if u == v:
        return True
    cdef set visited = {u}
    cdef list stack = [u]
    cdef int a
    cdef object b
    while stack:
        a = stack.pop()
        for b in adj[a]:
            if <int> b == v:
                return True
            if b not in visited and (within is None or b in within):
                visited.add(b)
                stack.append(b)
    return False
