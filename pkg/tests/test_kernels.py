import pytest

from graphutil import random_graph
from netslice import kernels


@pytest.mark.skipif(not kernels.HAVE_EXTENSION, reason="extension not built")
def test_backends_agree():
    g = random_graph(60, 0.05, seed=13)
    adj = g.adj
    old = kernels.backend_name()
    try:
        for u in range(0, 60, 6):
            for v in range(0, 60, 7):
                kernels.set_backend("python")
                py = (
                    kernels.reach_or_component(adj, u, v),
                    kernels.component_members(adj, u),
                    kernels.connected_within(adj, u, v),
                )
                kernels.set_backend("compiled")
                cy = (
                    kernels.reach_or_component(adj, u, v),
                    kernels.component_members(adj, u),
                    kernels.connected_within(adj, u, v),
                )
                assert py == cy
    finally:
        kernels.set_backend(old)


def test_reach_or_component_semantics():
    g = random_graph(30, 0.1, seed=5)
    for u in range(0, 30, 5):
        comp = g.component_of(u)
        for v in range(30):
            if v == u:  # the engine never searches for its own start node
                continue
            r = kernels.reach_or_component(g.adj, u, v)
            if v in comp:
                assert r is None
            else:
                assert r == comp


def test_within_restriction():
    adj = [set() for _ in range(5)]
    for a, b in ((0, 1), (1, 2), (2, 3), (3, 4)):
        adj[a].add(b)
        adj[b].add(a)
    assert kernels.component_members(adj, 0, within={0, 1, 2}) == {0, 1, 2}
    assert kernels.connected_within(adj, 0, 4, within={0, 1, 2, 3, 4})
    adj[3].discard(4)
    adj[4].discard(3)
    assert not kernels.connected_within(adj, 0, 4, within={0, 1, 2, 3, 4})
