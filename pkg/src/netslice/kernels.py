"""Backend selection for the breadth-first search kernels.

At import time the compiled extension (`netslice._speedups`, built from
Cython) is preferred; if it is missing the pure-Python implementation in
`netslice._kernels_py` is used. `set_backend` exists for benchmarking and
for parity tests between the two.
"""

from netslice import _kernels_py

try:
    from netslice import _speedups

    HAVE_EXTENSION = True
    _impl = _speedups
except ImportError:
    HAVE_EXTENSION = False
    _impl = _kernels_py


def set_backend(name):
    """Switch kernel backend: 'compiled' or 'python'. Returns the old name."""
    global _impl
    old = backend_name()
    if name == "compiled":
        if not HAVE_EXTENSION:
            raise RuntimeError("compiled kernels are not available")
        _impl = _speedups
    elif name == "python":
        _impl = _kernels_py
    else:
        raise ValueError(f"unknown backend {name!r}")
    return old


def backend_name():
    return "compiled" if HAVE_EXTENSION and _impl is not _kernels_py else "python"


def reach_or_component(adj, start, target):
    return _impl.reach_or_component(adj, start, target)


def component_members(adj, start, within=None):
    return _impl.component_members(adj, start, within)


def connected_within(adj, u, v, within=None):
    return _impl.connected_within(adj, u, v, within)
