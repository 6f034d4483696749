"""netslice: dismantle complex networks by edge-deleting random walks and
study the resulting split hierarchy."""

__version__ = "0.1.0"
