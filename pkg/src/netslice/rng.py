"""Seeded random streams.

The generator is Python's Mersenne Twister (`random.Random`), which is
platform-independent for the primitives used here. Substreams are derived
by hashing the master seed together with string labels (model name,
replication index, walk index), so any single replication or walk can be
re-run in isolation.
"""

import hashlib
import random

MASK64 = (1 << 64) - 1


def derive_seed(master_seed: int, *parts) -> int:
    """Deterministic 64-bit substream seed from a master seed and labels."""
    key = "|".join([str(master_seed & MASK64), *(str(p) for p in parts)])
    digest = hashlib.sha256(key.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def stream(master_seed: int, *parts) -> random.Random:
    """Independent RNG stream for the given substream labels."""
    return random.Random(derive_seed(master_seed, *parts))
