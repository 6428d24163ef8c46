"""Deterministic randomness: every stream is a Philox generator keyed by (seed, label).

Philox is counter-based, so independent streams never share state and a fixed
seed reproduces every draw bit for bit regardless of call order.
"""

import hashlib

import numpy as np


def stream(seed: int, label: str) -> np.random.Generator:
    """Return an independent generator for `label` derived from the run seed."""
    digest = hashlib.sha256(f"{seed}:{label}".encode()).digest()
    key = int.from_bytes(digest[:16], "little")
    return np.random.Generator(np.random.Philox(key=key))


def start_vector(seed: int, label: str, n: int) -> np.ndarray:
    """Deterministic eigensolver start block of length n."""
    return stream(seed, label).standard_normal(n)
