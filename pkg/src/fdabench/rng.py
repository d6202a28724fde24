"""Deterministic RNG derivation.

Every stochastic decision in the package draws from a Generator derived
here, so a run is a pure function of (config, seed).  String keys are
hashed with sha256 (never the salted builtin ``hash``) to stay stable
across interpreter runs.
"""

from __future__ import annotations

import hashlib

import numpy as np


def _key_words(*keys: int | str) -> list[int]:
    words: list[int] = []
    for key in keys:
        if isinstance(key, str):
            digest = hashlib.sha256(key.encode("utf-8")).digest()
            words.append(int.from_bytes(digest[:8], "little"))
        else:
            words.append(int(key) & 0xFFFF_FFFF_FFFF_FFFF)
    return words


def derive_rng(*keys: int | str) -> np.random.Generator:
    """Generator seeded by an arbitrary mix of ints and strings."""
    return np.random.default_rng(np.random.SeedSequence(_key_words(*keys)))


def derive_seed(*keys: int | str) -> int:
    """A u64 derived from the key mix; feed it to another derive_rng."""
    return int(np.random.SeedSequence(_key_words(*keys)).generate_state(1, np.uint64)[0])
