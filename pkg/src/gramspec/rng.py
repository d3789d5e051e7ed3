"""Seeded randomness.

All sampling goes through :class:`random.Random` (Mersenne Twister) seeded
with an explicit integer. Sub-streams get their own seed from
:func:`derive_seed`, a BLAKE2b hash of the parent seed and a label path, so
trial ``k`` of a suite does not depend on how many draws trial ``k-1`` made.
"""

from __future__ import annotations

import hashlib
import random

__all__ = ["make_rng", "derive_seed"]

MASK64 = (1 << 64) - 1


def make_rng(seed: int) -> random.Random:
    return random.Random(int(seed) & MASK64)


def derive_seed(seed: int, *labels) -> int:
    h = hashlib.blake2b(digest_size=8)
    h.update(str(int(seed) & MASK64).encode())
    for label in labels:
        h.update(b"\x00")
        h.update(str(label).encode())
    return int.from_bytes(h.digest(), "little")
