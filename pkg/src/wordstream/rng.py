"""Splittable counter-based pseudo randomness.

Every random choice in the package flows through Rng so that a build is a
pure function of (seed, labels).  The construction is the usual hash-counter
one: a 32-byte key, a block counter, and SHA-256 as the block function.
Child generators are derived from the parent key and a label, never from the
parent's position, so sibling streams are independent of consumption order.
"""

from __future__ import annotations

import hashlib

from .errors import GenerationError


def _hash(data: bytes) -> bytes:
    return hashlib.sha256(data).digest()


class Rng:
    """Deterministic random stream with labeled splitting."""

    def __init__(self, seed, _key: bytes | None = None):
        if _key is not None:
            self._key = _key
        elif isinstance(seed, bytes):
            self._key = _hash(b"seed-bytes:" + seed)
        elif isinstance(seed, int):
            self._key = _hash(b"seed-int:" + seed.to_bytes((seed.bit_length() + 8) // 8 + 1,
                                                           "little", signed=True))
        else:
            raise TypeError("seed must be int or bytes, got %r" % type(seed))
        self._counter = 0
        self._buf = b""

    def child(self, label: str) -> "Rng":
        """Independent stream derived from this key and a label."""
        return Rng(None, _key=_hash(self._key + b"/" + label.encode("utf-8")))

    def child_index(self, label: str, index: int) -> "Rng":
        return self.child("%s#%d" % (label, index))

    def _refill(self) -> None:
        self._buf += _hash(self._key + b":" + self._counter.to_bytes(8, "little"))
        self._counter += 1

    def bytes(self, k: int) -> bytes:
        while len(self._buf) < k:
            self._refill()
        out, self._buf = self._buf[:k], self._buf[k:]
        return out

    def bits(self, k: int) -> int:
        """Uniform integer in [0, 2^k)."""
        if k <= 0:
            return 0
        nbytes = (k + 7) // 8
        value = int.from_bytes(self.bytes(nbytes), "little")
        return value >> (nbytes * 8 - k)

    def randrange(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] by rejection sampling."""
        if lo > hi:
            raise GenerationError("empty range [%d, %d]" % (lo, hi))
        span = hi - lo + 1
        k = span.bit_length()
        while True:
            v = self.bits(k)
            if v < span:
                return lo + v

    def choice(self, seq):
        if not seq:
            raise GenerationError("choice from empty sequence")
        return seq[self.randrange(0, len(seq) - 1)]

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randrange(0, i)
            items[i], items[j] = items[j], items[i]

    def random(self) -> float:
        """Uniform float in [0, 1), 53 bits of precision."""
        return self.bits(53) / (1 << 53)
