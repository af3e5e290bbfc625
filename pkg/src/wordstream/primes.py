"""Primality testing and uniform prime sampling from an interval."""

from __future__ import annotations

import math

from .errors import GenerationError
from .rng import Rng


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for k in range(2, int(limit**0.5) + 1):
        if flags[k]:
            flags[k * k :: k] = bytearray(len(flags[k * k :: k]))
    return [k for k, f in enumerate(flags) if f]


_SIEVE_PRIMES = _sieve(1024)
_PRIMORIAL = math.prod(_SIEVE_PRIMES)

# Deterministic Miller-Rabin witness set, valid for all n < 3.3 * 10^24.
_SMALL_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_DETERMINISTIC_LIMIT = 3_317_044_064_679_887_385_961_981

# 40 independent rounds push the error below 4^-40 = 2^-80.
_RANDOM_ROUNDS = 40

_TINY_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59)


def _witness(a: int, d: int, r: int, n: int) -> bool:
    """True if a proves n composite."""
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_probable_prime(n: int, rng: Rng | None = None) -> bool:
    """Miller-Rabin test.

    Deterministic below ~3.3e24; above that uses 40 rounds with bases drawn
    from rng (or a fixed child stream when rng is None), for an error
    probability below 2^-80.
    """
    if n < 2:
        return False
    for p in _TINY_PRIMES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    if n < _DETERMINISTIC_LIMIT:
        return not any(_witness(a % n, d, r, n) for a in _SMALL_WITNESSES if a % n)
    bases = rng.child("miller-rabin") if rng is not None else Rng(0xB5).child("miller-rabin")
    for _ in range(_RANDOM_ROUNDS):
        a = bases.randrange(2, n - 2)
        if _witness(a, d, r, n):
            return False
    return True


def sample_prime(lo: int, hi: int, rng: Rng) -> int:
    """Uniformly random prime in [lo, hi].

    Rejection-samples uniform candidates; raises GenerationError if the range
    is empty or no prime is found within a bound that a range containing any
    prime essentially cannot exceed.
    """
    if lo > hi:
        raise GenerationError("empty prime range [%d, %d]" % (lo, hi))
    lo = max(lo, 2)
    if lo > hi:
        raise GenerationError("no primes in [%d, %d]" % (lo, hi))
    if hi - lo < 4096:
        primes = [k for k in range(lo, hi + 1) if is_probable_prime(k, rng)]
        if not primes:
            raise GenerationError("no primes in [%d, %d]" % (lo, hi))
        return rng.choice(primes)
    # Density of primes near hi is ~1/ln(hi); cap attempts far beyond that.
    attempts = 200 * hi.bit_length()
    # One gcd against the primorial of the primes below 1024 rejects most
    # composites far cheaper than a Miller-Rabin round.  Only valid when the
    # whole range sits above those primes.
    prescreen = lo > _SIEVE_PRIMES[-1]
    for _ in range(attempts):
        candidate = rng.randrange(lo, hi)
        if prescreen and math.gcd(candidate, _PRIMORIAL) > 1:
            continue
        if is_probable_prime(candidate, rng):
            return candidate
    raise GenerationError("no prime found in [%d, %d] after %d attempts" % (lo, hi, attempts))
