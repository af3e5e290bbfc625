"""Primality testing and prime sampling."""

import pytest
import sympy

from wordstream.errors import GenerationError
from wordstream.primes import is_probable_prime, sample_prime
from wordstream.rng import Rng


def test_small_values_exhaustive():
    for n in range(-5, 2000):
        assert is_probable_prime(n) == sympy.isprime(n), n


def test_carmichael_numbers_rejected():
    # Composites that fool plain Fermat tests.
    for n in (561, 1105, 1729, 2465, 2821, 6601, 8911, 41041, 825265):
        assert not is_probable_prime(n)
        assert not sympy.isprime(n)


def test_large_known_primes_and_composites():
    assert is_probable_prime(2 ** 61 - 1)
    assert is_probable_prime(2 ** 89 - 1)
    assert not is_probable_prime(2 ** 67 - 1)  # 193707721 * 761838257287
    assert not is_probable_prime((2 ** 61 - 1) * (2 ** 89 - 1))


def test_random_band_agrees_with_sympy():
    rng = Rng(100)
    for _ in range(300):
        n = rng.randrange(10 ** 6, 10 ** 7)
        assert is_probable_prime(n) == sympy.isprime(n), n


def test_sample_prime_in_range_and_prime():
    rng = Rng(200)
    for _ in range(50):
        p = sample_prime(1000, 2000, rng)
        assert 1000 <= p <= 2000
        assert sympy.isprime(p)


def test_sample_prime_deterministic_and_spread():
    assert sample_prime(10 ** 6, 2 * 10 ** 6, Rng(5)) == \
        sample_prime(10 ** 6, 2 * 10 ** 6, Rng(5))
    picks = {sample_prime(10 ** 6, 2 * 10 ** 6, Rng(s)) for s in range(40)}
    assert len(picks) > 30


def test_sample_prime_empty_range():
    with pytest.raises(GenerationError):
        sample_prime(24, 28, Rng(1))  # no primes in [24, 28]
