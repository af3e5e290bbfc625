"""Determinism and distribution checks for the splittable generator."""

import pytest

from wordstream.errors import GenerationError
from wordstream.rng import Rng


def test_same_seed_same_stream():
    a = Rng(12345)
    b = Rng(12345)
    assert a.bytes(64) == b.bytes(64)
    assert a.bits(17) == b.bits(17)
    assert a.randrange(0, 1000) == b.randrange(0, 1000)


def test_int_and_bytes_seeds_accepted():
    Rng(0).bytes(8)
    Rng(-77).bytes(8)
    Rng(b"label").bytes(8)
    with pytest.raises(TypeError):
        Rng("string seed")


def test_different_seeds_differ():
    outs = {Rng(s).bytes(16) for s in range(50)}
    assert len(outs) == 50


def test_child_streams_are_order_independent():
    # Children derive from the parent key, not its position, so consuming
    # the parent between splits must not change what the children produce.
    r1 = Rng(7)
    a1 = r1.child("a").bytes(32)
    r1.bytes(100)
    b1 = r1.child("b").bytes(32)

    r2 = Rng(7)
    b2 = r2.child("b").bytes(32)
    a2 = r2.child("a").bytes(32)
    assert a1 == a2
    assert b1 == b2
    assert a1 != b1


def test_child_index_matches_labeled_child():
    r = Rng(3)
    assert r.child_index("m", 4).bytes(16) == r.child("m#4").bytes(16)
    assert r.child_index("m", 4).bytes(16) != r.child_index("m", 5).bytes(16)


def test_bits_range():
    r = Rng(11)
    assert r.bits(0) == 0
    for k in (1, 3, 8, 13, 64, 200):
        for _ in range(30):
            v = r.bits(k)
            assert 0 <= v < (1 << k)


def test_bits_one_is_roughly_fair():
    r = Rng(2024)
    ones = sum(r.bits(1) for _ in range(4000))
    assert 1700 < ones < 2300


def test_randrange_covers_inclusive_endpoints():
    r = Rng(9)
    seen = set()
    for _ in range(500):
        seen.add(r.randrange(3, 7))
    assert seen == {3, 4, 5, 6, 7}
    assert r.randrange(5, 5) == 5
    with pytest.raises(GenerationError):
        r.randrange(8, 5)


def test_choice_and_shuffle():
    r = Rng(4)
    seq = ["x", "y", "z"]
    assert r.choice(seq) in seq
    with pytest.raises(GenerationError):
        r.choice([])

    items = list(range(20))
    r1, r2 = Rng(5), Rng(5)
    a, b = list(items), list(items)
    r1.shuffle(a)
    r2.shuffle(b)
    assert a == b
    assert sorted(a) == items
    assert a != items  # 20!-to-1 against


def test_random_unit_interval():
    r = Rng(6)
    vals = [r.random() for _ in range(200)]
    assert all(0.0 <= v < 1.0 for v in vals)
    assert 0.35 < sum(vals) / len(vals) < 0.65
