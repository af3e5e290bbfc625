"""Alphabet and word plumbing."""

import pytest

from wordstream.errors import AlphabetError
from wordstream.rng import Rng
from wordstream.words import Alphabet, Letter, concat, disjoint_union


def test_letter_formatting():
    assert str(Letter("a")) == "a"
    assert str(Letter("a", True)) == "a-"
    assert Letter("a") == Letter("a", False)
    assert Letter("a") != Letter("a", True)


def test_alphabet_letters_and_lookup():
    ab = Alphabet(("a", "b"), self_inverse=("b",))
    syms = [str(l) for l in ab.letters]
    assert syms == ["a", "a-", "b"]
    assert ab.letter("a", True) == Letter("a", True)
    # self-inverse letters normalize their inverse flag away
    assert ab.letter("b", True) == Letter("b", False)
    with pytest.raises(AlphabetError):
        ab.letter("c", False)
    with pytest.raises(AlphabetError):
        ab.require("z")


def test_contains_checks_letters():
    ab = Alphabet(("a",), self_inverse=())
    assert Letter("a") in ab
    assert Letter("a", True) in ab
    assert Letter("b") not in ab


def test_parse_format_round_trip():
    ab = Alphabet(("a", "b"))
    word = ab.parse_word("a b- a- a b")
    assert [str(l) for l in word] == ["a", "b-", "a-", "a", "b"]
    assert ab.format_word(word) == "a b- a- a b"
    assert ab.parse_word("") == ()
    with pytest.raises(AlphabetError):
        ab.parse_word("a q")


def test_inverse_word():
    ab = Alphabet(("a", "b"), self_inverse=("b",))
    word = ab.parse_word("a b a-")
    assert ab.format_word(ab.inverse_word(word)) == "a b a-"
    word2 = ab.parse_word("a a b")
    assert ab.format_word(ab.inverse_word(word2)) == "b a- a-"


def test_random_word_length_and_membership():
    ab = Alphabet(("x", "y"), self_inverse=("y",))
    rng = Rng(31)
    for length in (0, 1, 5, 40):
        w = ab.random_word(rng, length)
        assert len(w) == length
        assert all(l in ab for l in w)
    # determinism under the same seed
    assert Alphabet(("x",)).random_word(Rng(8), 12) == \
        Alphabet(("x",)).random_word(Rng(8), 12)


def test_concat():
    ab = Alphabet(("a",))
    u = ab.parse_word("a a")
    v = ab.parse_word("a-")
    assert concat(u, v, u) == ab.parse_word("a a a- a a")
    assert concat() == ()


def test_disjoint_union():
    a = Alphabet(("a", "b"), self_inverse=("b",))
    c = Alphabet(("c",))
    u = disjoint_union(a, c)
    assert u.names == ("a", "b", "c")
    assert set(u.self_inverse) == {"b"}
    with pytest.raises(AlphabetError):
        disjoint_union(a, Alphabet(("b",)))


def test_alphabet_equality_and_hash():
    a1 = Alphabet(("a", "b"), self_inverse=("b",))
    a2 = Alphabet(("a", "b"), self_inverse=("b",))
    assert a1 == a2
    assert hash(a1) == hash(a2)
    assert a1 != Alphabet(("a", "b"))
