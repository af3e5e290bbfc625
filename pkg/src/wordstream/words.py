"""Letters, symmetric alphabets and words.

A Letter is a generator name plus an inversion flag.  An Alphabet fixes the
set of generator names and knows which of them are involutions; it is the
only place that understands inversion, so letters for a self-inverse
generator are always normalized to the plain form and formal inverses
satisfy inverse(inverse(x)) == x.

The textual form of a word is whitespace-separated letters, a trailing "-"
marking inversion: "a b- a" denotes a * b^-1 * a.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import AlphabetError


@dataclass(frozen=True, slots=True)
class Letter:
    sym: str
    inv: bool = False

    def __str__(self) -> str:
        return self.sym + ("-" if self.inv else "")


Word = tuple  # tuple[Letter, ...]

EMPTY_WORD: Word = ()


class Alphabet:
    """Symmetric generating alphabet.

    names: generator names in a fixed order.
    self_inverse: subset of names whose letters are involutions.
    """

    def __init__(self, names: Sequence[str], self_inverse: Iterable[str] = ()):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise AlphabetError("duplicate generator names: %r" % (self.names,))
        self.self_inverse = frozenset(self_inverse)
        unknown = self.self_inverse - set(self.names)
        if unknown:
            raise AlphabetError("self-inverse names not in alphabet: %r" % sorted(unknown))
        self._letters = []
        for name in self.names:
            self._letters.append(Letter(name, False))
            if name not in self.self_inverse:
                self._letters.append(Letter(name, True))
        self._letter_set = frozenset(self._letters)

    def __contains__(self, letter: Letter) -> bool:
        return letter in self._letter_set

    def __iter__(self) -> Iterator[Letter]:
        return iter(self._letters)

    def __len__(self) -> int:
        return len(self._letters)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Alphabet)
                and self.names == other.names
                and self.self_inverse == other.self_inverse)

    def __hash__(self) -> int:
        return hash((self.names, self.self_inverse))

    def __repr__(self) -> str:
        return "Alphabet(%r)" % (self.names,)

    @property
    def letters(self) -> tuple[Letter, ...]:
        return tuple(self._letters)

    def letter(self, name: str, inv: bool = False) -> Letter:
        if name not in self.names:
            raise AlphabetError("unknown generator %r" % name)
        if name in self.self_inverse:
            inv = False
        return Letter(name, inv)

    def require(self, letter: Letter) -> Letter:
        if letter not in self._letter_set:
            raise AlphabetError("letter %s not in alphabet %r" % (letter, self.names))
        return letter

    def inverse(self, letter: Letter) -> Letter:
        self.require(letter)
        if letter.sym in self.self_inverse:
            return letter
        return Letter(letter.sym, not letter.inv)

    def inverse_word(self, word: Sequence[Letter]) -> Word:
        return tuple(self.inverse(x) for x in reversed(word))

    def parse_word(self, text: str) -> Word:
        """Parse one whitespace-separated word; empty text is the empty word."""
        out = []
        for token in text.split():
            inv = token.endswith("-")
            name = token[:-1] if inv else token
            if not name:
                raise AlphabetError("bare inversion mark in %r" % text)
            out.append(self.letter(name, inv))
        return tuple(out)

    def format_word(self, word: Sequence[Letter]) -> str:
        return " ".join(str(x) for x in word)

    def random_word(self, rng, length: int) -> Word:
        return tuple(rng.choice(self._letters) for _ in range(length))


def concat(*words: Sequence[Letter]) -> Word:
    out: list = []
    for word in words:
        out.extend(word)
    return tuple(out)


def disjoint_union(a: Alphabet, b: Alphabet) -> Alphabet:
    overlap = set(a.names) & set(b.names)
    if overlap:
        raise AlphabetError("alphabets overlap on %r" % sorted(overlap))
    return Alphabet(a.names + b.names, a.self_inverse | b.self_inverse)
