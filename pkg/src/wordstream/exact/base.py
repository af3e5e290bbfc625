"""Shared protocol for exact group oracles.

A group object owns the operations; elements are plain immutable data (ints,
strings, Fractions, nested tuples).  Keeping elements as bare data makes
ball searches cheap and lets composite groups nest element values directly.

Unless a subclass says otherwise, element data is canonical: two values are
equal in the group iff they are equal as Python data.  Groups without a
normal form (data_canonical = False) must override key_data() with a
canonical certificate; key() then serializes it to stable bytes.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .. import codec
from ..errors import AlphabetError
from ..words import Alphabet, Letter, Word


class ExactGroup:
    kind = "group"
    data_canonical = True
    data_orderable = True

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self._gens: dict[tuple[str, bool], object] = {}

    # -- construction helpers ------------------------------------------------

    def _set_gens(self, base: dict[str, object]) -> None:
        """Register generator elements; formal inverses are derived."""
        for name in self.alphabet.names:
            if name not in base:
                raise AlphabetError("no generator element for %r" % name)
            g = base[name]
            self._gens[(name, False)] = g
            if name not in self.alphabet.self_inverse:
                self._gens[(name, True)] = self.inv(g)

    # -- operations ----------------------------------------------------------

    @property
    def identity(self):
        raise NotImplementedError

    def gen(self, letter: Letter):
        try:
            return self._gens[(letter.sym, letter.inv)]
        except KeyError:
            raise AlphabetError("letter %s not in alphabet of %s" % (letter, self.kind))

    def mul(self, x, y):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def equal(self, x, y) -> bool:
        if self.data_canonical:
            return x == y
        return self.key(x) == self.key(y)

    def is_identity(self, x) -> bool:
        return self.equal(x, self.identity)

    def key_data(self, x):
        """Canonical, codec-encodable certificate for x."""
        if not self.data_canonical:
            raise NotImplementedError("non-canonical group must override key_data")
        return x

    def key(self, x) -> bytes:
        return codec.encode(self.key_data(x))

    def sort_data(self, x):
        """Value usable to order elements deterministically within this group."""
        if self.data_canonical and self.data_orderable:
            return x
        return self.key(x)

    # -- words ---------------------------------------------------------------

    def evaluate(self, word: Sequence[Letter]):
        out = self.identity
        for letter in word:
            out = self.mul(out, self.gen(letter))
        return out

    def is_identity_word(self, word: Sequence[Letter]) -> bool:
        return self.is_identity(self.evaluate(word))

    def relators(self) -> tuple[Word, ...]:
        """Known short identity words, used to enrich equal-pair generation."""
        return ()

    # -- finiteness ----------------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return False

    def elements(self) -> Iterable:
        raise NotImplementedError("%s is not enumerable" % self.kind)
