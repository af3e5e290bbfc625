"""A group viewed through a replacement generating set.

Wraps an existing oracle with a new alphabet whose letters are defined by
image words over the old alphabet.  Elements, multiplication, and keys all
belong to the inner group; only the marking changes.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from ..errors import ConstructionError
from ..words import Alphabet, Letter, Word
from .base import ExactGroup


class RegeneratedGroup(ExactGroup):
    kind = "regenerated"

    def __init__(self, inner: ExactGroup, alphabet: Alphabet,
                 images: Mapping[str, Word]):
        super().__init__(alphabet)
        self.inner = inner
        self.data_canonical = inner.data_canonical
        self.data_orderable = inner.data_orderable
        base = {}
        for name in alphabet.names:
            if name not in images:
                raise ConstructionError("no image word for generator %r" % name)
            base[name] = inner.evaluate(images[name])
        for name in alphabet.self_inverse:
            g = base[name]
            if not inner.equal(inner.mul(g, g), inner.identity):
                raise ConstructionError(
                    "generator %r is marked self-inverse but its image is not" % name)
        self._set_gens(base)
        self.images = {name: tuple(images[name]) for name in alphabet.names}

    @property
    def identity(self):
        return self.inner.identity

    def mul(self, x, y):
        return self.inner.mul(x, y)

    def inv(self, x):
        return self.inner.inv(x)

    def equal(self, x, y) -> bool:
        return self.inner.equal(x, y)

    def key_data(self, x):
        return self.inner.key_data(x)

    def sort_data(self, x):
        return self.inner.sort_data(x)

    @property
    def is_finite(self) -> bool:
        return self.inner.is_finite

    def elements(self):
        return self.inner.elements()
