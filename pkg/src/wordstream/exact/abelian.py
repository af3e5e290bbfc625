"""Free abelian groups and cyclic quotients."""

from __future__ import annotations

from ..errors import ConstructionError
from ..words import Alphabet, Word
from .base import ExactGroup


class FreeAbelianGroup(ExactGroup):
    """Z^m with one generator letter per coordinate.  Element: tuple of ints."""

    kind = "free_abelian"

    def __init__(self, names):
        if len(names) < 1:
            raise ConstructionError("Z^m needs m >= 1")
        super().__init__(Alphabet(tuple(names)))
        m = len(names)
        self.rank = m
        units = {}
        for i, name in enumerate(names):
            e = [0] * m
            e[i] = 1
            units[name] = tuple(e)
        self._set_gens(units)

    @property
    def identity(self):
        return (0,) * self.rank

    def mul(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def inv(self, x):
        return tuple(-a for a in x)

    def relators(self) -> tuple[Word, ...]:
        out = []
        names = self.alphabet.names
        for i in range(self.rank):
            for j in range(i + 1, self.rank):
                a = self.alphabet.letter(names[i])
                b = self.alphabet.letter(names[j])
                out.append((a, b, self.alphabet.inverse(a), self.alphabet.inverse(b)))
        return tuple(out)


class CyclicGroup(ExactGroup):
    """Z_k for k >= 2.  Element: int residue in [0, k)."""

    kind = "cyclic"

    def __init__(self, modulus: int, name: str = "a"):
        if modulus < 2:
            raise ConstructionError("cyclic modulus must be >= 2")
        self.modulus = modulus
        self_inverse = (name,) if modulus == 2 else ()
        super().__init__(Alphabet((name,), self_inverse=self_inverse))
        self._set_gens({name: 1 % modulus})

    @property
    def identity(self):
        return 0

    def mul(self, x, y):
        return (x + y) % self.modulus

    def inv(self, x):
        return (-x) % self.modulus

    def relators(self):
        a = self.alphabet.letter(self.alphabet.names[0])
        return ((a,) * self.modulus,)

    @property
    def is_finite(self) -> bool:
        return True

    def elements(self):
        return range(self.modulus)
