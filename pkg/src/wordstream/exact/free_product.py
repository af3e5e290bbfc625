"""Free products of two exact groups, in syllable normal form.

Element: tuple of (factor, value) syllables with factors alternating between
0 and 1 and no identity values.  This form is canonical whenever both factor
representations are.
"""

from __future__ import annotations

from ..errors import ConstructionError
from ..words import Word, disjoint_union
from .base import ExactGroup


class FreeProductGroup(ExactGroup):
    kind = "free_product"

    def __init__(self, left: ExactGroup, right: ExactGroup):
        super().__init__(disjoint_union(left.alphabet, right.alphabet))
        self.factors = (left, right)
        self.data_canonical = left.data_canonical and right.data_canonical
        self.data_orderable = False
        self._side = {}
        gens = {}
        for fi, grp in enumerate(self.factors):
            for name in grp.alphabet.names:
                self._side[name] = fi
                g = grp.gen(grp.alphabet.letter(name))
                gens[name] = ((fi, g),)
        self._set_gens(gens)

    def factor_of(self, letter) -> int:
        try:
            return self._side[letter.sym]
        except KeyError:
            raise ConstructionError("letter %s belongs to neither factor" % letter)

    @property
    def identity(self):
        return ()

    def mul(self, x, y):
        out = list(x)
        i = 0
        while out and i < len(y):
            fi, v = y[i]
            lf, lv = out[-1]
            if lf != fi:
                break
            merged = self.factors[fi].mul(lv, v)
            out.pop()
            i += 1
            if not self.factors[fi].is_identity(merged):
                out.append((fi, merged))
                break
        out.extend(y[i:])
        return tuple(out)

    def inv(self, x):
        return tuple((fi, self.factors[fi].inv(v)) for fi, v in reversed(x))

    def key_data(self, x):
        return tuple((fi, self.factors[fi].key_data(v)) for fi, v in x)

    def relators(self) -> tuple[Word, ...]:
        out = []
        for grp in self.factors:
            out.extend(grp.relators())
        return tuple(out)
