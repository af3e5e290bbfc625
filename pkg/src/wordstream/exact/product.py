"""Direct products of exact groups.  Element: tuple of one value per factor."""

from __future__ import annotations

from functools import reduce

from ..words import Word, disjoint_union
from .base import ExactGroup


class DirectProductGroup(ExactGroup):
    kind = "direct_product"

    def __init__(self, *groups: ExactGroup):
        alphabet = reduce(disjoint_union, (g.alphabet for g in groups))
        super().__init__(alphabet)
        self.groups = tuple(groups)
        self.data_canonical = all(g.data_canonical for g in groups)
        self.data_orderable = all(g.data_orderable for g in groups)
        self._slot = {}
        gens = {}
        ident = tuple(g.identity for g in groups)
        for gi, grp in enumerate(groups):
            for name in grp.alphabet.names:
                self._slot[name] = gi
                comps = list(ident)
                comps[gi] = grp.gen(grp.alphabet.letter(name))
                gens[name] = tuple(comps)
        self._identity = ident
        self._set_gens(gens)

    def slot_of(self, letter) -> int:
        return self._slot[letter.sym]

    @property
    def identity(self):
        return self._identity

    def mul(self, x, y):
        return tuple(g.mul(a, b) for g, a, b in zip(self.groups, x, y))

    def inv(self, x):
        return tuple(g.inv(a) for g, a in zip(self.groups, x))

    def key_data(self, x):
        return tuple(g.key_data(a) for g, a in zip(self.groups, x))

    def relators(self) -> tuple[Word, ...]:
        out = []
        for grp in self.groups:
            out.extend(grp.relators())
        names = [grp.alphabet.names for grp in self.groups]
        for gi in range(len(self.groups)):
            for gj in range(gi + 1, len(self.groups)):
                for na in names[gi]:
                    for nb in names[gj]:
                        a = self.alphabet.letter(na)
                        b = self.alphabet.letter(nb)
                        out.append((a, b, self.alphabet.inverse(a),
                                    self.alphabet.inverse(b)))
        return tuple(out)

    @property
    def is_finite(self) -> bool:
        return all(g.is_finite for g in self.groups)
