"""Restricted wreath products H wr G with exact arithmetic.

Element: (support, cursor) where support is a tuple of (position, value)
pairs with non-identity lamp values, sorted by the cursor group's
deterministic element order, and cursor is a cursor-group element.
Multiplication follows (f1, c1)(f2, c2) = (a -> f1(a) f2(c1^-1 a), c1 c2).
"""

from __future__ import annotations

from ..words import Word, disjoint_union
from .base import ExactGroup


class WreathGroup(ExactGroup):
    kind = "wreath"

    def __init__(self, lamp: ExactGroup, cursor: ExactGroup):
        super().__init__(disjoint_union(lamp.alphabet, cursor.alphabet))
        self.lamp = lamp
        self.cursor = cursor
        self.data_canonical = lamp.data_canonical and cursor.data_canonical
        self.data_orderable = False
        self._lamp_names = set(lamp.alphabet.names)
        gens = {}
        for name in lamp.alphabet.names:
            val = lamp.gen(lamp.alphabet.letter(name))
            gens[name] = (((cursor.identity, val),), cursor.identity)
        for name in cursor.alphabet.names:
            gens[name] = ((), cursor.gen(cursor.alphabet.letter(name)))
        self._set_gens(gens)

    def is_lamp_letter(self, letter) -> bool:
        return letter.sym in self._lamp_names

    @property
    def identity(self):
        return ((), self.cursor.identity)

    def mul(self, x, y):
        (f1, c1), (f2, c2) = x, y
        new_cursor = self.cursor.mul(c1, c2)
        if not f2:
            return (f1, new_cursor)
        entries = {}
        for pos, val in f1:
            entries[self.cursor.sort_data(pos)] = (pos, val)
        for pos2, val2 in f2:
            pos = self.cursor.mul(c1, pos2)
            sk = self.cursor.sort_data(pos)
            hit = entries.get(sk)
            if hit is None:
                entries[sk] = (pos, val2)
            else:
                merged = self.lamp.mul(hit[1], val2)
                if self.lamp.is_identity(merged):
                    del entries[sk]
                else:
                    entries[sk] = (hit[0], merged)
        support = tuple(entries[sk] for sk in sorted(entries))
        return (support, new_cursor)

    def inv(self, x):
        f, c = x
        ci = self.cursor.inv(c)
        entries = []
        for pos, val in f:
            npos = self.cursor.mul(ci, pos)
            entries.append((self.cursor.sort_data(npos), npos, self.lamp.inv(val)))
        entries.sort(key=lambda e: e[0])
        return (tuple((p, v) for _, p, v in entries), ci)

    def key_data(self, x):
        f, c = x
        return (
            tuple((self.cursor.key_data(p), self.lamp.key_data(v)) for p, v in f),
            self.cursor.key_data(c),
        )

    def relators(self) -> tuple[Word, ...]:
        return self.lamp.relators() + self.cursor.relators()

    @property
    def is_finite(self) -> bool:
        return self.lamp.is_finite and self.cursor.is_finite
