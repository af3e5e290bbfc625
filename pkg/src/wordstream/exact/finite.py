"""Finite groups given by full multiplication tables."""

from __future__ import annotations

from ..errors import ConstructionError
from ..words import Alphabet, Word
from .base import ExactGroup


class FiniteGroup(ExactGroup):
    """Element: index into the element list; index 0 is the identity."""

    kind = "finite"

    def __init__(self, element_names, table, gen_names=None):
        element_names = tuple(element_names)
        size = len(element_names)
        if size == 0 or len(set(element_names)) != size:
            raise ConstructionError("element names must be nonempty and distinct")
        table = tuple(tuple(row) for row in table)
        if len(table) != size or any(len(row) != size for row in table):
            raise ConstructionError("table must be %d x %d" % (size, size))
        for row in table:
            for v in row:
                if not isinstance(v, int) or not 0 <= v < size:
                    raise ConstructionError("table entries must be indices")
        for i in range(size):
            if table[0][i] != i or table[i][0] != i:
                raise ConstructionError("element 0 must be the identity")
            if set(table[i]) != set(range(size)):
                raise ConstructionError("row %d is not a permutation" % i)
            if set(row[i] for row in table) != set(range(size)):
                raise ConstructionError("column %d is not a permutation" % i)
        for i in range(size):
            for j in range(size):
                for k in range(size):
                    if table[table[i][j]][k] != table[i][table[j][k]]:
                        raise ConstructionError("table is not associative")
        self.size = size
        self.element_names = element_names
        self.table = table
        self._index = {name: i for i, name in enumerate(element_names)}
        inv = [None] * size
        for i in range(size):
            inv[i] = table[i].index(0)
        self._inv = tuple(inv)

        if gen_names is None:
            gen_names = tuple(n for n in element_names[1:])
        else:
            gen_names = tuple(gen_names)
            for n in gen_names:
                if n not in self._index or self._index[n] == 0:
                    raise ConstructionError("generator %r is not a non-identity element" % n)
        if not gen_names:
            raise ConstructionError("need at least one generator")
        if not self._generates(gen_names):
            raise ConstructionError("chosen generators do not generate the group")
        self_inverse = tuple(n for n in gen_names
                             if self._inv[self._index[n]] == self._index[n])
        super().__init__(Alphabet(gen_names, self_inverse=self_inverse))
        self._set_gens({n: self._index[n] for n in gen_names})

    def _generates(self, gen_names) -> bool:
        seen = {0}
        frontier = [0]
        gens = [self._index[n] for n in gen_names]
        gens += [self._inv[g] for g in gens]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.table[x][g]
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return len(seen) == self.size

    @property
    def identity(self):
        return 0

    def mul(self, x, y):
        return self.table[x][y]

    def inv(self, x):
        return self._inv[x]

    def order_of(self, x) -> int:
        k, acc = 1, x
        while acc != 0:
            acc = self.table[acc][x]
            k += 1
        return k

    def relators(self) -> tuple[Word, ...]:
        out = []
        for name in self.alphabet.names:
            letter = self.alphabet.letter(name)
            out.append((letter,) * self.order_of(self._index[name]))
        return tuple(out)

    @property
    def is_finite(self) -> bool:
        return True

    def elements(self):
        return range(self.size)


def symmetric_group_3() -> FiniteGroup:
    """S_3 on names e, s, t, st, ts, sts with transpositions s, t as generators."""
    names = ("e", "s", "t", "st", "ts", "sts")
    perms = {
        "e": (0, 1, 2),
        "s": (1, 0, 2),
        "t": (0, 2, 1),
        "st": (1, 2, 0),
        "ts": (2, 0, 1),
        "sts": (2, 1, 0),
    }
    index = {perms[n]: i for i, n in enumerate(names)}
    table = []
    for a in names:
        row = []
        for b in names:
            pa, pb = perms[a], perms[b]
            row.append(index[tuple(pa[pb[i]] for i in range(3))])
        table.append(row)
    return FiniteGroup(names, table, gen_names=("s", "t"))
