"""Free groups with reduced-word normal form."""

from __future__ import annotations

from ..errors import ConstructionError
from ..words import Alphabet, Letter
from .base import ExactGroup

# Element: tuple of (symbol, +1 | -1), freely reduced.


def _reduce_concat(x, y):
    left = list(x)
    i = 0
    while left and i < len(y):
        sym, e = y[i]
        lsym, le = left[-1]
        if lsym == sym and le == -e:
            left.pop()
            i += 1
        else:
            break
    left.extend(y[i:])
    return tuple(left)


class FreeGroup(ExactGroup):
    kind = "free"

    def __init__(self, names):
        if len(names) < 1:
            raise ConstructionError("free group needs at least one generator")
        super().__init__(Alphabet(tuple(names)))
        self._set_gens({name: ((name, 1),) for name in names})

    @property
    def identity(self):
        return ()

    def mul(self, x, y):
        return _reduce_concat(x, y)

    def inv(self, x):
        return tuple((sym, -e) for sym, e in reversed(x))
