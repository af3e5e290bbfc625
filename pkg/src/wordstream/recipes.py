"""Exact (zero-error) streaming recipes for abelian and finite groups.

These serve as well-behaved inner machines for the combinators: the
coordinate tracker follows Z^m / Z_k coordinates directly and the table
machine walks a finite group's multiplication table.  Both are 0-injective.
"""

from __future__ import annotations

from .errors import ConstructionError
from .exact.finite import FiniteGroup
from .streaming import Recipe, StreamAutomaton, as_rng, pack_fields
from .words import Alphabet


class AbelianTrackerRecipe(Recipe):
    """Tracks one integer (modulus 0) or residue (modulus k) per generator.

    A bound-n stream keeps every Z-coordinate in [-n, n], so a Z-coordinate
    is packed as an offset value of width bits(2n).
    """

    def __init__(self, moduli, names):
        moduli = tuple(moduli)
        names = tuple(names)
        if len(moduli) != len(names) or not moduli:
            raise ConstructionError("need one name per modulus")
        for m in moduli:
            if m != 0 and m < 2:
                raise ConstructionError("modulus must be 0 (for Z) or >= 2")
        self.moduli = moduli
        self_inverse = tuple(n for n, m in zip(names, moduli) if m == 2)
        self.alphabet = Alphabet(names, self_inverse=self_inverse)

    def build(self, n, seed):
        return _AbelianTrackerMachine(self, n)

    def epsilon_bound(self, n):
        return 0.0

    def _widths(self, n):
        return tuple(
            (2 * n).bit_length() if m == 0 else (m - 1).bit_length()
            for m in self.moduli
        )

    def state_bits(self, n):
        return sum(self._widths(n))

    def config_bits(self, n):
        return 0

    def describe(self):
        parts = ["Z" if m == 0 else "Z_%d" % m for m in self.moduli]
        return "tracker(%s)" % " x ".join(parts)


class _AbelianTrackerMachine(StreamAutomaton):
    def __init__(self, recipe: AbelianTrackerRecipe, n: int):
        super().__init__(recipe.alphabet, n)
        self.moduli = recipe.moduli
        self._slot = {name: i for i, name in enumerate(recipe.alphabet.names)}
        self.coords = [0] * len(self.moduli)
        self._width = recipe._widths(n)
        self._seal()

    def _bump(self, letter, k):
        i = self._slot[letter.sym]
        delta = -k if letter.inv else k
        m = self.moduli[i]
        self.coords[i] = self.coords[i] + delta if m == 0 else (self.coords[i] + delta) % m

    def _snap(self):
        return list(self.coords)

    def _restore(self, snap):
        self.coords = list(snap)

    def _apply(self, letter):
        self._bump(letter, 1)

    def _apply_power(self, letter, k):
        self._bump(letter, k)

    def state_index(self):
        fields = []
        for i, v in enumerate(self.coords):
            if self.moduli[i] == 0:
                fields.append((v + self.n, self._width[i]))
            else:
                fields.append((v, self._width[i]))
        return pack_fields(fields)

    def layout(self):
        return tuple(("coord%d" % i, w) for i, w in enumerate(self._width))


class FiniteTableRecipe(Recipe):
    """Walks a finite group's multiplication table; state = element index."""

    def __init__(self, group: FiniteGroup):
        self.group = group
        self.alphabet = group.alphabet

    def build(self, n, seed):
        return _TableMachine(self, n)

    def epsilon_bound(self, n):
        return 0.0

    def state_bits(self, n):
        return max(1, (self.group.size - 1).bit_length())

    def config_bits(self, n):
        return 0

    def describe(self):
        return "table(%d elements)" % self.group.size


class _TableMachine(StreamAutomaton):
    def __init__(self, recipe: FiniteTableRecipe, n: int):
        super().__init__(recipe.alphabet, n)
        self.group = recipe.group
        self.state = 0
        self._width = recipe.state_bits(n)
        self._seal()

    def _snap(self):
        return self.state

    def _restore(self, snap):
        self.state = snap

    def _apply(self, letter):
        self.state = self.group.mul(self.state, self.group.gen(letter))

    def _apply_power(self, letter, k):
        # Right multiplication by a fixed element is a permutation of the
        # group, so the forward orbit is a pure cycle.
        g = self.group.gen(letter)
        orbit = [self.state]
        seen = {self.state: 0}
        cur = self.state
        while True:
            cur = self.group.mul(cur, g)
            if cur in seen:
                break
            seen[cur] = len(orbit)
            orbit.append(cur)
        self.state = orbit[k % len(orbit)]

    def state_index(self):
        return self.state

    def layout(self):
        return (("element", self._width),)
