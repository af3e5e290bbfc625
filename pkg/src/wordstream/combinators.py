"""Closure constructions over streaming recipes.

Each combinator takes recipes for factor groups and produces a recipe for
the composed group: generator change, direct products, finite extensions,
free products (via a rank-2 free fingerprint), and wreath products with
abelian or finite components.  Composed error bounds follow the shapes
documented on each class.
"""

from __future__ import annotations

import math
from typing import Mapping, Sequence

import numpy as np

from .errors import ConstructionError
from .exact.base import ExactGroup
from .exact.finite import FiniteGroup
from .fingerprint import sanov_fingerprint
from .gf import make_field
from .primes import is_probable_prime, sample_prime
from .streaming import Recipe, StreamAutomaton, as_rng, pack_fields
from .words import Alphabet, Letter, Word, disjoint_union


# Inner recipes only need a bounded two-sided error: prefix-pair failure
# terms like 2*eps*n^2 already charge both collisions and separations.
# One-sidedness of a composition holds only when every stage that feeds
# state indices downstream is itself one-sided, so the flag propagates.


# -- generator change ---------------------------------------------------------


class ChangeGeneratorsRecipe(Recipe):
    """Same group, new generating set: each new letter expands to a fixed word.

    The inner machine is built with bound stretch*n where stretch is the
    longest image, so expanded streams always fit.
    """

    def __init__(self, inner: Recipe, images: Mapping[str, object],
                 self_inverse=None):
        self.inner = inner
        parsed = {}
        for name, image in images.items():
            word = inner.alphabet.parse_word(image) if isinstance(image, str) \
                else tuple(inner.alphabet.require(x) for x in image)
            parsed[name] = word
        detected = [name for name, w in parsed.items()
                    if inner.alphabet.inverse_word(w) == w]
        if self_inverse is None:
            self_inverse = detected
        else:
            for name in self_inverse:
                if inner.alphabet.inverse_word(parsed[name]) != parsed[name]:
                    raise ConstructionError(
                        "letter %r marked self-inverse but its image is not" % name)
        self.alphabet = Alphabet(tuple(parsed), self_inverse=self_inverse)
        self.stretch = max([len(w) for w in parsed.values()] + [1])
        self._images = {}
        for name, word in parsed.items():
            g = self.alphabet.letter(name)
            self._images[g] = word
            if name not in self.alphabet.self_inverse:
                self._images[self.alphabet.inverse(g)] = \
                    inner.alphabet.inverse_word(word)
        self.injective = inner.injective

    def describe(self) -> str:
        return "change_generators(%s)" % self.inner.describe()

    def epsilon_bound(self, n: int) -> float:
        return self.inner.epsilon_bound(self.stretch * n)

    def state_bits(self, n: int) -> int:
        return self.inner.state_bits(self.stretch * n)

    def config_bits(self, n: int) -> int:
        return self.inner.config_bits(self.stretch * n)

    def build(self, n: int, seed) -> StreamAutomaton:
        return _ExpandedMachine(self, n, as_rng(seed))


class _ExpandedMachine(StreamAutomaton):
    def __init__(self, recipe: ChangeGeneratorsRecipe, n: int, rng):
        super().__init__(recipe.alphabet, n)
        self.images = recipe._images
        self.inner = recipe.inner.build(recipe.stretch * n, rng)
        self._seal()

    def _apply(self, letter: Letter) -> None:
        for x in self.images[letter]:
            self.inner.step(x)

    def _snap(self):
        return self.inner.snapshot()

    def _restore(self, snap) -> None:
        self.inner.restore(snap)

    def state_index(self) -> int:
        return self.inner.state_index()

    def layout(self) -> tuple:
        return self.inner.layout()

    def config_layout(self) -> tuple:
        return self.inner.config_layout()


# -- direct product -----------------------------------------------------------


class DirectProductRecipe(Recipe):
    """Run one machine per factor; letters route to their factor's machine."""

    def __init__(self, *factors: Recipe):
        if len(factors) < 2:
            raise ConstructionError("direct product needs at least two factors")
        self.factors = factors
        alphabet = factors[0].alphabet
        for f in factors[1:]:
            alphabet = disjoint_union(alphabet, f.alphabet)
        self.alphabet = alphabet
        self._route = {}
        for i, f in enumerate(factors):
            for name in f.alphabet.names:
                self._route[name] = i
        self.injective = all(f.injective for f in factors)

    def describe(self) -> str:
        return "direct_product(%s)" % ", ".join(f.describe() for f in self.factors)

    def epsilon_bound(self, n: int) -> float:
        return sum(f.epsilon_bound(n) for f in self.factors)

    def state_bits(self, n: int) -> int:
        return sum(f.state_bits(n) for f in self.factors)

    def config_bits(self, n: int) -> int:
        return sum(f.config_bits(n) for f in self.factors)

    def build(self, n: int, seed) -> StreamAutomaton:
        return _ProductMachine(self, n, as_rng(seed))


class _ProductMachine(StreamAutomaton):
    def __init__(self, recipe: DirectProductRecipe, n: int, rng):
        super().__init__(recipe.alphabet, n)
        self.route = recipe._route
        self.children = [f.build(n, rng.child_index("factor", i))
                         for i, f in enumerate(recipe.factors)]
        self._seal()

    def _apply(self, letter: Letter) -> None:
        self.children[self.route[letter.sym]].step(letter)

    def _apply_power(self, letter: Letter, k: int) -> None:
        self.children[self.route[letter.sym]].step_power(letter, k)

    def _snap(self):
        return tuple(c.snapshot() for c in self.children)

    def _restore(self, snap) -> None:
        for c, s in zip(self.children, snap):
            c.restore(s)

    def state_index(self) -> int:
        return pack_fields([(c.state_index(), c.bits) for c in self.children])

    def layout(self) -> tuple:
        out = []
        for i, c in enumerate(self.children):
            out.extend(("f%d.%s" % (i, name), w) for name, w in c.layout())
        return tuple(out)

    def config_layout(self) -> tuple:
        out = []
        for i, c in enumerate(self.children):
            out.extend(("f%d.%s" % (i, name), w) for name, w in c.config_layout())
        return tuple(out)


# -- finite extension ---------------------------------------------------------


class ExtensionData:
    """Coset structure of a finite-index subgroup.

    Cosets are represented by words reps[0..k-1] over the outer alphabet
    with reps[0] empty.  Outer letters split into subgroup letters (each
    conjugates into a subgroup word, coset unchanged) and coset letters
    (each maps coset i to a subgroup word plus a new coset).
    """

    def __init__(self, outer: Alphabet, subgroup: Alphabet, reps: Sequence[Word],
                 conj: Mapping, mult: Mapping):
        self.outer = outer
        self.subgroup = subgroup
        self.reps = tuple(tuple(w) for w in reps)
        self.k = len(self.reps)
        if self.k < 1 or self.reps[0] != ():
            raise ConstructionError("first coset representative must be empty")
        sigma_syms = set(subgroup.names)
        coset_syms = set(outer.names) - sigma_syms
        self.sigma_letters = tuple(x for x in outer.letters if x.sym in sigma_syms)
        self.coset_letters = tuple(x for x in outer.letters if x.sym in coset_syms)
        self.conj = {}
        for letter in self.sigma_letters:
            for i in range(self.k):
                try:
                    word = conj[(letter, i)]
                except KeyError:
                    raise ConstructionError("missing conjugation word for (%s, %d)"
                                            % (letter, i))
                self.conj[(letter, i)] = tuple(subgroup.require(x) for x in word)
        self.mult = {}
        for letter in self.coset_letters:
            for i in range(self.k):
                try:
                    word, j = mult[(letter, i)]
                except KeyError:
                    raise ConstructionError("missing coset rule for (%s, %d)"
                                            % (letter, i))
                if not 0 <= j < self.k:
                    raise ConstructionError("coset index %d out of range" % j)
                self.mult[(letter, i)] = (tuple(subgroup.require(x) for x in word), j)
        lengths = [len(w) for w in self.conj.values()]
        lengths += [len(w) for w, _ in self.mult.values()]
        self.c = max(lengths + [1])

    def _lift(self, word: Word) -> Word:
        return tuple(self.outer.letter(x.sym, x.inv) for x in word)

    def verify(self, oracle: ExactGroup) -> None:
        """Check every table row in an exact oracle of the extension group."""
        for (letter, i), word in self.conj.items():
            left = oracle.evaluate(self.reps[i] + (letter,))
            right = oracle.evaluate(self._lift(word) + self.reps[i])
            if not oracle.equal(left, right):
                raise ConstructionError(
                    "conjugation rule fails for (%s, coset %d)" % (letter, i))
        for (letter, i), (word, j) in self.mult.items():
            left = oracle.evaluate(self.reps[i] + (letter,))
            right = oracle.evaluate(self._lift(word) + self.reps[j])
            if not oracle.equal(left, right):
                raise ConstructionError(
                    "coset rule fails for (%s, coset %d)" % (letter, i))


class FiniteExtensionRecipe(Recipe):
    """Decide a group from a finite-index subgroup machine plus coset data.

    State is (subgroup-machine state, coset index); a word is the identity
    exactly when the tracked subgroup part is trivial and the coset returns
    to the trivial one, so the error bound is the inner machine's at c*n.
    """

    def __init__(self, inner: Recipe, ext: ExtensionData):
        if inner.alphabet != ext.subgroup:
            raise ConstructionError(
                "inner recipe alphabet does not match the extension's subgroup")
        self.inner = inner
        self.ext = ext
        self.alphabet = ext.outer
        self.injective = inner.injective

    def describe(self) -> str:
        return "finite_extension(%s, k=%d)" % (self.inner.describe(), self.ext.k)

    def epsilon_bound(self, n: int) -> float:
        return self.inner.epsilon_bound(self.ext.c * n)

    def _coset_width(self) -> int:
        return max(1, (self.ext.k - 1).bit_length())

    def state_bits(self, n: int) -> int:
        return self.inner.state_bits(self.ext.c * n) + self._coset_width()

    def config_bits(self, n: int) -> int:
        return self.inner.config_bits(self.ext.c * n)

    def build(self, n: int, seed) -> StreamAutomaton:
        return _ExtensionMachine(self, n, as_rng(seed))


class _ExtensionMachine(StreamAutomaton):
    def __init__(self, recipe: FiniteExtensionRecipe, n: int, rng):
        super().__init__(recipe.alphabet, n)
        self.ext = recipe.ext
        self.inner = recipe.inner.build(recipe.ext.c * n, rng)
        self.coset = 0
        self._width = recipe._coset_width()
        self._seal()

    def _apply(self, letter: Letter) -> None:
        ext = self.ext
        if (letter, self.coset) in ext.conj:
            self.inner.read(ext.conj[(letter, self.coset)])
        else:
            word, j = ext.mult[(letter, self.coset)]
            self.inner.read(word)
            self.coset = j

    def _snap(self):
        return (self.inner.snapshot(), self.coset)

    def _restore(self, snap) -> None:
        self.inner.restore(snap[0])
        self.coset = snap[1]

    def state_index(self) -> int:
        return pack_fields([(self.inner.state_index(), self.inner.bits),
                            (self.coset, self._width)])

    def layout(self) -> tuple:
        inner = tuple(("sub.%s" % name, w) for name, w in self.inner.layout())
        return inner + (("coset", self._width),)

    def config_layout(self) -> tuple:
        return self.inner.config_layout()


# -- free product -------------------------------------------------------------


class FreeProductRecipe(Recipe):
    """Free product of two machine-decidable groups.

    Factor machines run on their alphabet projections.  A rank-2 free
    fingerprint receives a commutator-style block a^-f b^(+-1) a^f at each
    internal alphabet switch, where f encodes the current factor-state
    pair; this detects interleavings that each projection alone misses.
    Composed error: 2n^2(eps_A + eps_B) + eps_F2(m) with the fingerprint
    built for bound m = n(2|P_n||Q_n| + 1).
    """

    # a factor collision can corrupt the emitted commutator word, which the
    # F2 fingerprint may then separate even on oracle-equal inputs
    injective = False

    def __init__(self, left: Recipe, right: Recipe, c_f2: int = 1):
        self.left = left
        self.right = right
        self.alphabet = disjoint_union(left.alphabet, right.alphabet)
        self._left_syms = frozenset(left.alphabet.names)
        self.f2 = sanov_fingerprint(c_f2)

    def describe(self) -> str:
        return "free_product(%s, %s)" % (self.left.describe(), self.right.describe())

    def f2_bound(self, n: int) -> int:
        return n * (2 * self.left.state_space_size(n)
                    * self.right.state_space_size(n) + 1)

    def epsilon_bound(self, n: int) -> float:
        inner = self.left.epsilon_bound(n) + self.right.epsilon_bound(n)
        return 2 * n * n * inner + self.f2.epsilon_bound(self.f2_bound(n))

    def state_bits(self, n: int) -> int:
        return (self.left.state_bits(n) + self.right.state_bits(n)
                + self.f2.state_bits(self.f2_bound(n)))

    def config_bits(self, n: int) -> int:
        return (self.left.config_bits(n) + self.right.config_bits(n)
                + self.f2.config_bits(self.f2_bound(n)))

    def build(self, n: int, seed) -> StreamAutomaton:
        return _FreeProductMachine(self, n, as_rng(seed))


class _FreeProductMachine(StreamAutomaton):
    _START, _IN_LEFT, _IN_RIGHT = 0, 1, 2

    def __init__(self, recipe: FreeProductRecipe, n: int, rng):
        super().__init__(recipe.alphabet, n)
        self.left = recipe.left.build(n, rng.child("left"))
        self.right = recipe.right.build(n, rng.child("right"))
        self.fp = recipe.f2.build(recipe.f2_bound(n), rng.child("f2"))
        self._q_size = recipe.right.state_space_size(n)
        self._left_syms = recipe._left_syms
        fa = self.fp.alphabet
        self._a, self._a_inv = fa.letter("a"), fa.letter("a", True)
        self._b, self._b_inv = fa.letter("b"), fa.letter("b", True)
        self.phase = self._START
        self.seen_right = False
        self._seal()

    def _emit(self, positive: bool) -> None:
        p = self.left.state_index()
        q = self.right.state_index()
        if p == self.left.initial_index or q == self.right.initial_index:
            return
        f = p * self._q_size + q + 1
        self.fp.step_power(self._a_inv, f)
        self.fp.step_power(self._b if positive else self._b_inv, 1)
        self.fp.step_power(self._a, f)

    def _switch(self, letter: Letter) -> bool:
        """Emission bookkeeping; True if the letter belongs to the left factor."""
        if letter.sym in self._left_syms:
            if self.phase == self._IN_RIGHT:
                self._emit(True)
            self.phase = self._IN_LEFT
            return True
        if self.phase == self._IN_LEFT and self.seen_right:
            self._emit(False)
        self.phase = self._IN_RIGHT
        self.seen_right = True
        return False

    def _apply(self, letter: Letter) -> None:
        if self._switch(letter):
            self.left.step(letter)
        else:
            self.right.step(letter)

    def _apply_power(self, letter: Letter, k: int) -> None:
        if self._switch(letter):
            self.left.step_power(letter, k)
        else:
            self.right.step_power(letter, k)

    def _snap(self):
        return (self.left.snapshot(), self.right.snapshot(), self.fp.snapshot(),
                self.phase, self.seen_right)

    def _restore(self, snap) -> None:
        self.left.restore(snap[0])
        self.right.restore(snap[1])
        self.fp.restore(snap[2])
        self.phase = snap[3]
        self.seen_right = snap[4]

    def state_index(self) -> int:
        return pack_fields([
            (self.left.state_index(), self.left.bits),
            (self.right.state_index(), self.right.bits),
            (self.fp.state_index(), self.fp.bits)])

    def layout(self) -> tuple:
        out = [("left.%s" % name, w) for name, w in self.left.layout()]
        out += [("right.%s" % name, w) for name, w in self.right.layout()]
        out += [("f2.%s" % name, w) for name, w in self.fp.layout()]
        return tuple(out)

    def config_layout(self) -> tuple:
        out = [("left.%s" % name, w) for name, w in self.left.config_layout()]
        out += [("right.%s" % name, w) for name, w in self.right.config_layout()]
        out += [("f2.%s" % name, w) for name, w in self.fp.config_layout()]
        return tuple(out)


# -- wreath products ----------------------------------------------------------


def _prime_power(m: int) -> tuple[int, int]:
    if m < 2:
        raise ConstructionError("cyclic factor modulus must be >= 2")
    p = m
    for q in range(2, m + 1):
        if q * q > m:
            break
        if m % q == 0:
            p = q
            break
    k = 0
    rest = m
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise ConstructionError("modulus %d is not a prime power" % m)
    return p, k


class _LampZ:
    """Integer lamp sums as a radix-(n+1) polynomial value mod a random prime."""

    def __init__(self, n: int, d: int, q_size: int, rng):
        lo = max(64, q_size * n ** (d + 1))
        self.p = sample_prime(lo, 2 * lo, rng.child("prime"))
        self.config_width = (2 * lo).bit_length()
        self.width = self.p.bit_length()
        self.base = n + 1
        self.z = 0

    def add(self, gamma: int, q: int, k: int) -> None:
        self.z = (self.z + gamma * k % self.p * pow(self.base, q, self.p)) % self.p

    def snap(self):
        return self.z

    def restore(self, snap) -> None:
        self.z = snap

    def state_fields(self):
        return ((self.z, self.width),)

    def config_fields(self):
        return (("p", self.config_width),)

    @staticmethod
    def widths(n: int, d: int, q_size: int, eps_prime: float) -> tuple[int, int]:
        lo = max(64, q_size * n ** (d + 1))
        w = (2 * lo).bit_length()
        return w, w

    @staticmethod
    def epsilon(n: int, eps: float, d: int, eps_prime: float) -> float:
        return 2 * eps * n * n + max(eps, 1.0 / n ** d)


class _LampZp:
    """Prime-order lamp sums as a polynomial evaluated at random r in F_{p^e}."""

    def __init__(self, n: int, p: int, d: int, q_size: int, rng):
        e = 1
        while p ** e < q_size * n ** d:
            e += 1
        self.field = make_field(p, e)
        self.p = p
        self.width = (p ** e - 1).bit_length()
        self.r = rng.child("point").randrange(0, p ** e - 1)
        self.z = 0
        # r^q per cursor state q; cursors revisit few states per stream
        self._pow_cache: dict[int, int] = {}

    def _r_to(self, q: int) -> int:
        hit = self._pow_cache.get(q)
        if hit is None:
            if len(self._pow_cache) >= 4096:
                self._pow_cache.clear()
            hit = self._pow_cache[q] = self.field.pow(self.r, q)
        return hit

    def add(self, gamma: int, q: int, k: int) -> None:
        coef = gamma * k % self.p
        self.z = self.field.add(self.z, self.field.scale(self._r_to(q), coef))

    def snap(self):
        return self.z

    def restore(self, snap) -> None:
        self.z = snap

    def state_fields(self):
        return ((self.z, self.width),)

    def config_fields(self):
        return (("r", self.width),)

    @staticmethod
    def _e(n: int, p: int, d: int, q_size: int) -> int:
        e = 1
        while p ** e < q_size * n ** d:
            e += 1
        return e

    @classmethod
    def widths(cls, n: int, p: int, d: int, q_size: int) -> tuple[int, int]:
        w = (p ** cls._e(n, p, d, q_size) - 1).bit_length()
        return w, w

    @staticmethod
    def epsilon(n: int, eps: float, d: int, eps_prime: float) -> float:
        return 2 * eps * n * n + max(eps, 1.0 / n ** d)


class _LampZpk:
    """Prime-power lamp sums tracked modulo random monic divisor polynomials.

    Z_{p^k} is not a field, so instead of one evaluation point the machine
    keeps x^q reduced modulo t random monic polynomials of degree D; a
    nonzero lamp polynomial survives at least one divisor with probability
    1 - eps_prime.  Coefficient arrays are (t, D) int64, batched in numpy.
    """

    def __init__(self, n: int, p: int, k: int, eps_prime: float, q_size: int, rng):
        self.modulus = p ** k
        if self.modulus > 1 << 31:
            raise ConstructionError(
                "modulus %d too large for the batched lamp kernel" % self.modulus)
        self.deg = max(1, (4 * (q_size - 1) - 1).bit_length())
        self.count = math.ceil(4 * self.deg * math.log(1.0 / eps_prime))
        self.width = (self.modulus - 1).bit_length()
        draws = rng.child("divisors")
        self.s_low = np.array(
            [[draws.randrange(0, self.modulus - 1) for _ in range(self.deg)]
             for _ in range(self.count)], dtype=np.int64)
        self.q_bits = max(1, (q_size - 1).bit_length())
        self._xpow = self._build_tables()
        self.polys = np.zeros((self.count, self.deg), dtype=np.int64)
        # x^q per cursor state q; consecutive cursor states tend to be
        # numerically close, so a miss is usually one step from a hit
        self._x_cache: dict[int, object] = {}

    def _build_tables(self):
        t, D, M = self.count, self.deg, self.modulus
        x = np.zeros((t, D), dtype=np.int64)
        if D == 1:
            x[:, 0] = (-self.s_low[:, 0]) % M
        else:
            x[:, 1] = 1
        tables = [x]
        for _ in range(1, self.q_bits):
            tables.append(self._mul(tables[-1], tables[-1]))
        return tables

    def _mul(self, a, b):
        t, D, M = self.count, self.deg, self.modulus
        if D == 1:
            return a * b % M
        wide = np.zeros((t, 2 * D - 1), dtype=np.int64)
        for i in range(D):
            wide[:, i:i + D] = (wide[:, i:i + D] + a[:, i:i + 1] * b) % M
        for top in range(2 * D - 2, D - 1, -1):
            coef = wide[:, top]
            wide[:, top - D:top] = (wide[:, top - D:top]
                                    - coef[:, None] * self.s_low) % M
            wide[:, top] = 0
        return wide[:, :D].copy()

    def _x_to(self, q: int):
        t, D, M = self.count, self.deg, self.modulus
        acc = np.zeros((t, D), dtype=np.int64)
        acc[:, 0] = 1
        j = 0
        while q:
            if q & 1:
                acc = self._mul(acc, self._xpow[j])
            q >>= 1
            j += 1
        return acc

    def _x_to_cached(self, q: int):
        hit = self._x_cache.get(q)
        if hit is not None:
            return hit
        if len(self._x_cache) >= 512:
            self._x_cache.clear()
        base = -1
        for qq in self._x_cache:
            if base < qq < q:
                base = qq
        if base >= 0 and (q - base).bit_length() <= 8:
            out = self._mul(self._x_cache[base], self._x_to(q - base))
        else:
            out = self._x_to(q)
        self._x_cache[q] = out
        return out

    def add(self, gamma: int, q: int, k: int) -> None:
        coef = gamma * k % self.modulus
        self.polys = (self.polys + coef * self._x_to_cached(q)) % self.modulus

    def snap(self):
        return self.polys.copy()

    def restore(self, snap) -> None:
        self.polys = snap.copy()

    def state_fields(self):
        packed = pack_fields([(int(v), self.width) for v in self.polys.ravel()])
        return ((packed, self.count * self.deg * self.width),)

    def config_fields(self):
        return (("divisors", self.count * self.deg * self.width),)

    @staticmethod
    def shape(q_size: int, eps_prime: float) -> tuple[int, int]:
        deg = max(1, (4 * (q_size - 1) - 1).bit_length())
        return deg, math.ceil(4 * deg * math.log(1.0 / eps_prime))

    @classmethod
    def widths(cls, p: int, k: int, q_size: int, eps_prime: float) -> tuple[int, int]:
        deg, count = cls.shape(q_size, eps_prime)
        w = count * deg * (p ** k - 1).bit_length()
        return w, w

    @staticmethod
    def epsilon(n: int, eps: float, d: int, eps_prime: float) -> float:
        return 2 * eps * n * n + eps_prime


class WreathAbelianRecipe(Recipe):
    """Wreath product (product of Z and Z_{p^k} factors) over a cursor machine.

    One shared cursor machine tracks the inner group; each lamp factor
    keeps its own accumulator keyed by the cursor's state index.  Equal
    cursor elements always share a state, so lamp contributions at equal
    positions merge exactly; distinct positions collide with probability
    folded into the per-factor error terms, which sum.
    """

    def __init__(self, inner: Recipe, factors: Sequence[int],
                 lamp_names: Sequence[str], d: int = 2, eps_prime: float = 0.05):
        self.injective = inner.injective
        if not factors:
            raise ConstructionError("wreath lamp needs at least one factor")
        if len(factors) != len(lamp_names):
            raise ConstructionError("one lamp letter per factor required")
        if not 0.0 < eps_prime < 1.0:
            raise ConstructionError("eps_prime must be in (0, 1)")
        if d < 1:
            raise ConstructionError("error exponent d must be >= 1")
        self.inner = inner
        self.d = d
        self.eps_prime = eps_prime
        self._factors = []
        self_inverse = []
        for modulus, name in zip(factors, lamp_names):
            if modulus == 0:
                self._factors.append(("Z", None))
            else:
                p, k = _prime_power(modulus)
                self._factors.append(("Zp", p) if k == 1 else ("Zpk", (p, k)))
                if modulus == 2:
                    self_inverse.append(name)
        self.lamp_names = tuple(lamp_names)
        lamp_alpha = Alphabet(self.lamp_names, self_inverse=self_inverse)
        self.alphabet = disjoint_union(lamp_alpha, inner.alphabet)
        self._lamp_index = {name: i for i, name in enumerate(self.lamp_names)}

    def describe(self) -> str:
        parts = []
        for kind, arg in self._factors:
            if kind == "Z":
                parts.append("Z")
            elif kind == "Zp":
                parts.append("Z%d" % arg)
            else:
                parts.append("Z%d" % (arg[0] ** arg[1]))
        return "wreath(%s | %s)" % ("x".join(parts), self.inner.describe())

    def _factor_widths(self, n: int) -> list[tuple[int, int]]:
        q_size = self.inner.state_space_size(n)
        out = []
        for kind, arg in self._factors:
            if kind == "Z":
                out.append(_LampZ.widths(n, self.d, q_size, self.eps_prime))
            elif kind == "Zp":
                out.append(_LampZp.widths(n, arg, self.d, q_size))
            else:
                p, k = arg
                out.append(_LampZpk.widths(p, k, q_size, self.eps_prime))
        return out

    def epsilon_bound(self, n: int) -> float:
        eps = self.inner.epsilon_bound(n)
        total = 0.0
        for kind, _ in self._factors:
            cls = {"Z": _LampZ, "Zp": _LampZp, "Zpk": _LampZpk}[kind]
            total += cls.epsilon(n, eps, self.d, self.eps_prime)
        return total

    def state_bits(self, n: int) -> int:
        return self.inner.state_bits(n) + sum(w for w, _ in self._factor_widths(n))

    def config_bits(self, n: int) -> int:
        return self.inner.config_bits(n) + sum(w for _, w in self._factor_widths(n))

    def build(self, n: int, seed) -> StreamAutomaton:
        return _WreathMachine(self, n, as_rng(seed))


class _WreathMachine(StreamAutomaton):
    def __init__(self, recipe: WreathAbelianRecipe, n: int, rng):
        super().__init__(recipe.alphabet, n)
        self.cursor = recipe.inner.build(n, rng.child("cursor"))
        q_size = recipe.inner.state_space_size(n)
        self.lamps = []
        for i, (kind, arg) in enumerate(recipe._factors):
            child = rng.child_index("lamp", i)
            if kind == "Z":
                self.lamps.append(_LampZ(n, recipe.d, q_size, child))
            elif kind == "Zp":
                self.lamps.append(_LampZp(n, arg, recipe.d, q_size, child))
            else:
                p, k = arg
                self.lamps.append(_LampZpk(n, p, k, recipe.eps_prime, q_size, child))
        self._lamp_index = recipe._lamp_index
        self._seal()

    def _route(self, letter: Letter, k: int) -> None:
        i = self._lamp_index.get(letter.sym)
        if i is None:
            if k == 1:
                self.cursor.step(letter)
            else:
                self.cursor.step_power(letter, k)
        else:
            gamma = -1 if letter.inv else 1
            self.lamps[i].add(gamma, self.cursor.state_index(), k)

    def _apply(self, letter: Letter) -> None:
        self._route(letter, 1)

    def _apply_power(self, letter: Letter, k: int) -> None:
        self._route(letter, k)

    def _snap(self):
        return (self.cursor.snapshot(), tuple(l.snap() for l in self.lamps))

    def _restore(self, snap) -> None:
        self.cursor.restore(snap[0])
        for lamp, s in zip(self.lamps, snap[1]):
            lamp.restore(s)

    def state_index(self) -> int:
        fields = [(self.cursor.state_index(), self.cursor.bits)]
        for lamp in self.lamps:
            fields.extend(lamp.state_fields())
        return pack_fields(fields)

    def layout(self) -> tuple:
        out = [("cursor.%s" % name, w) for name, w in self.cursor.layout()]
        for i, lamp in enumerate(self.lamps):
            out.extend(("lamp%d" % i, w) for _, w in lamp.state_fields())
        return tuple(out)

    def config_layout(self) -> tuple:
        out = [("cursor.%s" % name, w) for name, w in self.cursor.config_layout()]
        for i, lamp in enumerate(self.lamps):
            out.extend(("lamp%d.%s" % (i, name), w) for name, w in lamp.config_fields())
        return tuple(out)


class WreathZRecipe(WreathAbelianRecipe):
    """Lamp group Z over a cursor machine."""

    def __init__(self, inner: Recipe, d: int = 2, lamp_name: str = "a"):
        super().__init__(inner, (0,), (lamp_name,), d=d)


class WreathZpRecipe(WreathAbelianRecipe):
    """Lamp group Z_p, p prime, over a cursor machine."""

    def __init__(self, inner: Recipe, p: int, d: int = 2, lamp_name: str = "a"):
        if not is_probable_prime(p):
            raise ConstructionError("%d is not prime" % p)
        super().__init__(inner, (p,), (lamp_name,), d=d)


class WreathZpkRecipe(WreathAbelianRecipe):
    """Lamp group Z_{p^k} with k >= 2 over a cursor machine."""

    def __init__(self, inner: Recipe, p: int, k: int, eps_prime: float = 0.05,
                 lamp_name: str = "a"):
        if not is_probable_prime(p):
            raise ConstructionError("%d is not prime" % p)
        if k < 2:
            raise ConstructionError("use the prime-field lamp for k = 1")
        super().__init__(inner, (p ** k,), (lamp_name,), eps_prime=eps_prime)


class WreathFiniteRecipe(Recipe):
    """Wreath product of a machine-decidable lamp group by a finite cursor.

    One independent lamp-machine copy per cursor element; lamp letters go
    to the copy at the current cursor, cursor letters multiply in the
    table exactly.  Error is |cursor| times the lamp machine's bound.
    """

    def __init__(self, inner: Recipe, table: FiniteGroup):
        self.inner = inner
        self.table = table
        self.alphabet = disjoint_union(inner.alphabet, table.alphabet)
        self.size = len(table.element_names)
        self.injective = inner.injective

    def describe(self) -> str:
        return "wreath_finite(%s | %d elements)" % (self.inner.describe(), self.size)

    def epsilon_bound(self, n: int) -> float:
        return self.size * self.inner.epsilon_bound(n)

    def _cursor_width(self) -> int:
        return max(1, (self.size - 1).bit_length())

    def state_bits(self, n: int) -> int:
        return self.size * self.inner.state_bits(n) + self._cursor_width()

    def config_bits(self, n: int) -> int:
        return self.size * self.inner.config_bits(n)

    def build(self, n: int, seed) -> StreamAutomaton:
        return _WreathFiniteMachine(self, n, as_rng(seed))


class _WreathFiniteMachine(StreamAutomaton):
    def __init__(self, recipe: WreathFiniteRecipe, n: int, rng):
        super().__init__(recipe.alphabet, n)
        self.table = recipe.table
        self.copies = [recipe.inner.build(n, rng.child_index("copy", i))
                       for i in range(recipe.size)]
        self._lamp_syms = frozenset(recipe.inner.alphabet.names)
        self.cursor = 0
        self._width = recipe._cursor_width()
        self._seal()

    def _apply(self, letter: Letter) -> None:
        if letter.sym in self._lamp_syms:
            self.copies[self.cursor].step(letter)
        else:
            self.cursor = self.table.mul(self.cursor, self.table.gen(letter))

    def _apply_power(self, letter: Letter, k: int) -> None:
        if letter.sym in self._lamp_syms:
            self.copies[self.cursor].step_power(letter, k)
            return
        g = self.table.gen(letter)
        orbit = [self.cursor]
        nxt = self.table.mul(self.cursor, g)
        while nxt != orbit[0]:
            orbit.append(nxt)
            nxt = self.table.mul(nxt, g)
        self.cursor = orbit[k % len(orbit)]

    def _snap(self):
        return (self.cursor, tuple(c.snapshot() for c in self.copies))

    def _restore(self, snap) -> None:
        self.cursor = snap[0]
        for c, s in zip(self.copies, snap[1]):
            c.restore(s)

    def state_index(self) -> int:
        fields = [(self.cursor, self._width)]
        fields.extend((c.state_index(), c.bits) for c in self.copies)
        return pack_fields(fields)

    def layout(self) -> tuple:
        out = [("cursor", self._width)]
        for i, c in enumerate(self.copies):
            out.extend(("copy%d.%s" % (i, name), w) for name, w in c.layout())
        return tuple(out)

    def config_layout(self) -> tuple:
        out = []
        for i, c in enumerate(self.copies):
            out.extend(("copy%d.%s" % (i, name), w) for name, w in c.config_layout())
        return tuple(out)
