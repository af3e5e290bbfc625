"""The first Grigorchuk group as an automorphism group of the binary tree.

Elements are reduced words over the involutions a, b, c, d.  Reduction
cancels doubled letters and folds products within the Klein four-group
{1, b, c, d}.  Reduced words are not canonical; canonical keys are pruned
portraits computed through the section maps

    b = (a, c)    c = (a, d)    d = (1, b)

with a swapping the two subtrees.  Triviality of a word is decided by
recursing on sections, which contract word length, so the recursion
terminates; a depth cap guards against misuse.

The module also provides the action on finite truncations of the tree as an
independent cross-check: word_permutation() returns the leaf permutation at
a given depth.
"""

from __future__ import annotations

from ..errors import ResourceLimitError
from ..words import Alphabet, Word
from .base import ExactGroup

_THIRD = {
    ("b", "c"): "d", ("c", "b"): "d",
    ("b", "d"): "c", ("d", "b"): "c",
    ("c", "d"): "b", ("d", "c"): "b",
}

SECTIONS = {"b": ("a", "c"), "c": ("a", "d"), "d": (None, "b")}

DEPTH_CAP = 64


def reduce_word(syms) -> tuple:
    stack: list[str] = []
    for s in syms:
        cur: str | None = s
        while stack and cur is not None:
            top = stack[-1]
            if top == cur:
                stack.pop()
                cur = None
            elif top != "a" and cur != "a":
                stack.pop()
                cur = _THIRD[(top, cur)]
            else:
                break
        if cur is not None:
            stack.append(cur)
    return tuple(stack)


def _sections(word):
    """Both sections of a reduced word with an even number of a's."""
    s = 0
    w0: list[str] = []
    w1: list[str] = []
    for sym in word:
        if sym == "a":
            s ^= 1
            continue
        u, v = SECTIONS[sym]
        if s:
            u, v = v, u
        if u is not None:
            w0.append(u)
        if v is not None:
            w1.append(v)
    return reduce_word(w0), reduce_word(w1)


class GrigorchukGroup(ExactGroup):
    kind = "grigorchuk"
    data_canonical = False
    data_orderable = False

    def __init__(self):
        names = ("a", "b", "c", "d")
        super().__init__(Alphabet(names, self_inverse=names))
        self._set_gens({n: (n,) for n in names})
        self._trivial_cache: dict[tuple, bool] = {(): True}

    @property
    def identity(self):
        return ()

    def mul(self, x, y):
        return reduce_word(x + y)

    def inv(self, x):
        return tuple(reversed(x))

    def is_trivial(self, word, _depth: int = 0) -> bool:
        word = reduce_word(word)
        cached = self._trivial_cache.get(word)
        if cached is not None:
            return cached
        if _depth > DEPTH_CAP:
            raise ResourceLimitError("triviality recursion exceeded depth %d"
                                     % DEPTH_CAP)
        if len(word) == 1:
            out = False
        else:
            na = word.count("a")
            nb = word.count("b")
            nc = word.count("c")
            nd = word.count("d")
            if na % 2 or (nb + nd) % 2 or (nc + nd) % 2:
                out = False
            else:
                w0, w1 = _sections(word)
                out = (self.is_trivial(w0, _depth + 1)
                       and self.is_trivial(w1, _depth + 1))
        self._trivial_cache[word] = out
        return out

    def is_identity(self, x) -> bool:
        return self.is_trivial(x)

    def equal(self, x, y) -> bool:
        return self.is_trivial(x + self.inv(y))

    def portrait(self, word, _depth: int = 0):
        """Pruned portrait: 'e' or a generator name at recognized subtrees,
        else (swap_bit, left_portrait, right_portrait)."""
        if _depth > DEPTH_CAP:
            raise ResourceLimitError("portrait recursion exceeded depth %d"
                                     % DEPTH_CAP)
        word = reduce_word(word)
        if self.is_trivial(word):
            return "e"
        for g in ("a", "b", "c", "d"):
            if self.is_trivial(word + (g,)):
                return g
        if word.count("a") % 2:
            bit = 1
            word = reduce_word(word + ("a",))
        else:
            bit = 0
        w0, w1 = _sections(word)
        return (bit, self.portrait(w0, _depth + 1), self.portrait(w1, _depth + 1))

    def key_data(self, x):
        return self.portrait(x)

    def relators(self) -> tuple[Word, ...]:
        words = ("b c d", "a d a d a d a d")
        return tuple(self.alphabet.parse_word(w) for w in words)


# -- action on depth-truncated trees -------------------------------------------

_PERM_CACHE: dict[tuple[str, int], tuple] = {}


def gen_permutation(sym: str, depth: int) -> tuple:
    """Leaf permutation of the generator at the given truncation depth.
    Leaves are indexed with the first tree level as the top bit."""
    if depth == 0:
        return (0,)
    hit = _PERM_CACHE.get((sym, depth))
    if hit is not None:
        return hit
    half = 1 << (depth - 1)
    if sym == "a":
        out = tuple((i ^ half) for i in range(1 << depth))
    else:
        lsym, rsym = SECTIONS[sym]
        left = gen_permutation(lsym, depth - 1) if lsym else tuple(range(half))
        right = gen_permutation(rsym, depth - 1) if rsym else tuple(range(half))
        out = tuple(left) + tuple(v + half for v in right)
    _PERM_CACHE[(sym, depth)] = out
    return out


def word_permutation(syms, depth: int) -> tuple:
    acc = list(range(1 << depth))
    for sym in syms:
        p = gen_permutation(sym, depth)
        acc = [acc[v] for v in p]
    return tuple(acc)
