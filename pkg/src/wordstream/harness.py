"""Monte-Carlo error measurement against exact oracles, plus the
adversarial word families that witness the streaming lower bounds.

estimate_error replays oracle-labeled word pairs through freshly seeded
machines and compares the observed separation/collision rate with the
recipe's stated bound.  Reports are reproducible bit for bit from
(seed, configuration).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import ConstructionError, GenerationError
from .exact.base import ExactGroup
from .exact.grigorchuk import GrigorchukGroup
from .exact.wreath import WreathGroup
from .rng import Rng
from .streaming import Recipe
from .words import Alphabet, Letter, Word

# two-sided 99% normal quantile
Z99 = 2.5758293035489004


class PairKind(Enum):
    EQUAL = "equal"
    UNEQUAL = "unequal"
    DISJOINTNESS = "disjointness"
    GRIGORCHUK = "grigorchuk"


@dataclass(frozen=True)
class ErrorReport:
    spec: str
    n: int
    kind: str
    trials: int
    failures: int
    estimate: float
    ci: float
    bound: float
    passed: bool

    def to_json(self) -> str:
        return json.dumps({
            "spec": self.spec,
            "n": self.n,
            "kind": self.kind,
            "trials": self.trials,
            "failures": self.failures,
            "estimate": self.estimate,
            "ci": self.ci,
            "bound": self.bound,
            "pass": self.passed,
        })

    def to_csv(self) -> str:
        head = "spec,n,kind,trials,failures,estimate,ci,bound,pass"
        row = "%s,%d,%s,%d,%d,%.9g,%.9g,%.9g,%s" % (
            self.spec.replace(",", ";"), self.n, self.kind, self.trials,
            self.failures, self.estimate, self.ci, self.bound,
            "true" if self.passed else "false")
        return head + "\n" + row + "\n"


def wilson_halfwidth(failures: int, trials: int, z: float = Z99) -> float:
    """Half-width of the Wilson score interval around failures/trials."""
    if trials <= 0:
        raise ValueError("trials must be positive")
    p = failures / trials
    zz = z * z / trials
    return (z / (1.0 + zz)) * math.sqrt(p * (1.0 - p) / trials + zz / (4 * trials))


def _identity_insertions(group: ExactGroup) -> list[Word]:
    """Words evaluating to 1: cancelling pairs plus the group's relators."""
    pool: list[Word] = []
    alphabet = group.alphabet
    for letter in alphabet.letters:
        pool.append((letter, alphabet.inverse(letter)))
    for rel in group.relators():
        pool.append(tuple(rel))
        pool.append(alphabet.inverse_word(rel))
    return pool


def gen_word_pair(group: ExactGroup, kind: PairKind, max_len: int, rng: Rng):
    """One oracle-verified pair (u, v, truth) with |u|, |v| <= max_len.

    Adversarial kinds return the instance word paired with the empty word,
    so the caller's two-run comparison degenerates to an identity check.
    """
    if max_len < 2:
        raise ValueError("max_len must be >= 2")
    if kind is PairKind.EQUAL:
        return _gen_equal_pair(group, max_len, rng)
    if kind is PairKind.UNEQUAL:
        return _gen_unequal_pair(group, max_len, rng)
    if kind is PairKind.DISJOINTNESS:
        if not isinstance(group, WreathGroup):
            raise ConstructionError("disjointness pairs need a wreath-product oracle")
        m = max(1, (max_len // 4 + 2) // 3)
        u_bits = tuple(rng.bits(1) for _ in range(m))
        v_bits = tuple(rng.bits(1) for _ in range(m))
        word, truth = disjointness_instance(u_bits, v_bits, group)
        return word, (), truth
    if kind is PairKind.GRIGORCHUK:
        if not isinstance(group, GrigorchukGroup):
            raise ConstructionError("grigorchuk pairs need the Grigorchuk oracle")
        # worst case: every phi_k entry expands to 4^k letters, 2^k entries
        # per block, 4 blocks, times 8 tree letters per {t,v,w}-letter
        k = 1
        while 32 * 8 ** (k + 1) <= max_len:
            k += 1
        if 32 * 8 ** k > max_len:
            raise GenerationError("max_len %d too small for a k=1 instance" % max_len)
        m = 2 ** k
        x_bits = tuple(rng.bits(1) for _ in range(m))
        y_bits = tuple(rng.bits(1) for _ in range(m))
        word, truth = grigorchuk_instance(x_bits, y_bits, oracle=group)
        return word, (), truth
    raise ValueError("unknown pair kind %r" % kind)


def _gen_equal_pair(group: ExactGroup, max_len: int, rng: Rng):
    pool = _identity_insertions(group)
    base_cap = max_len - min(len(w) for w in pool)
    u = group.alphabet.random_word(rng, rng.randrange(0, max(0, base_cap // 2)))
    v = list(u)
    inserted = 0
    goal = 1 + rng.randrange(0, 3)
    while inserted < goal:
        choices = [w for w in pool if len(v) + len(w) <= max_len]
        if not choices:
            break
        ins = rng.choice(choices)
        at = rng.randrange(0, len(v))
        v[at:at] = ins
        inserted += 1
    if inserted == 0:
        raise GenerationError("no identity insertion fits in max_len %d" % max_len)
    v = tuple(v)
    if not group.equal(group.evaluate(u), group.evaluate(v)):
        raise GenerationError("identity insertion failed oracle verification")
    return u, v, True


def _gen_unequal_pair(group: ExactGroup, max_len: int, rng: Rng):
    for _ in range(200):
        u = group.alphabet.random_word(rng, rng.randrange(0, max_len))
        v = group.alphabet.random_word(rng, rng.randrange(0, max_len))
        if u == v:
            continue
        if not group.equal(group.evaluate(u), group.evaluate(v)):
            return u, v, False
    raise GenerationError("no oracle-unequal pair found in 200 attempts")


def estimate_error(recipe: Recipe, oracle: ExactGroup, kind: PairKind,
                   n: int, trials: int, seed,
                   max_len: int | None = None,
                   machine_seeds: int | None = None) -> ErrorReport:
    """Observed separation (equal pairs) or collision (unequal pairs) rate.

    Trial t reads pair t into a machine seeded by stream t % machine_seeds;
    the pair words are bounded by max_len (default n, the machine bound).
    """
    if trials < 100:
        raise ValueError("trials must be >= 100 for a meaningful interval")
    if max_len is None:
        max_len = n
    if machine_seeds is None:
        machine_seeds = trials
    root = Rng(seed) if not isinstance(seed, Rng) else seed
    failures = 0
    machines: dict = {}
    for t in range(trials):
        pair_rng = root.child_index("pair", t)
        u, v, truth = gen_word_pair(oracle, kind, max_len, pair_rng)
        idx = t % machine_seeds
        cached = machines.get(idx)
        if cached is None:
            machine = recipe.build(n, root.child_index("machine", idx))
            cached = machines[idx] = (machine, machine.snapshot())
        machine, snap = cached
        machine.restore(snap)
        machine.read(u)
        su = machine.state_index()
        machine.restore(snap)
        machine.read(v)
        sv = machine.state_index()
        if truth:
            failures += su != sv
        else:
            failures += su == sv
    estimate = failures / trials
    ci = wilson_halfwidth(failures, trials)
    bound = recipe.epsilon_bound(n)
    return ErrorReport(
        spec=recipe.describe(), n=n, kind=kind.value, trials=trials,
        failures=failures, estimate=estimate, ci=ci, bound=bound,
        passed=estimate - ci <= 2 * bound)


# -- adversarial instances ---------------------------------------------------


def _parse_bits(bits) -> tuple[int, ...]:
    if isinstance(bits, str):
        if not all(ch in "01" for ch in bits):
            raise ValueError("bitstring must be over {0,1}, got %r" % bits)
        return tuple(int(ch) for ch in bits)
    out = tuple(int(b) for b in bits)
    if not all(b in (0, 1) for b in out):
        raise ValueError("bitstring entries must be 0 or 1")
    return out


def disjointness_instance(u, v, wreath: WreathGroup,
                          g_name: str | None = None,
                          h_name: str | None = None,
                          ray_name: str | None = None):
    """The word u[g] v[h] u[g-] v[h-] over the wreath product's generators.

    u[x] interleaves x^{u_i} with ray steps and returns the cursor to the
    origin; the product is the identity iff no position carries a 1 in
    both bitstrings (then the non-commuting lamp values never meet).
    """
    u = _parse_bits(u)
    v = _parse_bits(v)
    if len(u) != len(v) or not u:
        raise ValueError("bitstrings must have equal positive length")
    m = len(u)
    lamp_names = wreath.lamp.alphabet.names
    if g_name is None or h_name is None:
        if len(lamp_names) < 2:
            raise ConstructionError("lamp group needs two generators")
        g_name, h_name = lamp_names[0], lamp_names[1]
    if ray_name is None:
        ray_name = wreath.cursor.alphabet.names[0]

    lamp = wreath.lamp
    g = lamp.gen(lamp.alphabet.letter(g_name))
    h = lamp.gen(lamp.alphabet.letter(h_name))
    if lamp.equal(lamp.mul(g, h), lamp.mul(h, g)):
        raise ConstructionError("lamp letters %s, %s commute; need [g,h] != 1"
                                % (g_name, h_name))

    cursor = wreath.cursor
    step = cursor.gen(cursor.alphabet.letter(ray_name))
    seen = {cursor.key(cursor.identity)}
    pos = cursor.identity
    for _ in range(m - 1):
        pos = cursor.mul(pos, step)
        key = cursor.key(pos)
        if key in seen:
            raise GenerationError("ray word has repeated prefixes")
        seen.add(key)

    alphabet = wreath.alphabet
    ray = alphabet.letter(ray_name)
    ray_back = alphabet.inverse_word((ray,) * (m - 1))

    def block(bits, letter: Letter) -> list[Letter]:
        out = []
        for i, bit in enumerate(bits):
            if bit:
                out.append(letter)
            if i < m - 1:
                out.append(ray)
        out.extend(ray_back)
        return out

    gl = alphabet.letter(g_name)
    hl = alphabet.letter(h_name)
    word = tuple(block(u, gl) + block(v, hl)
                 + block(u, alphabet.inverse(gl)) + block(v, alphabet.inverse(hl)))
    truth = wreath.is_identity(wreath.evaluate(word))
    return word, truth


# -- Grigorchuk instances ----------------------------------------------------

TVW_ALPHABET = Alphabet(("t", "v", "w"))

# images of (x, 1) and (1, y) under the pairing homomorphism on the
# index-2^k subgroup generated by t = (ab)^2, v = (bada)^2, w = (abad)^2
_PHI_FIRST = {
    "t": TVW_ALPHABET.parse_word("v"),
    "v": TVW_ALPHABET.parse_word("v- t- v t"),
    "w": TVW_ALPHABET.parse_word("v t v- t-"),
}
_PHI_SECOND = {
    "t": TVW_ALPHABET.parse_word("w"),
    "v": TVW_ALPHABET.parse_word("w- t w t-"),
    "w": TVW_ALPHABET.parse_word("w t- w- t"),
}

_TVW_EXPANSION = {
    "t": "a b a b",
    "v": "b a d a b a d a",
    "w": "a b a d a b a d",
}


def _phi_branch(word: Word, table) -> list[Letter]:
    out: list[Letter] = []
    for letter in word:
        img = table[letter.sym]
        if letter.inv:
            img = TVW_ALPHABET.inverse_word(img)
        out.extend(img)
    return out


def _parse_tvw(entry) -> Word:
    if isinstance(entry, str):
        if entry in ("", "1"):
            return ()
        return TVW_ALPHABET.parse_word(entry)
    return tuple(TVW_ALPHABET.require(a) for a in entry)


def grigorchuk_phi(entries: Sequence, k: int) -> Word:
    """phi_k applied to a 2^k-tuple of short words over {t, v, w}.

    Entries may be strings ("t-", "1") or letter sequences.  The word is
    produced by recursive substitution, left halves through the (x, 1)
    images and right halves through the (1, y) images.
    """
    if len(entries) != 2 ** k:
        raise ValueError("phi_%d needs a tuple of length %d, got %d"
                         % (k, 2 ** k, len(entries)))
    words = [_parse_tvw(e) for e in entries]

    def rec(seg: list) -> Word:
        if len(seg) == 1:
            return seg[0]
        half = len(seg) // 2
        left = rec(seg[:half])
        right = rec(seg[half:])
        return tuple(_phi_branch(left, _PHI_FIRST) + _phi_branch(right, _PHI_SECOND))

    return rec(words)


def expand_grigorchuk_word(word: Word, alphabet: Alphabet) -> Word:
    """Rewrite a {t,v,w}-word over the tree generators a, b, c, d."""
    out: list[Letter] = []
    for letter in word:
        img = alphabet.parse_word(_TVW_EXPANSION[letter.sym])
        if letter.inv:
            img = alphabet.inverse_word(img)
        out.extend(img)
    return tuple(out)


def grigorchuk_instance(x, y, oracle: GrigorchukGroup | None = None):
    """The word x[t] y[v] x[t-] y[v-], expanded to the tree generators.

    Bitstring length must be a power of two; the tuple entries feed
    grigorchuk_phi.  Identity truth comes from the section oracle.
    """
    x = _parse_bits(x)
    y = _parse_bits(y)
    if len(x) != len(y) or not x:
        raise ValueError("bitstrings must have equal positive length")
    m = len(x)
    k = m.bit_length() - 1
    if 2 ** k != m:
        raise ValueError("bitstring length %d is not a power of two" % m)
    if oracle is None:
        oracle = GrigorchukGroup()

    def image(bits, name: str, inv: bool) -> Word:
        letter = TVW_ALPHABET.letter(name, inv)
        return grigorchuk_phi([(letter,) if b else () for b in bits], k)

    tvw = (image(x, "t", False) + image(y, "v", False)
           + image(x, "t", True) + image(y, "v", True))
    word = expand_grigorchuk_word(tvw, oracle.alphabet)
    truth = oracle.is_identity(oracle.evaluate(word))
    return word, truth
