"""Streaming-automaton contract and the identity-decision procedure.

A machine consumes all randomness at construction; transitions are
deterministic afterwards.  The compared state is exposed as a packed
little-endian integer (state_index), whose field layout the machine
publishes; frozen randomness (primes, evaluation points) is accounted
separately as configuration bits so that space reporting can split
"evolving state" from "sampled constants".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import AlphabetError, StreamOverflowError
from .rng import Rng
from .words import Alphabet, Letter, Word


def as_rng(seed) -> Rng:
    return seed if isinstance(seed, Rng) else Rng(seed)


def pack_fields(fields) -> int:
    """Pack (value, width) pairs little-endian: first field at bit 0."""
    acc = 0
    shift = 0
    for value, width in fields:
        if not 0 <= value < (1 << width):
            raise ValueError("field value %d does not fit in %d bits" % (value, width))
        acc |= value << shift
        shift += width
    return acc


class StreamAutomaton:
    def __init__(self, alphabet: Alphabet, n: int):
        if n < 1:
            raise ValueError("length bound must be >= 1")
        self.alphabet = alphabet
        self.n = n
        self.letters_read = 0
        self._initial_index: int | None = None

    def _seal(self) -> None:
        """Record the freshly sampled initial state; call at the end of __init__."""
        self._initial_index = self.state_index()

    @property
    def initial_index(self) -> int:
        if self._initial_index is None:
            raise RuntimeError("machine not sealed")
        return self._initial_index

    # -- transitions -----------------------------------------------------------

    def _apply(self, letter: Letter) -> None:
        raise NotImplementedError

    def _apply_power(self, letter: Letter, k: int) -> None:
        # Default is iteration; machines whose transition is a monoid
        # right-multiplication override this with an O(log k) version.
        for _ in range(k):
            self._apply(letter)

    def _check(self, letter: Letter, k: int) -> None:
        if letter not in self.alphabet:
            raise AlphabetError("letter %s not in machine alphabet" % letter)
        if self.letters_read + k > self.n:
            raise StreamOverflowError(
                "stream exceeds bound n=%d (read %d, stepping %d)"
                % (self.n, self.letters_read, k))

    def step(self, letter: Letter) -> None:
        self._check(letter, 1)
        self._apply(letter)
        self.letters_read += 1

    def step_power(self, letter: Letter, k: int) -> None:
        if k < 0:
            raise ValueError("power must be nonnegative")
        self._check(letter, k)
        if k:
            self._apply_power(letter, k)
            self.letters_read += k

    def read(self, word: Sequence[Letter]) -> None:
        for letter in word:
            self.step(letter)

    # -- state capture -------------------------------------------------------

    def _snap(self):
        raise NotImplementedError

    def _restore(self, snap) -> None:
        raise NotImplementedError

    def snapshot(self):
        """Opaque copy of the mutable state, for rewinding between runs."""
        return (self.letters_read, self._snap())

    def restore(self, snap) -> None:
        self.letters_read = snap[0]
        self._restore(snap[1])

    # -- state accounting --------------------------------------------------------

    def state_index(self) -> int:
        raise NotImplementedError

    def layout(self) -> tuple:
        """Packed field layout of the compared state: ((name, bits), ...)."""
        raise NotImplementedError

    def config_layout(self) -> tuple:
        """Field layout of the frozen randomness: ((name, bits), ...)."""
        return ()

    @property
    def bits(self) -> int:
        return sum(w for _, w in self.layout())

    @property
    def config_bits(self) -> int:
        return sum(w for _, w in self.config_layout())


class Recipe:
    """Immutable build instructions for a streaming automaton family."""

    alphabet: Alphabet
    injective = True  # one-sided: oracle-equal words never separate

    def build(self, n: int, seed) -> StreamAutomaton:
        raise NotImplementedError

    def epsilon_bound(self, n: int) -> float:
        raise NotImplementedError

    def state_bits(self, n: int) -> int:
        """Worst-case packed state width, deterministic in n."""
        raise NotImplementedError

    def config_bits(self, n: int) -> int:
        """Worst-case frozen-randomness width, deterministic in n."""
        raise NotImplementedError

    def space_bits(self, n: int) -> int:
        return self.state_bits(n) + self.config_bits(n)

    def state_space_size(self, n: int) -> int:
        """|Q_n| as the combinator layer sees it: 2^state_bits(n)."""
        return 1 << self.state_bits(n)

    def describe(self) -> str:
        return type(self).__name__


@dataclass(frozen=True)
class DecisionResult:
    accept: bool
    bits_used: int
    letters_read: int


def decide_identity(recipe: Recipe, n: int, seed, word: Word) -> DecisionResult:
    """Accept iff the final state equals the recorded initial state.

    bits_used counts two state copies (initial and current) plus the
    machine's frozen configuration.
    """
    machine = recipe.build(n, seed)
    machine.read(word)
    accept = machine.state_index() == machine.initial_index
    return DecisionResult(
        accept=accept,
        bits_used=2 * machine.bits + machine.config_bits,
        letters_read=machine.letters_read,
    )
