"""Cayley-ball growth tables and the deterministic ball DFA.

compute_ball runs breadth-first search from the identity over generator
edges of an exact oracle.  The DFA built on the radius-floor(n/2) ball
decides the word problem exactly for words of length at most n: for even
n the missing edges become spurious transitions into a fixed boundary
element, for odd n they go to an absorbing failure state.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import ResourceLimitError, StreamOverflowError
from .exact.base import ExactGroup
from .words import Letter

DEFAULT_ELEMENT_CAP = 10_000_000


@dataclass(frozen=True)
class GrowthTable:
    """Cumulative ball sizes gamma(0), ..., gamma(radius) of a marked group."""

    counts: tuple[int, ...]

    @property
    def radius(self) -> int:
        return len(self.counts) - 1

    def gamma(self, r: int) -> int:
        return self.counts[r]

    def rows(self) -> list[tuple[int, int, float]]:
        return [(r, g, math.log2(g)) for r, g in enumerate(self.counts)]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(("radius", "gamma", "log2_gamma"))
        for r, g, lg in self.rows():
            writer.writerow((r, g, "%.6f" % lg))
        return buf.getvalue()


def _ball_search(group: ExactGroup, radius: int, max_elements: int):
    """BFS out to the given radius.

    Returns (elements in discovery order, distances, counts) where
    counts[r] = gamma(r).  Stops early once the ball saturates.
    """
    if radius < 0:
        raise ValueError("radius must be >= 0")
    ident = group.identity
    elements = [ident]
    dist = [0]
    seen = {group.key_data(ident)}
    letters = group.alphabet.letters
    start = 0
    for r in range(1, radius + 1):
        stop = len(elements)
        if start == stop:
            break
        for i in range(start, stop):
            g = elements[i]
            for a in letters:
                h = group.mul(g, group.gen(a))
                k = group.key_data(h)
                if k in seen:
                    continue
                if len(elements) >= max_elements:
                    raise ResourceLimitError(
                        "ball exceeds %d elements at radius %d" % (max_elements, r))
                seen.add(k)
                elements.append(h)
                dist.append(r)
        start = stop
    counts = [0] * (radius + 1)
    for d in dist:
        counts[d] += 1
    for r in range(1, radius + 1):
        counts[r] += counts[r - 1]
    return elements, dist, counts


def compute_ball(group: ExactGroup, radius: int,
                 max_elements: int = DEFAULT_ELEMENT_CAP):
    """Growth table plus the ball elements themselves, in BFS order."""
    elements, _, counts = _ball_search(group, radius, max_elements)
    return GrowthTable(tuple(counts)), elements


def compute_growth(group: ExactGroup, radius: int,
                   max_elements: int = DEFAULT_ELEMENT_CAP) -> GrowthTable:
    table, _ = compute_ball(group, radius, max_elements)
    return table


class BallAutomaton:
    """Exact DFA on the radius-floor(n/2) ball for words of length <= n.

    States are ball elements in BFS order (identity = state 0 = the only
    accepting state), plus an absorbing failure state when n is odd.
    """

    def __init__(self, alphabet, n: int, transitions, distances,
                 spurious_target, failure_index):
        self.alphabet = alphabet
        self.n = n
        self.transitions = transitions
        self.distances = distances
        self.spurious_target = spurious_target
        self.failure_index = failure_index
        self.initial = 0
        self.accept = 0
        self._letter_pos = {a: i for i, a in enumerate(alphabet.letters)}

    @property
    def state_count(self) -> int:
        return len(self.transitions)

    @property
    def state_bits(self) -> int:
        return max(1, (self.state_count - 1).bit_length())

    def step(self, state: int, letter: Letter) -> int:
        return self.transitions[state][self._letter_pos[letter]]

    def accepts(self, word: Sequence[Letter]) -> bool:
        if len(word) > self.n:
            raise StreamOverflowError(
                "word of length %d exceeds bound n = %d" % (len(word), self.n))
        state = self.initial
        rows = self.transitions
        pos = self._letter_pos
        for letter in word:
            state = rows[state][pos[letter]]
        return state == self.accept


def build_ball_automaton(group: ExactGroup, n: int,
                         max_elements: int = DEFAULT_ELEMENT_CAP) -> BallAutomaton:
    """The optimal deterministic DFA for words of length at most n.

    Even n: state set is B(n/2); edges leaving the ball are redirected to
    the first BFS element at distance exactly n/2 (no such edges exist
    when the ball already saturated, i.e. for a small finite group).
    Odd n: state set is B(floor(n/2)) plus an absorbing failure state.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    radius = n // 2
    even = n % 2 == 0
    elements, dist, counts = _ball_search(group, radius, max_elements)
    index = {group.key_data(g): i for i, g in enumerate(elements)}
    letters = group.alphabet.letters

    failure_index = None
    spurious_target = None
    if even:
        for i, d in enumerate(dist):
            if d == radius:
                spurious_target = i
                break
    else:
        failure_index = len(elements)

    rows = []
    for g in elements:
        row = []
        for a in letters:
            h = group.mul(g, group.gen(a))
            j = index.get(group.key_data(h))
            if j is None:
                if even:
                    if spurious_target is None:
                        raise AssertionError("saturated ball cannot lose edges")
                    j = spurious_target
                else:
                    j = failure_index
            row.append(j)
        rows.append(tuple(row))
    if failure_index is not None:
        rows.append(tuple(failure_index for _ in letters))

    return BallAutomaton(group.alphabet, n, tuple(rows), tuple(dist),
                         spurious_target, failure_index)


def dfa_decide(automaton: BallAutomaton, word: Sequence[Letter]) -> bool:
    return automaton.accepts(word)


def exhaustive_agreement(automaton: BallAutomaton, group,
                         n: int | None = None):
    """Compare the automaton with an oracle on every word of length <= n.

    The verdict on a word depends only on the (state, element) pair it
    reaches, so a breadth-first search of the product graph checks each
    reachable pair once instead of enumerating all words.  Returns None
    on full agreement, else a shortest disagreeing word.
    """
    n = automaton.n if n is None else n
    letters = automaton.alphabet.letters
    gens = {a: group.gen(a) for a in letters}
    identity = group.identity
    seen = {(automaton.initial, group.key(identity))}
    frontier = [(automaton.initial, identity, ())]
    for _ in range(n):
        nxt = []
        for state, elem, word in frontier:
            for a in letters:
                s2 = automaton.step(state, a)
                g2 = group.mul(elem, gens[a])
                pair = (s2, group.key(g2))
                if pair in seen:
                    continue
                seen.add(pair)
                w2 = word + (a,)
                if (s2 == automaton.accept) != group.is_identity(g2):
                    return w2
                nxt.append((s2, g2, w2))
        frontier = nxt
    return None
