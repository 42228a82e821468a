"""Bounded-factor parsings: phrase costs, the optimal-cost DPs, naive baselines.

A phrase y occurring in S is charged ``-log2 p(y)`` where, for the
zeroth-order variant, ``p(y) = cnt(y) / (m * n)`` and, for the first-order
variant with predecessor y', ``p(y | y') = cnt(y'y) / (m * cnt(y'))``.  The
DPs minimise the summed cost, which upper-bounds the realised parsing
entropy because these values sum to at most one over distinct phrases.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Literal, NamedTuple, Sequence

import numpy as np

from . import _kernels
from .corpus import Text
from .entropy import parsing_h0, parsing_h1
from .substring_index import SubstringCounter, build_counter

Order = Literal["h0", "h1"]


class Phrase(NamedTuple):
    start: int
    length: int


@dataclass(frozen=True, eq=False)
class Parsing:
    """Partition of ``text`` into consecutive phrases of length at most ``m``."""

    text: Text
    lengths: np.ndarray
    m: int

    def __post_init__(self):
        lengths = np.asarray(self.lengths, dtype=np.int64)
        lengths.flags.writeable = False
        object.__setattr__(self, "lengths", lengths)
        if lengths.size and (lengths.min() < 1 or lengths.max() > self.m):
            raise ValueError(f"phrase lengths must lie in [1, {self.m}]")
        if int(lengths.sum()) != self.text.n:
            raise ValueError("phrases do not tile the text")

    @classmethod
    def from_phrases(cls, text: Text, phrases: Sequence[Phrase], m: int) -> "Parsing":
        pos = 0
        for ph in phrases:
            if ph.start != pos:
                raise ValueError(f"phrase at {ph.start} does not continue at {pos}")
            pos += ph.length
        return cls(text, np.array([ph.length for ph in phrases], dtype=np.int64), m)

    def __len__(self) -> int:
        return len(self.lengths)

    @cached_property
    def starts(self) -> np.ndarray:
        s = np.zeros(len(self.lengths), dtype=np.int64)
        np.cumsum(self.lengths[:-1], out=s[1:])
        return s

    @property
    def phrases(self) -> list[Phrase]:
        return [Phrase(int(s), int(l)) for s, l in zip(self.starts, self.lengths)]

    def phrase_strings(self) -> list[tuple[int, ...]]:
        sym = self.text.symbols
        return [tuple(sym[s:s + l].tolist()) for s, l in zip(self.starts, self.lengths)]

    @cached_property
    def _distinct(self) -> tuple[np.ndarray, np.ndarray]:
        return _number_phrases(self.text, self.starts, self.lengths)

    def phrase_ids(self) -> np.ndarray:
        """Letter of each phrase, numbering distinct phrases by (length, lexicographic) rank."""
        return self._distinct[0]

    def distinct_phrases(self) -> list[tuple[int, ...]]:
        """Distinct phrases in id order."""
        sym = self.text.symbols
        first = self._distinct[1]
        return [tuple(sym[s:s + l].tolist()) for s, l in zip(self.starts[first], self.lengths[first])]


def _number_phrases(text: Text, starts: np.ndarray, lengths: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Return (ids, first_index) for phrases ordered by their base-(sigma+1) value.

    Letters are digits 1..sigma, so the value order is by length first and
    then lexicographic.  The value is used directly as a sort key while it
    fits in int64; longer phrases fall back to sorting (length, digits) rows.
    """
    k = len(lengths)
    if k == 0:
        return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)
    width = int(lengths.max())
    sym = text.symbols
    base = text.sigma + 1
    if width * math.log2(base) < 62:
        key = np.zeros(k, dtype=np.int64)
        for j in range(width):
            live = lengths > j
            key[live] = key[live] * base + sym[starts[live] + j].astype(np.int64) + 1
        _, first, ids = np.unique(key, return_index=True, return_inverse=True)
    else:
        rows = np.zeros((k, width + 1), dtype=np.uint16)
        rows[:, 0] = lengths
        for j in range(width):
            live = lengths > j
            rows[live, j + 1] = sym[starts[live] + j].astype(np.uint16) + 1
        _, first, ids = np.unique(rows, axis=0, return_index=True, return_inverse=True)
    return ids.reshape(-1).astype(np.int64), first


def _check_counter(counter: SubstringCounter, text: Text, need: int) -> None:
    if counter.text is not text:
        raise ValueError("counter was built for a different text")
    if counter.max_query_len < need and counter.max_query_len < text.n:
        raise ValueError(f"counter answers lengths up to {counter.max_query_len}, need {need}")


def cost_h0(counter: SubstringCounter, phrase: Phrase, m: int) -> float:
    """``-log2((1/m) * cnt(y) / n)`` in bits."""
    if not 1 <= phrase.length <= m:
        raise ValueError(f"phrase length {phrase.length} outside [1, {m}]")
    return math.log2(m) + math.log2(counter.n) - math.log2(counter.count(phrase.start, phrase.length))


def cost_h1(counter: SubstringCounter, prev: Phrase, phrase: Phrase, m: int) -> float:
    """``-log2((1/m) * cnt(y'y) / cnt(y'))`` in bits."""
    if prev.start + prev.length != phrase.start:
        raise ValueError("prev must immediately precede phrase")
    if not 1 <= phrase.length <= m:
        raise ValueError(f"phrase length {phrase.length} outside [1, {m}]")
    joint = counter.count(prev.start, prev.length + phrase.length)
    return math.log2(m) + math.log2(counter.count(prev.start, prev.length)) - math.log2(joint)


def parse_h0_optimal(text: Text, m: int, counter: SubstringCounter | None = None) -> tuple[Parsing, float]:
    """m-bounded parsing minimising the summed zeroth-order phrase cost, O(n m)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if text.n == 0:
        return Parsing(text, np.zeros(0, dtype=np.int64), m), 0.0
    if counter is None:
        counter = build_counter(text, m)
    _check_counter(counter, text, m)
    cost, lengths = _kernels.dp_h0(counter.counts, text.n, m)
    return Parsing(text, lengths, m), float(cost)


def parse_h1_optimal(text: Text, m: int, counter: SubstringCounter | None = None) -> tuple[Parsing, float]:
    """m-bounded parsing minimising the summed first-order phrase cost, O(n m^2)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if text.n == 0:
        return Parsing(text, np.zeros(0, dtype=np.int64), m), 0.0
    if counter is None:
        counter = build_counter(text, 2 * m)
    _check_counter(counter, text, 2 * m)
    cost, lengths = _kernels.dp_h1(counter.counts, text.n, m)
    return Parsing(text, lengths, m), float(cost)


def naive_parsing(text: Text, l: int, offset: int = 0) -> Parsing:
    """First phrase of length ``offset`` (dropped when 0), then blocks of ``l``."""
    if l < 1 or not 0 <= offset < l:
        raise ValueError("need l >= 1 and 0 <= offset < l")
    n = text.n
    head = min(offset, n)
    body, tail = divmod(n - head, l)
    lengths = ([head] if head else []) + [l] * body + ([tail] if tail else [])
    return Parsing(text, np.array(lengths, dtype=np.int64), l)


def best_naive(text: Text, l: int, order: Order = "h0") -> tuple[Parsing, float]:
    """Among the ``l`` naive parsings, the one with the smallest parsing entropy.

    Ties go to the smallest offset.
    """
    entropy = _order_entropy(order)
    best = None
    for offset in range(l):
        p = naive_parsing(text, l, offset)
        bits = entropy(p)
        if best is None or bits < best[1]:
            best = (p, bits)
    return best


def _order_entropy(order: Order):
    if order == "h0":
        return lambda p: parsing_h0(p)[0]
    if order == "h1":
        return lambda p: parsing_h1(p)[0]
    raise ValueError(f"unknown order {order!r}")


def total_cost(parsing: Parsing, counter: SubstringCounter, m: int, order: Order = "h0") -> float:
    """Summed phrase cost of ``parsing`` under the ``order`` cost with bound ``m``."""
    if len(parsing) == 0:
        return 0.0
    if int(parsing.lengths.max()) > m:
        raise ValueError(f"parsing has phrases longer than {m}")
    lengths, starts = parsing.lengths, parsing.starts
    counts = counter.counts
    logm, logn = math.log2(m), math.log2(counter.n)
    if order == "h0":
        _check_counter(counter, parsing.text, int(lengths.max()))
        return float(np.sum(logm + logn - np.log2(counts[lengths, starts])))
    if order == "h1":
        _check_counter(counter, parsing.text, int(lengths.max()) * 2)
        first = logm + logn - math.log2(counts[lengths[0], 0])
        pl, ps = lengths[:-1], starts[:-1]
        rest = logm + np.log2(counts[pl, ps]) - np.log2(counts[pl + lengths[1:], ps])
        return float(first + np.sum(rest))
    raise ValueError(f"unknown order {order!r}")
