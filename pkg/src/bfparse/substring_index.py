"""Occurrence counts for every substring of a text up to a fixed length.

Substrings of equal length are grouped into classes by iterated extension:
the class of ``S[p:p+L+1]`` is the rank of the pair (class of ``S[p:p+L]``,
``S[p+L]``).  One sort per length gives dense class ids, and a bincount turns
them into per-position occurrence counts, so ``count`` is a table lookup.
"""

from __future__ import annotations

from typing import Iterator

import numpy as np

from .corpus import Text


def substring_classes(symbols: np.ndarray, max_len: int) -> Iterator[tuple[int, np.ndarray]]:
    """Yield ``(L, cls)`` for L = 1..max_len where ``cls[p]`` identifies ``S[p:p+L]``.

    Two positions share a class id iff the substrings of length L starting
    there are equal.  Ids are dense in ``[0, #distinct)`` for L >= 2; for
    L = 1 the symbol ids themselves are used.
    """
    n = len(symbols)
    if n == 0 or max_len < 1:
        return
    sym = symbols.astype(np.int64)
    cls = sym
    yield 1, cls
    for length in range(2, min(max_len, n) + 1):
        key = cls[: n - length + 1] * 256 + sym[length - 1:]
        _, cls = np.unique(key, return_inverse=True)
        cls = cls.reshape(-1)
        yield length, cls


class SubstringCounter:
    """Answers ``cnt(S[start:start+len])`` in O(1) for ``len <= max_query_len``.

    ``counts[L, p]`` holds the number of occurrences of ``S[p:p+L]`` in S
    (zero where ``p + L > n``).  Row 0 holds n, which is what the empty
    context divides by in the phrase-cost formulas.
    """

    def __init__(self, text: Text, max_query_len: int):
        if max_query_len < 1:
            raise ValueError("max_query_len must be >= 1")
        self.text = text
        self.max_query_len = max_query_len
        n = text.n
        rows = min(max_query_len, n) + 1
        counts = np.zeros((rows, n), dtype=np.int32)
        counts[0, :] = n
        for length, cls in substring_classes(text.symbols, max_query_len):
            counts[length, : n - length + 1] = np.bincount(cls)[cls]
        counts.flags.writeable = False
        self.counts = counts

    @property
    def n(self) -> int:
        return self.text.n

    def count(self, start: int, length: int) -> int:
        if not 1 <= length <= self.max_query_len:
            raise IndexError(f"query length {length} outside [1, {self.max_query_len}]")
        if start < 0 or start + length > self.n:
            raise IndexError(f"substring [{start}, {start + length}) outside text of length {self.n}")
        return int(self.counts[length, start])

    def count_row(self, length: int) -> np.ndarray:
        """Counts of all length-``length`` substrings, indexed by start position."""
        if length >= self.counts.shape[0]:
            return np.zeros(0, dtype=np.int32)
        return self.counts[length, : self.n - length + 1]


def build_counter(text: Text, max_query_len: int) -> SubstringCounter:
    return SubstringCounter(text, max_query_len)


def count(counter: SubstringCounter, start: int, length: int) -> int:
    return counter.count(start, length)
