"""Empirical entropies of texts and of parsings.

Everything is reported as a total in bits (``|w| H(w)``); divide by the text
length for bits per symbol.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass

import numpy as np

from .corpus import Text
from .substring_index import substring_classes


def _xlogx_sum(counts: np.ndarray) -> float:
    c = counts[counts > 0].astype(np.float64)
    return float(np.sum(c * np.log2(c)))


def h0_total(hist) -> float:
    """``|w| H_0(w)`` for a histogram given as a mapping or an array of counts."""
    if isinstance(hist, Mapping):
        counts = np.fromiter(hist.values(), dtype=np.int64, count=len(hist))
    else:
        counts = np.asarray(hist, dtype=np.int64)
    counts = counts[counts > 0]
    total = int(counts.sum())
    if total == 0 or counts.size == 1:
        return 0.0
    return max(0.0, total * np.log2(total) - _xlogx_sum(counts))


def hk_totals(text: Text, k_max: int) -> np.ndarray:
    """``|S| H_k(S)`` for every k in ``0..k_max``.

    For k >= 1 a position p contributes iff ``p + k < n``; its context is
    ``S[p:p+k]`` and its symbol ``S[p+k]``.  The total is then
    ``sum_w T_w log T_w - sum_{w,c} c_wc log c_wc`` with T_w the number of
    followed occurrences of context w.
    """
    n = text.n
    out = np.zeros(k_max + 1, dtype=np.float64)
    if n == 0:
        return out
    out[0] = h0_total(np.bincount(text.symbols))
    prev = None
    for length, cls in substring_classes(text.symbols, k_max + 1):
        if prev is not None:
            k = length - 1
            ctx = np.bincount(prev[: n - k])
            pair = np.bincount(cls)
            out[k] = max(0.0, _xlogx_sum(ctx) - _xlogx_sum(pair))
        prev = cls
    return out


def hk_total(text: Text, k: int) -> float:
    if k < 0:
        raise ValueError("k must be non-negative")
    return float(hk_totals(text, k)[k])


def parsing_h0(parsing) -> tuple[float, int]:
    """``(|Y| H_0(Y), |Sigma_Y|)`` with distinct phrases as letters."""
    ids = parsing.phrase_ids()
    if ids.size == 0:
        return 0.0, 0
    counts = np.bincount(ids)
    return h0_total(counts), int(np.count_nonzero(counts))


def parsing_h1(parsing) -> tuple[float, int, int]:
    """``(|Y| H_1(Y), |Sigma_Y|, |pairs(Y)|)``.

    Each phrase after the first is charged in the context of its
    predecessor; the first phrase has no context and costs nothing here.
    """
    ids = parsing.phrase_ids().astype(np.int64)
    if ids.size == 0:
        return 0.0, 0, 0
    distinct = int(np.count_nonzero(np.bincount(ids)))
    if ids.size == 1:
        return 0.0, distinct, 0
    prev, cur = ids[:-1], ids[1:]
    _, pair_counts = np.unique(prev * (int(ids.max()) + 1) + cur, return_counts=True)
    bits = _xlogx_sum(np.bincount(prev)) - _xlogx_sum(pair_counts)
    return max(0.0, bits), distinct, int(pair_counts.size)


def length_entropy(parsing) -> float:
    """``|L| H_0(L)`` of the sequence of phrase lengths."""
    if len(parsing.lengths) == 0:
        return 0.0
    return h0_total(np.bincount(parsing.lengths))


@dataclass
class EntropyReport:
    n: int
    order_totals: np.ndarray  # |S| H_i(S), i = 0..k_max
    phrases: int
    distinct: int
    pairs: int
    h0_bits: float
    h1_bits: float
    length_bits: float

    def bps(self, bits: float) -> float:
        return bits / self.n if self.n else 0.0

    def mean_entropy(self, lo: int, hi: int) -> float:
        """``(1/(hi-lo)) * sum_{lo <= i < hi} H_i(S)`` in bits per symbol."""
        if not self.n or hi <= lo:
            return 0.0
        return float(np.sum(self.order_totals[lo:hi])) / self.n / (hi - lo)

    @property
    def avg_phrase_len(self) -> float:
        return self.n / self.phrases if self.phrases else 0.0


def entropy_report(parsing, k_max: int, order_totals: np.ndarray | None = None) -> EntropyReport:
    text = parsing.text
    if order_totals is None:
        order_totals = hk_totals(text, k_max)
    h0, distinct = parsing_h0(parsing)
    h1, _, pairs = parsing_h1(parsing)
    return EntropyReport(
        n=text.n,
        order_totals=order_totals,
        phrases=len(parsing.lengths),
        distinct=distinct,
        pairs=pairs,
        h0_bits=h0,
        h1_bits=h1,
        length_bits=length_entropy(parsing),
    )
