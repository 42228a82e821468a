import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bfparse.corpus import load_text
from bfparse.entropy import (
    entropy_report,
    h0_total,
    hk_total,
    hk_totals,
    length_entropy,
    parsing_h0,
    parsing_h1,
)
from bfparse.parsing import Parsing
import oracles


def test_h0_examples():
    assert h0_total({"a": 2, "b": 2}) == pytest.approx(4.0)
    assert h0_total({"a": 5}) == 0.0
    assert h0_total({}) == 0.0
    assert h0_total(np.array([1, 1, 2])) == pytest.approx(6.0)


def test_hk_examples():
    t = load_text(b"abacaac")
    assert hk_total(t, 0) == pytest.approx(oracles.hk_bits(b"abacaac", 0))
    assert hk_total(t, 1) == pytest.approx(6.0)
    assert hk_total(load_text(b"aaaa"), 2) == 0.0
    assert hk_total(load_text(b"ab"), 5) == 0.0
    with pytest.raises(ValueError):
        hk_total(t, -1)


def test_hk_empty():
    assert hk_totals(load_text(b""), 3).tolist() == [0.0] * 4


@settings(max_examples=120)
@given(st.text(alphabet="abcd", max_size=80), st.integers(0, 6))
def test_hk_matches_explicit_contexts(s, k):
    data = s.encode()
    totals = hk_totals(load_text(data), k)
    for j in range(k + 1):
        assert totals[j] == pytest.approx(oracles.hk_bits(data, j), abs=1e-9)


@given(st.text(alphabet="ab", min_size=1, max_size=80), st.integers(0, 5))
def test_hk_non_increasing_in_k(s, k):
    totals = hk_totals(load_text(s.encode()), k + 1)
    assert np.all(np.diff(totals) <= 1e-9)


def _parsing(data: bytes, lengths) -> Parsing:
    return Parsing(load_text(data), np.array(lengths), max(lengths or [1]))


def test_parsing_entropies_example():
    p = _parsing(b"abab", [2, 2])
    assert parsing_h0(p) == (0.0, 1)
    assert parsing_h1(p) == (0.0, 1, 1)
    p = _parsing(b"aab", [1, 1, 1])
    assert parsing_h0(p)[0] == pytest.approx(3 * math.log2(3) - 2)


@settings(max_examples=100)
@given(st.text(alphabet="abc", min_size=1, max_size=40), st.randoms(use_true_random=False))
def test_parsing_entropies_match_oracle(s, rnd):
    data = s.encode()
    lengths, left = [], len(data)
    while left:
        l = rnd.randint(1, min(4, left))
        lengths.append(l)
        left -= l
    p = _parsing(data, lengths)
    phrases = oracles.split(data, lengths)
    h0, distinct = parsing_h0(p)
    h1, distinct1, pairs = parsing_h1(p)
    assert h0 == pytest.approx(oracles.parsing_h0_bits(phrases), abs=1e-9)
    assert h1 == pytest.approx(oracles.parsing_h1_bits(phrases), abs=1e-9)
    assert distinct == distinct1 == len(set(phrases))
    assert pairs == len(set(zip(phrases, phrases[1:])))
    assert length_entropy(p) == pytest.approx(oracles.xlogx_total(np.bincount(lengths)), abs=1e-9)
    assert h1 <= h0 + 1e-9


def test_report_normalisations():
    p = _parsing(b"abcabcab", [3, 3, 2])
    r = entropy_report(p, 3)
    assert r.phrases == 3 and r.distinct == 2 and r.pairs == 2
    assert r.avg_phrase_len == pytest.approx(8 / 3)
    assert r.bps(8.0) == 1.0
    assert r.mean_entropy(0, 2) == pytest.approx((r.order_totals[0] + r.order_totals[1]) / 16)
    assert r.mean_entropy(2, 2) == 0.0
