import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from bfparse.bitio import FormatError
from bfparse.codec import compress_h1
from bfparse.corpus import load_text
from bfparse.parsing import naive_parsing, parse_h0_optimal
from bfparse.random_access import AccessStructure, build_access


def test_small_exhaustive():
    data = b"abracadabra alakazam " * 30
    s = build_access(load_text(data), 4, d=5, t=3)
    assert bytes(s[i] for i in range(len(data))) == data
    assert len(s) == len(data)


def test_defaults():
    s = build_access(load_text(b"hello world" * 10), 3)
    assert (s.d, s.t) == (6, 8)


def test_samples_point_inside_their_phrase():
    t = load_text(b"to be or not to be, that is the question " * 40)
    p, _ = parse_h0_optimal(t, 5)
    s = build_access(t, 5, d=7, t=4, parsing=p)
    for k, j in enumerate(range(0, t.n, 7)):
        z, o = s.z[k], s.o[k]
        assert p.starts[z] + o == j and 0 <= o < p.lengths[z]


def test_index_errors():
    s = build_access(load_text(b"abc"), 2)
    for i in (-1, 3):
        with pytest.raises(IndexError):
            s.access(i)
    with pytest.raises(IndexError):
        s.read_block(2, 2)
    assert s.read_block(3, 0) == b""


def test_empty_text():
    s = build_access(load_text(b""), 4)
    assert len(s) == 0 and s.structure_size()["bps"] == 0.0
    assert AccessStructure.from_bytes(s.to_bytes()).n == 0


def test_h1_archive_rejected():
    a = compress_h1(load_text(b"abcabc"), 2)
    with pytest.raises(ValueError):
        AccessStructure(a, 4, 8, [], [], [], 0)


@settings(max_examples=80, deadline=None)
@given(st.binary(min_size=1, max_size=2000), st.integers(1, 6), st.integers(1, 20), st.integers(1, 9))
def test_access_and_blocks_after_round_trip(data, m, d, t):
    s = AccessStructure.from_bytes(build_access(load_text(data), m, d, t).to_bytes())
    assert bytes(s.access(i) for i in range(len(data))) == data
    rng = np.random.default_rng(len(data))
    for _ in range(10):
        i = int(rng.integers(0, len(data)))
        k = int(rng.integers(0, len(data) - i + 1))
        assert s.read_block(i, k) == data[i:i + k]


def test_work_is_bounded():
    data = bytes(np.random.default_rng(0).integers(97, 101, 20000, dtype=np.uint8))
    t = load_text(data)
    p, _ = parse_h0_optimal(t, 6)
    s = build_access(t, 6, d=12, t=8, parsing=p)
    avg_len = t.n / len(p)
    skipped, decoded = zip(*(s.access_work(i)[1:] for i in range(t.n)))
    assert max(skipped) <= 7
    # phrases touched from a sample to the target: at most one per covered symbol, at most d + 1
    assert max(decoded) <= 12 + 1
    assert np.mean(decoded) <= 2 * (12 / avg_len + 1)


def test_baseline_parsing_structure():
    data = b"0123456789" * 300
    t = load_text(data)
    s = build_access(t, 4, parsing=naive_parsing(t, 4, 1))
    assert s.read_block(0, len(data)) == data


def test_structure_shrinks_as_d_grows():
    t = load_text(b"".join(str(i).encode() for i in range(20000)))
    p, _ = parse_h0_optimal(t, 4)
    deltas = [build_access(t, 4, d, parsing=p).structure_size()["delta_vs_archive_bps"] for d in (4, 8, 16, 32)]
    assert all(a > b for a, b in zip(deltas, deltas[1:]))


def test_serialised_form_is_checked():
    good = build_access(load_text(b"banana bandana " * 20), 3).to_bytes()
    for data in (good[:-1], good + b"\x00", good.replace(b"RAX1", b"RAX2")):
        with pytest.raises(FormatError):
            AccessStructure.from_bytes(data)
