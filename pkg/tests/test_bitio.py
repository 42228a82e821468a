import numpy as np
import pytest
from hypothesis import given, strategies as st

from bfparse.bitio import BitReader, BitStream, BitWriter, FormatError, delta_decode, delta_encode, pack_codes


@pytest.mark.parametrize("value,code", [(1, "1"), (2, "0100"), (4, "01100"), (9, "00100001")])
def test_delta_examples(value, code):
    assert delta_encode(value) == code
    assert delta_decode(code) == (value, len(code))


def test_delta_rejects_non_positive():
    for v in (0, -3):
        with pytest.raises(ValueError):
            delta_encode(v)


@pytest.mark.parametrize("bits", ["", "0", "01", "0010", "000"])
def test_delta_truncated(bits):
    with pytest.raises(FormatError):
        delta_decode(bits)


def test_delta_identity_up_to_a_million():
    w = BitWriter()
    values = range(1, 10**6 + 1)
    for v in values:
        w.write_delta(v)
    r = w.getvalue().reader()
    assert all(r.read_delta() == v for v in values)
    assert r.remaining == 0


@given(st.lists(st.integers(1, 2**70), max_size=50))
def test_delta_streams_self_delimit(values):
    bits = "".join(delta_encode(v) for v in values)
    pos, out = 0, []
    while pos < len(bits):
        v, used = delta_decode(bits, pos)
        out.append(v)
        pos += used
    assert out == values


@given(st.text(alphabet="01", max_size=200))
def test_bitstream_round_trip(bits):
    s = BitStream.from01(bits)
    assert s.nbits == len(bits) and s.to01() == bits
    assert len(s.data) == (len(bits) + 7) // 8


def test_writer_reader_mixed():
    w = BitWriter()
    w.write(5, 3)
    w.write_delta(17)
    w.align()
    w.write_bytes(b"xy")
    w.write(0, 0)
    s = w.getvalue()
    r = s.reader()
    assert r.read(3) == 5 and r.read_delta() == 17
    r.align()
    assert r.read_bytes(2) == b"xy" and r.remaining == 0
    with pytest.raises(FormatError):
        r.read(1)


def test_reader_rejects_runaway_prefix():
    with pytest.raises(FormatError):
        BitReader(bytes(20)).read_delta()


@given(st.lists(st.tuples(st.integers(0, 63), st.integers(0, 2**63 - 1)), max_size=60))
def test_pack_codes_matches_string_concat(items):
    lengths = [l for l, _ in items]
    values = [v & ((1 << l) - 1) for l, v in items]
    expected = "".join(format(v, f"0{l}b") if l else "" for v, l in zip(values, lengths))
    got = pack_codes(np.array(values, dtype=np.uint64), np.array(lengths), chunk=7)
    assert got.to01() == expected and got.nbits == len(expected)
