"""MSB-first bit streams and Elias Delta codes."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels

_VECTOR_LIMIT = 1 << 53  # exact in float64, so frexp gives true bit lengths


class FormatError(ValueError):
    """Malformed or truncated encoded data."""


def delta_encode(value: int) -> str:
    """Elias Delta code of ``value`` as a '0'/'1' string."""
    if value < 1:
        raise ValueError(f"Elias Delta needs a positive integer, got {value}")
    nbits = value.bit_length()
    lol = nbits.bit_length() - 1
    return "0" * lol + format(nbits, "b") + format(value, "b")[1:]


def delta_decode(bits: str, pos: int = 0) -> tuple[int, int]:
    """Decode one Elias Delta code from a '0'/'1' string; returns (value, bits consumed)."""
    start = pos
    lol = 0
    while pos < len(bits) and bits[pos] == "0":
        lol += 1
        pos += 1
    if pos + lol + 1 > len(bits):
        raise FormatError("truncated Elias Delta code")
    nbits = int(bits[pos:pos + lol + 1], 2)
    pos += lol + 1
    if pos + nbits - 1 > len(bits):
        raise FormatError("truncated Elias Delta code")
    value = int("1" + bits[pos:pos + nbits - 1], 2)
    pos += nbits - 1
    return value, pos - start


@dataclass(frozen=True)
class BitStream:
    """``nbits`` bits stored MSB-first in ``data``; trailing pad bits are zero."""

    data: bytes = b""
    nbits: int = 0

    def __len__(self) -> int:
        return self.nbits

    def to01(self) -> str:
        if not self.nbits:
            return ""
        return format(int.from_bytes(self.data, "big"), f"0{len(self.data) * 8}b")[: self.nbits]

    @classmethod
    def from01(cls, bits: str) -> "BitStream":
        w = BitWriter()
        w.write_bits(bits)
        return w.getvalue()

    def reader(self) -> "BitReader":
        return BitReader(self.data, self.nbits)


class BitWriter:
    def __init__(self):
        self._parts: list[str] = []
        self._nbits = 0

    def __len__(self) -> int:
        return self._nbits

    def write_bits(self, bits: str) -> None:
        self._parts.append(bits)
        self._nbits += len(bits)

    def write(self, value: int, nbits: int) -> None:
        if nbits:
            self.write_bits(format(value, f"0{nbits}b"))

    def write_delta(self, value: int) -> None:
        self.write_bits(delta_encode(value))

    def write_deltas(self, values) -> None:
        """Elias Delta code every value; vectorised while values stay below 2**53."""
        arr = np.asarray(values, dtype=object if _too_big(values) else np.int64)
        if arr.size == 0:
            return
        if arr.dtype == object or arr.min() < 1:
            for v in arr.tolist():
                self.write_delta(int(v))
            return
        codes, lengths = delta_code_arrays(arr)
        self.write_bits(pack_codes(codes, lengths).to01())

    def write_bytes(self, data: bytes) -> None:
        if data:
            self.write(int.from_bytes(data, "big"), 8 * len(data))

    def align(self) -> None:
        self.write_bits("0" * (-self._nbits % 8))

    def getvalue(self) -> BitStream:
        if not self._nbits:
            return BitStream()
        bits = "".join(self._parts)
        pad = -len(bits) % 8
        data = int(bits + "0" * pad, 2).to_bytes((len(bits) + pad) // 8, "big")
        return BitStream(data, len(bits))


class BitReader:
    def __init__(self, data: bytes, nbits: int | None = None, pos: int = 0):
        self.data = data
        self.nbits = len(data) * 8 if nbits is None else nbits
        self.pos = pos

    @property
    def remaining(self) -> int:
        return self.nbits - self.pos

    def read(self, n: int) -> int:
        if n == 0:
            return 0
        end = self.pos + n
        if end > self.nbits:
            raise FormatError("read past end of bit stream")
        b0, b1 = self.pos >> 3, (end + 7) >> 3
        chunk = int.from_bytes(self.data[b0:b1], "big")
        self.pos = end
        return (chunk >> (b1 * 8 - end)) & ((1 << n) - 1)

    def read_delta(self) -> int:
        lol = 0
        while self.read(1) == 0:
            lol += 1
            if lol > 64:
                raise FormatError("Elias Delta length prefix too long")
        nbits = (1 << lol) | self.read(lol)
        return (1 << (nbits - 1)) | self.read(nbits - 1)

    def read_deltas(self, count: int = -1, signed: bool = False) -> list[int]:
        """Read ``count`` Elias Delta values (all remaining when negative).

        ``signed`` decodes a letter list: the first value unchanged, then per
        step a sign bit and a magnitude (bit 0 adds the value, bit 1 adds
        ``1 - value``).
        """
        buf = np.frombuffer(self.data, dtype=np.uint8) if self.data else np.zeros(1, np.uint8)
        values, end = _kernels.decode_deltas(buf, self.nbits, self.pos, count, signed)
        if end == -2:
            return self._read_deltas_slow(count, signed)
        if end < 0:
            raise FormatError("truncated Elias Delta code")
        self.pos = end
        return values.tolist()

    def _read_deltas_slow(self, count: int, signed: bool) -> list[int]:
        out: list[int] = []
        while (len(out) < count) if count >= 0 else self.remaining:
            if signed and out:
                neg = self.read(1)
                v = self.read_delta()
                out.append(out[-1] + 1 - v if neg else out[-1] + v)
            else:
                out.append(self.read_delta())
        return out

    def read_fixed(self, count: int, width: int) -> np.ndarray:
        """``count`` unsigned ``width``-bit integers (width <= 63)."""
        end = self.pos + count * width
        if end > self.nbits:
            raise FormatError("read past end of bit stream")
        if width == 0 or count == 0:
            return np.zeros(count, dtype=np.int64)
        bits = np.unpackbits(np.frombuffer(self.data, dtype=np.uint8))[self.pos:end].reshape(count, width)
        self.pos = end
        weights = (1 << np.arange(width - 1, -1, -1, dtype=np.int64))
        return bits.astype(np.int64) @ weights

    def read_bytes(self, k: int) -> bytes:
        return self.read(8 * k).to_bytes(k, "big") if k else b""

    def align(self) -> None:
        self.pos = min(self.nbits, (self.pos + 7) & ~7)


def _too_big(values) -> bool:
    if isinstance(values, np.ndarray) and values.dtype != object:
        return values.size > 0 and int(values.max()) >= _VECTOR_LIMIT
    return any(v >= _VECTOR_LIMIT for v in values)


def delta_code_arrays(values: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Elias Delta codes of positive ``values`` < 2**53 as (code value, code length)."""
    v = np.asarray(values, dtype=np.int64)
    width = np.frexp(v.astype(np.float64))[1].astype(np.int64)  # bit length of v
    lol = np.frexp(width.astype(np.float64))[1].astype(np.int64) - 1
    # leading zeros are implicit; the rest is width in binary, then v without its top bit
    codes = ((width - 1) << (width - 1)) + v
    return codes.astype(np.uint64), 2 * lol + width


def pack_codes(values: np.ndarray, lengths: np.ndarray, chunk: int = 1 << 20) -> BitStream:
    """Concatenate codes (``values[i]`` on ``lengths[i]`` bits) into one stream."""
    values = np.asarray(values, dtype=np.uint64)
    lengths = np.asarray(lengths, dtype=np.int64)
    total = int(lengths.sum())
    if total == 0:
        return BitStream()
    pieces = []
    for lo in range(0, len(lengths), chunk):
        v, l = values[lo:lo + chunk], lengths[lo:lo + chunk]
        size = int(l.sum())
        if not size:
            continue
        idx = np.repeat(np.arange(len(l)), l)
        ends = np.cumsum(l)
        shift = (np.repeat(ends, l) - 1 - np.arange(size)).astype(np.uint64)
        pieces.append(((v[idx] >> shift) & np.uint64(1)).astype(np.uint8))
    return BitStream(np.packbits(np.concatenate(pieces)).tobytes(), total)
