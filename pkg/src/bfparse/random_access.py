"""Random access into a zeroth-order archive without decompressing it.

Phrases have varying lengths, so finding the phrase that holds ``S[i]``
needs an index.  Every ``d``-th text position j stores the number of the
phrase containing it (``Z``) and its offset inside that phrase (``O``,
ceil(log2 m) bits).  Every ``t``-th phrase stores the bit offset of its code
in the payload.  A query jumps to the sample at or before i, skips fewer
than t codes to reach the sampled phrase, then decodes forward until i is
covered.  Larger d and t give a smaller index and slower queries.
"""

from __future__ import annotations

import math

import numpy as np

from . import _kernels
from .bitio import BitStream, BitWriter, FormatError, pack_codes
from .codec import (
    Archive,
    DecodeTables,
    codebook_decode,
    compress_h0,
    expand_phrases,
    parse_archive,
    phrase_set_table,
    read_sections,
    _section_bytes,
)
from .corpus import Text
from .parsing import Parsing, parse_h0_optimal

RAX_MAGIC = b"RAX1"


def _offset_width(m: int) -> int:
    return math.ceil(math.log2(m)) if m > 1 else 0


class AccessStructure:
    """Queryable form of an H0 archive; immutable once built."""

    def __init__(self, archive: Archive, d: int, t: int, z: np.ndarray, o: np.ndarray,
                 code_pos: np.ndarray, num_phrases: int):
        if archive.variant != "h0":
            raise ValueError("random access is only built for zeroth-order archives")
        if d < 1 or t < 1:
            raise ValueError("d and t must be >= 1")
        self.archive = archive
        self.n = archive.n
        self.m = archive.m
        self.d = d
        self.t = t
        self.num_phrases = num_phrases
        self.z = np.asarray(z, dtype=np.int64)
        self.o = np.asarray(o, dtype=np.int64)
        self.code_pos = np.asarray(code_pos, dtype=np.int64)
        self._z, self._o, self._cp = self.z.tolist(), self.o.tolist(), self.code_pos.tolist()

        payload = archive.sections.get("payload", BitStream())
        self._nbits = payload.nbits
        # zero tail so a 9-byte window can always be read
        self._buf = payload.data + bytes(9)
        self._np_buf = np.frombuffer(self._buf, dtype=np.uint8)
        if self.n == 0:
            self.book = None
            self._phrases: list[list[int]] = []
            return

        alpha = np.frombuffer(archive.alphabet, dtype=np.uint8)
        table, self._plen = phrase_set_table(archive.sections["phrase_set"], archive.sigma)
        if not len(self._plen):
            raise FormatError("empty phrase set for non-empty text")
        self._table = alpha[table]
        self._plen_list = self._plen.tolist()
        self._phrases = [row[:l] for row, l in zip(self._table.tolist(), self._plen_list)]
        self.book = codebook_decode(archive.sections["dictionary"], len(self._plen))
        self._tables = DecodeTables.build([self.book])
        # (length, first code, count, index of first symbol) per code length
        lens = sorted(set(self.book.lengths.values()))
        levels = []
        for l in range(lens[0], lens[-1] + 1):
            j = l - lens[0]
            levels.append((l, int(self._tables.first[j]), int(self._tables.cnt[j]), int(self._tables.off[j])))
        if levels[-1][0] > 64:
            raise FormatError("code lengths above 64 bits are not supported")
        self._levels = levels
        self._order = list(self.book.order)

    # -- decoding primitives ------------------------------------------------

    def _decode_one(self, pos: int) -> tuple[int, int]:
        window = int.from_bytes(self._buf[pos >> 3:(pos >> 3) + 9], "big")
        avail = 72 - (pos & 7)
        for l, first, cnt, off in self._levels:
            d = ((window >> (avail - l)) & ((1 << l) - 1)) - first
            if 0 <= d < cnt:
                if pos + l > self._nbits:
                    break
                return self._order[off + d], pos + l
        raise FormatError(f"invalid code at payload bit {pos}")

    def _seek(self, i: int) -> tuple[int, int, int]:
        """(bit position of the sampled phrase, offset of i from its start, codes skipped)."""
        s = i // self.d
        z = self._z[s]
        off = self._o[s] + i - s * self.d
        k = z // self.t
        pos = self._cp[k]
        skipped = z - k * self.t
        for _ in range(skipped):
            pos = self._decode_one(pos)[1]
        return pos, off, skipped

    def _check(self, i: int, length: int = 1) -> None:
        if i < 0 or length < 0 or i + length > self.n:
            raise IndexError(f"range [{i}, {i + length}) outside text of length {self.n}")

    # -- queries --------------------------------------------------------------

    def access(self, i: int) -> int:
        """Byte value of ``S[i]``."""
        return self.access_work(i)[0]

    def access_work(self, i: int) -> tuple[int, int, int]:
        """``(S[i], codes skipped, phrases decoded)`` for one query."""
        self._check(i)
        pos, off, skipped = self._seek(i)
        decoded = 0
        while True:
            sym, pos = self._decode_one(pos)
            decoded += 1
            plen = self._plen_list[sym]
            if off < plen:
                return self._phrases[sym][off], skipped, decoded
            off -= plen

    def __getitem__(self, i: int) -> int:
        return self.access(i)

    def __len__(self) -> int:
        return self.n

    def read_block(self, i: int, length: int) -> bytes:
        """``S[i:i+length]``: one positioning step, then sequential decoding."""
        self._check(i, length)
        if length == 0:
            return b""
        pos, off, _ = self._seek(i)
        ids, end = _kernels.decode_codes(self._np_buf, self._nbits, pos, off + length, self._plen,
                                         0, False, *self._tables.args())
        if end < 0:
            raise FormatError("payload ended before the requested block")
        return expand_phrases(ids, self._table, self._plen)[off:off + length].tobytes()

    # -- size and serialisation ----------------------------------------------

    def _rax_stream(self) -> BitStream:
        w = BitWriter()
        w.write_delta(self.d)
        w.write_delta(self.t)
        w.write_delta(self.num_phrases + 1)
        _write_nondecreasing(w, self.z)
        width = _offset_width(self.m)
        w.write_bits(pack_codes(self.o, np.full(len(self.o), width)).to01())
        _write_nondecreasing(w, self.code_pos)
        return w.getvalue()

    def to_bytes(self) -> bytes:
        return self.archive.to_bytes() + RAX_MAGIC + _section_bytes(self._rax_stream())

    @classmethod
    def from_bytes(cls, data: bytes) -> "AccessStructure":
        archive, end = parse_archive(data)
        if data[end:end + 4] != RAX_MAGIC:
            raise FormatError("missing RAX1 section")
        sections, stop = read_sections(data, end + 4, ["rax"])
        if stop != len(data):
            raise FormatError("trailing bytes after RAX1 section")
        r = sections["rax"].reader()
        d, t = r.read_delta(), r.read_delta()
        num_phrases = r.read_delta() - 1
        z = _read_nondecreasing(r, -(-archive.n // d))
        width = _offset_width(archive.m)
        o = r.read_fixed(len(z), width)
        cp = _read_nondecreasing(r, -(-num_phrases // t))
        if r.remaining:
            raise FormatError("unused bits in RAX1 section")
        if (len(z) and z[-1] >= num_phrases) or np.any(o >= archive.m):
            raise FormatError("sample arrays out of range")
        return cls(archive, d, t, z, o, cp, num_phrases)

    def structure_size(self) -> dict:
        """Bits per symbol of the serialised structure and its overhead over the archive."""
        bits = 8 * len(self.to_bytes())
        archive_bits = 8 * len(self.archive.to_bytes())
        n = self.n
        return {
            "bps": bits / n if n else 0.0,
            "delta_vs_archive_bps": (bits - archive_bits) / n if n else 0.0,
            "archive_bps": archive_bits / n if n else 0.0,
            "bits": bits,
            "archive_bits": archive_bits,
        }


def _write_nondecreasing(w: BitWriter, values: np.ndarray) -> None:
    """Non-decreasing non-negative integers as first+1, then step+1 each."""
    w.write_deltas(np.diff(np.asarray(values, dtype=np.int64), prepend=0) + 1)


def _read_nondecreasing(r, count: int) -> np.ndarray:
    steps = np.array(r.read_deltas(count), dtype=np.int64) - 1
    if np.any(steps < 0):
        raise FormatError("decreasing sample array")
    return np.cumsum(steps)


def build_access(text: Text, m: int, d: int | None = None, t: int = 8,
                 parsing: Parsing | None = None) -> AccessStructure:
    """Compress ``text`` with an H0 parsing (the DP one unless given) and index it."""
    if d is None:
        d = 2 * m
    if parsing is None and text.n:
        parsing, _ = parse_h0_optimal(text, m)
    archive = compress_h0(text, m, parsing)
    if text.n == 0:
        return AccessStructure(archive, d, t, [], [], [], 0)
    book = codebook_decode(archive.sections["dictionary"], len(parsing.distinct_phrases()))
    ids = parsing.phrase_ids()
    code_len = np.array([book.lengths[s] for s in range(len(book))], dtype=np.int64)[ids]
    bit_start = np.zeros(len(ids), dtype=np.int64)
    np.cumsum(code_len[:-1], out=bit_start[1:])
    samples = np.arange(0, text.n, d, dtype=np.int64)
    z = np.searchsorted(parsing.starts, samples, side="right") - 1
    o = samples - parsing.starts[z]
    return AccessStructure(archive, d, t, z, o, bit_start[::t], len(ids))


def structure_size(structure: AccessStructure) -> dict:
    return structure.structure_size()
