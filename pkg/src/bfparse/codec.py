"""Archive format for parsed texts.

An archive holds the set of distinct phrases (``P'``: sorted phrase numbers,
delta coded), a canonical prefix-code dictionary (``C'``: sorted 1-prefixed
codewords, delta coded, plus the letter order ``L``) and the concatenated
codes of the phrase sequence.  The first-order variant keeps one dictionary
per preceding phrase and stores the first phrase explicitly.

Layout (all integers Elias Delta, bits MSB-first)::

    "BFPC" | version 0x01 | variant 0x00/0x01 |
    n+1, sigma+1, m, alphabet bytes, pad to byte |
    per section: bitlen+1, pad, bits, pad
    sections: PhraseSet, Dictionary, [FirstPhrase], Payload
"""

from __future__ import annotations

import itertools
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import _kernels
from .bitio import BitReader, BitStream, BitWriter, FormatError, delta_code_arrays, pack_codes
from .corpus import Text
from .parsing import Parsing, best_naive, parse_h0_optimal, parse_h1_optimal

MAGIC = b"BFPC"
VERSION = 1
VARIANTS = {"h0": 0, "h1": 1}
SECTIONS = {
    "h0": ("phrase_set", "dictionary", "payload"),
    "h1": ("phrase_set", "dictionary", "first_phrase", "payload"),
}


# -- phrase set -------------------------------------------------------------

def phrase_number(phrase: Sequence[int], sigma: int) -> int:
    """Value of ``phrase`` in base sigma+1 with digit ``s + 1`` for symbol s."""
    base = sigma + 1
    value = 0
    for s in phrase:
        value = value * base + s + 1
    return value


def number_to_phrase(value: int, sigma: int) -> tuple[int, ...]:
    base = sigma + 1
    digits = []
    while value:
        value, d = divmod(value, base)
        if d == 0:
            raise FormatError("phrase number contains a zero digit")
        digits.append(d - 1)
    return tuple(reversed(digits))


@dataclass(frozen=True)
class PhraseSet:
    sigma: int
    phrases: tuple[tuple[int, ...], ...]  # ascending phrase number

    @classmethod
    def from_phrases(cls, phrases, sigma: int) -> "PhraseSet":
        items = [tuple(int(s) for s in p) for p in phrases]
        for p in items:
            if not p or max(p) >= sigma or min(p) < 0:
                raise ValueError(f"phrase {p} is empty or has symbols outside [0, {sigma})")
        items.sort(key=lambda p: phrase_number(p, sigma))
        if any(a == b for a, b in zip(items, items[1:])):
            raise ValueError("duplicate phrases")
        return cls(sigma, tuple(items))

    @cached_property
    def numbers(self) -> list[int]:
        return [phrase_number(p, self.sigma) for p in self.phrases]

    @property
    def deltas(self) -> list[int]:
        nums = self.numbers
        return nums[:1] + [b - a for a, b in zip(nums, nums[1:])]

    def __len__(self) -> int:
        return len(self.phrases)


def phrase_set_encode(phrases, sigma: int) -> BitStream:
    ps = phrases if isinstance(phrases, PhraseSet) else PhraseSet.from_phrases(phrases, sigma)
    w = BitWriter()
    w.write_deltas(ps.deltas)
    return w.getvalue()


def phrase_set_table(stream: BitStream, sigma: int) -> tuple[np.ndarray, np.ndarray]:
    """Decoded phrase set as a zero-padded symbol table and the phrase lengths."""
    numbers = list(itertools.accumulate(stream.reader().read_deltas()))
    if not numbers:
        return np.zeros((1, 1), dtype=np.uint8), np.zeros(0, dtype=np.int64)
    base = sigma + 1
    if numbers[-1] >= 1 << 63 or base < 2:
        return _phrase_arrays([number_to_phrase(v, sigma) for v in numbers])
    vals = np.array(numbers, dtype=np.int64)
    digits = []
    plen = np.zeros(len(numbers), dtype=np.int64)
    while vals.any():
        plen += vals > 0
        digits.append(vals % base)
        vals //= base
    width = len(digits)
    table = np.zeros((len(numbers), width), dtype=np.int64)
    # digits come out least significant first; phrase j has plen[j] of them
    for i, d in enumerate(digits):
        live = plen > i
        table[live, plen[live] - 1 - i] = d[live] - 1
    expected = np.arange(width)[None, :] < plen[:, None]
    if np.any(table[expected] < 0) or np.any(table[expected] >= sigma):
        raise FormatError("phrase number contains a zero digit")
    return table.astype(np.uint8), plen.astype(np.int64)


def phrase_set_decode(stream: BitStream, sigma: int) -> list[tuple[int, ...]]:
    table, plen = phrase_set_table(stream, sigma)
    return [tuple(row[:l]) for row, l in zip(table.tolist(), plen.tolist())]


# -- canonical prefix codes -------------------------------------------------

@dataclass(frozen=True)
class CodeBook:
    """Canonical prefix code.

    ``order`` (the list L) holds the symbols sorted by (code length, symbol);
    codes are consecutive integers within a length, so lengths and order
    determine every codeword.  A codebook with one symbol gives it the empty
    code.
    """

    lengths: dict[int, int]
    order: tuple[int, ...]

    @classmethod
    def from_lengths(cls, lengths: Mapping[int, int]) -> "CodeBook":
        lengths = {int(s): int(l) for s, l in lengths.items()}
        order = tuple(sorted(lengths, key=lambda s: (lengths[s], s)))
        return cls(lengths, order)

    @cached_property
    def codes(self) -> dict[int, int]:
        codes = {}
        code = 0
        prev = None
        for s in self.order:
            l = self.lengths[s]
            if prev is not None:
                code = (code + 1) << (l - prev)
            codes[s] = code
            prev = l
        return codes

    def code(self, symbol: int) -> str:
        l = self.lengths[symbol]
        return format(self.codes[symbol], f"0{l}b") if l else ""

    def prefixed(self) -> list[int]:
        """Codewords with a leading 1, in ``order`` (hence ascending)."""
        return [(1 << self.lengths[s]) | self.codes[s] for s in self.order]

    def payload_bits(self, freqs: Mapping[int, int]) -> int:
        return sum(int(c) * self.lengths[s] for s, c in freqs.items())

    def __len__(self) -> int:
        return len(self.order)


def huffman_lengths(freqs: Mapping[int, int]) -> dict[int, int]:
    """Optimal prefix-code lengths for a histogram; a lone symbol gets length 0."""
    items = sorted((int(s), int(c)) for s, c in freqs.items() if c > 0)
    if not items:
        raise ValueError("empty histogram")
    syms, counts = zip(*items)
    lengths = _kernels.huffman_grouped(np.array([len(items)], np.int64), np.array(counts, np.int64))
    return dict(zip(syms, lengths.tolist()))


def build_codebook(freqs) -> CodeBook:
    """Huffman code in canonical form for a histogram (mapping or count array)."""
    if not isinstance(freqs, Mapping):
        arr = np.asarray(freqs)
        freqs = {int(s): int(arr[s]) for s in np.flatnonzero(arr)}
    return CodeBook.from_lengths(huffman_lengths(freqs))


@dataclass
class BookSet:
    """Canonical codebooks for several contexts, stored back to back.

    Book c owns entries ``start[c] : start[c] + sizes[c]`` of ``order``
    (its letters sorted by code length, then letter), ``lengths`` and ``codes``.
    """

    sizes: np.ndarray
    order: np.ndarray
    lengths: np.ndarray
    codes: np.ndarray

    @cached_property
    def start(self) -> np.ndarray:
        return np.cumsum(self.sizes) - self.sizes

    @classmethod
    def from_counts(cls, group: np.ndarray, letter: np.ndarray, counts: np.ndarray,
                    groups: int) -> tuple["BookSet", np.ndarray]:
        """Huffman books for entries sorted by (group, letter).

        Also returns, for every input entry, its index in the canonical layout.
        """
        sizes = np.bincount(group, minlength=groups).astype(np.int64)
        lengths = _kernels.huffman_grouped(sizes, counts.astype(np.int64))
        perm = np.lexsort((letter, lengths, group))
        codes, ok = _kernels.canonical_codes(sizes, lengths[perm], letter[perm])
        if not ok:
            raise ValueError("code lengths exceed 62 bits")
        where = np.empty_like(perm)
        where[perm] = np.arange(len(perm))
        return cls(sizes, letter[perm].astype(np.int64), lengths[perm], codes), where

    @classmethod
    def from_prefixed(cls, sizes, prefixed, order, letters: int) -> "BookSet":
        """Rebuild from 1-prefixed codes and letter lists, rejecting non-canonical input."""
        sizes = np.asarray(sizes, dtype=np.int64)
        prefixed = np.asarray(prefixed, dtype=np.int64)
        order = np.asarray(order, dtype=np.int64)
        if len(order) != len(prefixed) or int(sizes.sum()) != len(order):
            raise FormatError("dictionary sizes do not add up")
        if len(order):
            if prefixed.min() < 1 or prefixed.max() >= 1 << 53:
                raise FormatError("code value out of range")
            if order.min() < 0 or order.max() >= letters:
                raise FormatError("dictionary refers to an unknown letter")
            group = np.repeat(np.arange(len(sizes)), sizes)
            if np.unique(group * letters + order).size != len(order):
                raise FormatError("a letter order repeats a letter")
        lengths = np.frexp(prefixed.astype(np.float64))[1].astype(np.int64) - 1
        codes = prefixed - (np.int64(1) << lengths)
        expected, ok = _kernels.canonical_codes(sizes, lengths, order)
        if not ok or not np.array_equal(expected, codes):
            raise FormatError("dictionary is not a canonical prefix code")
        return cls(sizes, order, lengths, codes)

    def prefixed_deltas(self) -> np.ndarray:
        """Per book: first 1-prefixed code, then successive differences."""
        pre = (np.int64(1) << self.lengths) | self.codes
        deltas = np.diff(pre, prepend=0)
        heads = self.start[self.sizes > 0]
        deltas[heads] = pre[heads]
        return deltas

    def book(self, c: int) -> CodeBook | None:
        if not self.sizes[c]:
            return None
        sl = slice(int(self.start[c]), int(self.start[c] + self.sizes[c]))
        return CodeBook(dict(zip(self.order[sl].tolist(), self.lengths[sl].tolist())),
                        tuple(self.order[sl].tolist()))

    def tables(self) -> "DecodeTables":
        return DecodeTables.from_flat(self.sizes, self.order, self.lengths)


def _bookset_of(book: CodeBook) -> BookSet:
    order = np.array(book.order, dtype=np.int64)
    lengths = np.array([book.lengths[s] for s in book.order], dtype=np.int64)
    codes, ok = _kernels.canonical_codes(np.array([len(order)], np.int64), lengths, order)
    return BookSet(np.array([len(order)], np.int64), order, lengths, codes)


def _write_order(w: BitWriter, order: Sequence[int]) -> None:
    """L[0]+1 unsigned, then each step as sign bit + magnitude.

    Sign 0 carries a positive step d as delta(d); sign 1 carries a step
    d <= 0 as delta(1 - d), so each +1 step of an increasing run costs two bits.
    """
    if not len(order):
        return
    order = np.asarray(order, dtype=np.int64)
    step = np.diff(order)
    mag = np.where(step > 0, step, 1 - step)
    codes, lengths = delta_code_arrays(np.concatenate([[order[0] + 1], mag]))
    # the sign bit sits just above each step's code
    codes[1:] |= (step <= 0).astype(np.uint64) << lengths[1:].astype(np.uint64)
    lengths[1:] += 1
    w.write_bits(pack_codes(codes, lengths).to01())


def _read_order(r: BitReader, size: int) -> list[int]:
    if size == 0:
        return []
    out = r.read_deltas(size, signed=True)
    return [v - 1 for v in out]


def codebook_encode(book: CodeBook) -> BitStream:
    w = BitWriter()
    w.write_deltas(_bookset_of(book).prefixed_deltas())
    _write_order(w, book.order)
    return w.getvalue()


def codebook_decode(stream: BitStream | BitReader, size: int, letters: int | None = None) -> CodeBook:
    """Inverse of ``codebook_encode``; ``letters`` bounds the letter ids (default unbounded)."""
    r = stream.reader() if isinstance(stream, BitStream) else stream
    books = _read_bookset(r, np.array([size], np.int64), letters)
    return books.book(0) if size else CodeBook({}, ())


def _read_bookset(r: BitReader, sizes: np.ndarray, letters: int | None,
                  deltas: np.ndarray | None = None) -> BookSet:
    """Read C' (unless ``deltas`` are given) and the concatenated L for books of ``sizes``."""
    total = int(sizes.sum())
    if deltas is None:
        deltas = r.read_deltas(total)
        if any(d >= 1 << 53 for d in deltas):
            raise FormatError("code value out of range")
        deltas = np.array(deltas, dtype=np.int64)
    order = np.array(_read_order(r, total), dtype=np.int64)
    if letters is None:
        letters = int(order.max()) + 1 if total else 0
    prefixed = np.cumsum(deltas)
    heads = (np.cumsum(sizes) - sizes)[sizes > 0]
    base = np.concatenate([[0], prefixed])[heads]
    prefixed -= np.repeat(base, sizes[sizes > 0])
    return BookSet.from_prefixed(sizes, prefixed, order, letters)


@dataclass
class DecodeTables:
    """Flat canonical-decode tables for one or more codebooks (see ``_kernels``)."""

    tab_start: np.ndarray
    tab_min: np.ndarray
    tab_nlen: np.ndarray
    first: np.ndarray
    cnt: np.ndarray
    off: np.ndarray
    sym_start: np.ndarray
    order: np.ndarray

    @classmethod
    def build(cls, books: Sequence[CodeBook | None]) -> "DecodeTables":
        sizes = np.array([len(b) if b else 0 for b in books], dtype=np.int64)
        order = np.array([s for b in books if b for s in b.order], dtype=np.int64)
        lens = np.array([b.lengths[s] for b in books if b for s in b.order], dtype=np.int64)
        return cls.from_flat(sizes, order, lens)

    @classmethod
    def from_flat(cls, sizes: np.ndarray, order: np.ndarray, lens: np.ndarray) -> "DecodeTables":
        tab_start, tab_min, tab_nlen, first, cnt, off, sym_start = _kernels.canonical_tables(sizes, lens)
        return cls(tab_start, tab_min, tab_nlen, first, cnt, off, sym_start, order)

    def args(self):
        return (self.tab_start, self.tab_min, self.tab_nlen, self.first, self.cnt,
                self.off, self.sym_start, self.order)


# -- archive ----------------------------------------------------------------

@dataclass
class Archive:
    variant: str
    n: int
    m: int
    alphabet: bytes
    sections: dict[str, BitStream] = field(default_factory=dict)

    @property
    def sigma(self) -> int:
        return len(self.alphabet)

    def header_bytes(self) -> bytes:
        w = BitWriter()
        w.write_delta(self.n + 1)
        w.write_delta(self.sigma + 1)
        w.write_delta(self.m)
        w.write_bytes(self.alphabet)
        w.align()
        return MAGIC + bytes([VERSION, VARIANTS[self.variant]]) + w.getvalue().data

    def to_bytes(self) -> bytes:
        out = [self.header_bytes()]
        for name in SECTIONS[self.variant]:
            out.append(_section_bytes(self.sections.get(name, BitStream())))
        return b"".join(out)

    @classmethod
    def from_bytes(cls, data: bytes) -> "Archive":
        archive, end = parse_archive(data)
        if end != len(data):
            raise FormatError(f"{len(data) - end} trailing bytes after archive")
        return archive


def _section_bytes(stream: BitStream) -> bytes:
    w = BitWriter()
    w.write_delta(stream.nbits + 1)
    w.align()
    return w.getvalue().data + stream.data[: (stream.nbits + 7) // 8]


def read_sections(data: bytes, pos: int, names: Sequence[str]) -> tuple[dict[str, BitStream], int]:
    """Read length-prefixed, byte-aligned sections starting at byte ``pos``."""
    r = BitReader(data, pos=8 * pos)
    sections = {}
    for name in names:
        nbits = r.read_delta() - 1
        r.align()
        start = r.pos >> 3
        end = start + (nbits + 7) // 8
        if end > len(data):
            raise FormatError(f"section {name!r} runs past end of data")
        sections[name] = BitStream(bytes(data[start:end]), nbits)
        r.pos = 8 * end
    return sections, r.pos >> 3


def parse_archive(data: bytes) -> tuple[Archive, int]:
    """Parse an archive prefix of ``data``; returns it with the byte offset where it ends."""
    if len(data) < 6 or data[:4] != MAGIC:
        raise FormatError("not a BFPC archive")
    if data[4] != VERSION:
        raise FormatError(f"unsupported version {data[4]}")
    variant = {v: k for k, v in VARIANTS.items()}.get(data[5])
    if variant is None:
        raise FormatError(f"unknown variant byte {data[5]}")
    r = BitReader(data, pos=48)
    n = r.read_delta() - 1
    sigma = r.read_delta() - 1
    m = r.read_delta()
    if sigma > 256 or (n > 0) != (sigma > 0):
        raise FormatError("inconsistent header")
    alphabet = r.read_bytes(sigma)
    if len(set(alphabet)) != sigma:
        raise FormatError("alphabet has repeated bytes")
    r.align()
    sections, end = read_sections(data, r.pos >> 3, SECTIONS[variant])
    return Archive(variant, n, m, alphabet, sections), end


# -- compression ------------------------------------------------------------

def _phrase_arrays(phrases: Sequence[tuple[int, ...]]) -> tuple[np.ndarray, np.ndarray]:
    width = max((len(p) for p in phrases), default=1)
    table = np.zeros((max(len(phrases), 1), width), dtype=np.uint8)
    plen = np.zeros(len(phrases), dtype=np.int64)
    for i, p in enumerate(phrases):
        table[i, : len(p)] = p
        plen[i] = len(p)
    return table, plen


def expand_phrases(ids: np.ndarray, table: np.ndarray, plen: np.ndarray) -> np.ndarray:
    """Concatenate the symbols of phrases ``ids``."""
    lens = plen[ids]
    total = int(lens.sum())
    if total == 0:
        return np.zeros(0, dtype=np.uint8)
    rep = np.repeat(ids, lens)
    starts = np.cumsum(lens) - lens
    within = np.arange(total) - np.repeat(starts, lens)
    return table[rep, within]


def _context_codes(prev: np.ndarray, cur: np.ndarray, groups: int, letters: int):
    """Huffman books of the letters ``cur`` grouped by ``prev``, plus each token's code."""
    keys, inv, counts = np.unique(prev * letters + cur, return_inverse=True, return_counts=True)
    books, where = BookSet.from_counts(keys // letters, keys % letters, counts, groups)
    slot = where[inv.reshape(-1)]
    return books, books.codes[slot].astype(np.uint64), books.lengths[slot]


def _header(text: Text, m: int, variant: str) -> Archive:
    return Archive(variant, text.n, m, text.alphabet.symbol_to_byte)


def compress_h0(text: Text, m: int, parsing: Parsing | None = None) -> Archive:
    archive = _header(text, m, "h0")
    if text.n == 0:
        return archive
    if parsing is None:
        parsing, _ = parse_h0_optimal(text, m)
    ids = parsing.phrase_ids()
    phrase_set = PhraseSet(text.sigma, tuple(parsing.distinct_phrases()))
    books, vals, lens = _context_codes(np.zeros_like(ids), ids, 1, len(phrase_set))
    w = BitWriter()
    w.write_deltas(books.prefixed_deltas())
    _write_order(w, books.order)
    archive.sections = {
        "phrase_set": phrase_set_encode(phrase_set, text.sigma),
        "dictionary": w.getvalue(),
        "payload": pack_codes(vals, lens),
    }
    return archive


def compress_h1(text: Text, m: int, parsing: Parsing | None = None) -> Archive:
    archive = _header(text, m, "h1")
    if text.n == 0:
        return archive
    if parsing is None:
        parsing, _ = parse_h1_optimal(text, m)
    ids = parsing.phrase_ids()
    phrases = parsing.distinct_phrases()
    distinct = len(phrases)
    books, vals, lens = _context_codes(ids[:-1], ids[1:], distinct, distinct)
    # per context: size + 1, then its C' deltas
    values = np.empty(distinct + len(books.order), dtype=np.int64)
    heads = books.start + np.arange(distinct)
    body = np.ones(len(values), dtype=bool)
    body[heads] = False
    values[heads] = books.sizes + 1
    values[body] = books.prefixed_deltas()
    w = BitWriter()
    w.write_deltas(values)
    _write_order(w, books.order)
    first = BitWriter()
    first.write_delta(int(ids[0]) + 1)
    archive.sections = {
        "phrase_set": phrase_set_encode(PhraseSet(text.sigma, tuple(phrases)), text.sigma),
        "dictionary": w.getvalue(),
        "first_phrase": first.getvalue(),
        "payload": pack_codes(vals, lens),
    }
    return archive


def compress(text: Text, m: int, order: str = "h0", baseline: bool = False) -> Archive:
    """Compress with the DP parsing, or with the best naive parsing if ``baseline``."""
    parsing = best_naive(text, m, order)[0] if baseline and text.n else None
    if order == "h0":
        return compress_h0(text, m, parsing)
    if order == "h1":
        return compress_h1(text, m, parsing)
    raise ValueError(f"unknown order {order!r}")


def read_h1_bookset(stream: BitStream, distinct: int) -> BookSet:
    r = stream.reader()
    buf = np.frombuffer(r.data, dtype=np.uint8) if r.data else np.zeros(1, np.uint8)
    sizes, deltas, end = _kernels.decode_sized_groups(buf, r.nbits, r.pos, distinct)
    if end == -2:
        raise FormatError("code value out of range")
    if end < 0:
        raise FormatError("truncated dictionary section")
    if len(deltas) and deltas.max() >= 1 << 53:
        raise FormatError("code value out of range")
    r.pos = end
    books = _read_bookset(r, sizes.astype(np.int64), distinct, deltas.astype(np.int64))
    if r.remaining:
        raise FormatError("unused bits in dictionary section")
    return books


def read_h1_dictionary(stream: BitStream, distinct: int) -> list[CodeBook | None]:
    books = read_h1_bookset(stream, distinct)
    return [books.book(c) for c in range(distinct)]


def decompress(archive: Archive | bytes) -> bytes:
    if not isinstance(archive, Archive):
        archive = Archive.from_bytes(archive)
    if archive.n == 0:
        return b""
    sec = archive.sections
    table, plen = phrase_set_table(sec["phrase_set"], archive.sigma)
    if not len(plen):
        raise FormatError("empty phrase set for non-empty text")
    distinct = len(plen)
    payload = sec["payload"]
    buf = np.frombuffer(payload.data, dtype=np.uint8) if payload.data else np.zeros(1, np.uint8)
    if archive.variant == "h0":
        r = sec["dictionary"].reader()
        tables = _read_bookset(r, np.array([distinct], np.int64), distinct).tables()
        if r.remaining:
            raise FormatError("unused bits in dictionary section")
        ids, end = _kernels.decode_codes(buf, payload.nbits, 0, archive.n, plen, 0, False, *tables.args())
    else:
        tables = read_h1_bookset(sec["dictionary"], distinct).tables()
        first_r = sec["first_phrase"].reader()
        first = first_r.read_delta() - 1
        if first >= distinct or first_r.remaining:
            raise FormatError("bad first-phrase section")
        rest, end = _kernels.decode_codes(buf, payload.nbits, 0, archive.n - plen[first], plen,
                                          first, True, *tables.args())
        ids = np.concatenate([[first], rest])
    if end != payload.nbits:
        raise FormatError("payload does not decode to exactly n symbols")
    symbols = expand_phrases(ids, table, plen)
    if len(symbols) != archive.n:
        raise FormatError("payload does not decode to exactly n symbols")
    return np.frombuffer(archive.alphabet, np.uint8)[symbols].tobytes()


# -- sizes ------------------------------------------------------------------

@dataclass
class SizeReport:
    n: int
    total_bits: int
    string_bits: int
    dict_bits: int

    @property
    def empty(self) -> bool:
        return self.n == 0

    def _bps(self, bits: int) -> float:
        return bits / self.n if self.n else 0.0

    @property
    def total_bps(self) -> float:
        return self._bps(self.total_bits)

    @property
    def string_bps(self) -> float:
        return self._bps(self.string_bits)

    @property
    def dict_bps(self) -> float:
        return self._bps(self.dict_bits)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "total_bps": self.total_bps,
            "string_bps": self.string_bps,
            "dict_bps": self.dict_bps,
            "total_bits": self.total_bits,
            "string_bits": self.string_bits,
            "dict_bits": self.dict_bits,
        }


def size_report(archive: Archive) -> SizeReport:
    sec = archive.sections
    bits = lambda name: sec[name].nbits if name in sec else 0
    return SizeReport(
        n=archive.n,
        total_bits=8 * len(archive.to_bytes()),
        string_bits=bits("payload"),
        dict_bits=bits("phrase_set") + bits("dictionary"),
    )
