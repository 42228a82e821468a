"""Raw byte input and the dense alphabet built on top of it."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np


@dataclass(frozen=True)
class Alphabet:
    """Dense numbering of the bytes that occur in a text.

    Symbol ids are handed out in order of first occurrence, so the same
    input always produces the same numbering.
    """

    symbol_to_byte: bytes

    @property
    def size(self) -> int:
        return len(self.symbol_to_byte)

    @property
    def byte_to_symbol(self) -> dict[int, int]:
        return {b: s for s, b in enumerate(self.symbol_to_byte)}

    def lookup_table(self) -> np.ndarray:
        """256-entry array mapping byte -> symbol id (-1 for unused bytes)."""
        table = np.full(256, -1, dtype=np.int16)
        table[np.frombuffer(self.symbol_to_byte, dtype=np.uint8)] = np.arange(self.size)
        return table


@dataclass(frozen=True, eq=False)
class Text:
    symbols: np.ndarray  # uint8 symbol ids, read-only
    alphabet: Alphabet

    @property
    def n(self) -> int:
        return len(self.symbols)

    @property
    def sigma(self) -> int:
        return self.alphabet.size

    def __len__(self) -> int:
        return len(self.symbols)

    def to_bytes(self) -> bytes:
        table = np.frombuffer(self.alphabet.symbol_to_byte, dtype=np.uint8)
        return table[self.symbols].tobytes() if self.n else b""


def load_text(data: bytes | bytearray | memoryview) -> Text:
    raw = np.frombuffer(bytes(data), dtype=np.uint8)
    if raw.size == 0:
        return Text(_freeze(np.zeros(0, dtype=np.uint8)), Alphabet(b""))
    # first-occurrence order: sort distinct bytes by the index where they first appear
    present, first_pos = np.unique(raw, return_index=True)
    order = present[np.argsort(first_pos, kind="stable")]
    alphabet = Alphabet(order.astype(np.uint8).tobytes())
    symbols = alphabet.lookup_table()[raw].astype(np.uint8)
    return Text(_freeze(symbols), alphabet)


def load_file(path: str | Path, limit: int | None = None) -> Text:
    with open(path, "rb") as fh:
        data = fh.read() if limit is None else fh.read(limit)
    return load_text(data)


def substring(text: Text, start: int, length: int) -> np.ndarray:
    """View of ``text.symbols[start:start+length]``; raises IndexError when out of range."""
    if start < 0 or length < 0 or start + length > text.n:
        raise IndexError(f"substring [{start}, {start + length}) outside text of length {text.n}")
    return text.symbols[start:start + length]


def _freeze(arr: np.ndarray) -> np.ndarray:
    arr.flags.writeable = False
    return arr
