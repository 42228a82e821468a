"""Bounded-length phrase parsings that approach high-order empirical entropy."""

from .bitio import FormatError
from .codec import Archive, compress, compress_h0, compress_h1, decompress, size_report
from .corpus import Alphabet, Text, load_file, load_text
from .entropy import EntropyReport, entropy_report, hk_total, hk_totals
from .parsing import (
    Parsing,
    Phrase,
    best_naive,
    cost_h0,
    cost_h1,
    naive_parsing,
    parse_h0_optimal,
    parse_h1_optimal,
    total_cost,
)
from .random_access import AccessStructure, build_access
from .substring_index import SubstringCounter, build_counter

__all__ = [
    "AccessStructure", "Alphabet", "Archive", "EntropyReport", "FormatError", "Parsing", "Phrase",
    "SubstringCounter", "Text", "best_naive", "build_access", "build_counter", "compress",
    "compress_h0", "compress_h1", "cost_h0", "cost_h1", "decompress", "entropy_report",
    "hk_total", "hk_totals", "load_file", "load_text", "naive_parsing", "parse_h0_optimal",
    "parse_h1_optimal", "size_report", "total_cost",
]
