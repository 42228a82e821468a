"""Compress a file with both archive variants and check the round trip.

    python demos/compress_roundtrip.py [FILE] [M]

Prints where the bits go: phrase set and dictionaries versus the coded
phrase sequence.
"""

import sys
import sysconfig
import time
from pathlib import Path

from bfparse import compress, decompress, load_text, size_report


def main() -> None:
    if len(sys.argv) > 1:
        data = Path(sys.argv[1]).read_bytes()
    else:
        data = (Path(sysconfig.get_paths()["stdlib"]) / "typing.py").read_bytes()
    m = int(sys.argv[2]) if len(sys.argv) > 2 else 4
    text = load_text(data)
    print(f"{len(data)} bytes, m = {m}")
    for order, baseline in (("h0", True), ("h0", False), ("h1", True), ("h1", False)):
        start = time.perf_counter()
        archive = compress(text, m, order, baseline)
        blob = archive.to_bytes()
        assert decompress(blob) == data
        rep = size_report(archive)
        label = f"{order} {'naive' if baseline else 'DP'}"
        print(f"  {label:9s} total {rep.total_bps:.3f} bps = dictionary {rep.dict_bps:.3f}"
              f" + string {rep.string_bps:.3f} (+ header); {len(blob)} bytes,"
              f" {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    main()
