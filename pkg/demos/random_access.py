"""Read single bytes and blocks straight out of a compressed archive.

    python demos/random_access.py [FILE]

Builds the access structure for a few sampling steps d and shows the space
it adds on top of the plain archive, then times some queries.
"""

import random
import sys
import sysconfig
import time
from pathlib import Path

from bfparse import build_access, load_text


def main() -> None:
    if len(sys.argv) > 1:
        data = Path(sys.argv[1]).read_bytes()
    else:
        root = Path(sysconfig.get_paths()["stdlib"])
        data = b"".join(p.read_bytes() for p in sorted(root.glob("*.py"))[:60])
    text = load_text(data)
    m = 8
    print(f"{text.n} bytes, m = {m}")
    for d in (m, 2 * m, 4 * m, 8 * m):
        s = build_access(text, m, d=d)
        size = s.structure_size()
        print(f"  d = {d:3d}: archive {size['archive_bps']:.3f} bps, structure adds"
              f" {size['delta_vs_archive_bps']:.3f} bps")

    s = build_access(text, m)
    rng = random.Random(7)
    positions = [rng.randrange(text.n) for _ in range(100_000)]
    start = time.perf_counter()
    assert all(s.access(i) == data[i] for i in positions)
    print(f"100000 verified single-byte reads in {time.perf_counter() - start:.2f}s")
    i = rng.randrange(text.n - 80)
    print("block at", i, "->", s.read_block(i, 80))


if __name__ == "__main__":
    main()
