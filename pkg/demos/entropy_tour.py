"""How much does a smarter parsing buy?

Parses a sample text into phrases of length at most m two ways (the best
fixed-length block parsing and the cost-minimising dynamic program) and
prints the zeroth-order parsing entropy of each next to the text's own
k-th order entropies.

    python demos/entropy_tour.py [FILE]

Without FILE the script uses a slice of the Python standard library.
"""

import sys
import sysconfig
from pathlib import Path

from bfparse import best_naive, build_counter, entropy_report, hk_totals, load_text, parse_h0_optimal


def sample() -> bytes:
    if len(sys.argv) > 1:
        return Path(sys.argv[1]).read_bytes()[:1 << 20]
    root = Path(sysconfig.get_paths()["stdlib"])
    return b"".join(p.read_bytes() for p in sorted(root.glob("*.py"))[:40])[:1 << 20]


def main() -> None:
    text = load_text(sample())
    print(f"{text.n} bytes, {text.sigma} distinct symbols")
    totals = hk_totals(text, 8)
    for k, bits in enumerate(totals):
        print(f"  H_{k} = {bits / text.n:.4f} bps")

    counter = build_counter(text, 8)
    print("\n m   naive bps  (distinct)   DP bps  (distinct)")
    for m in (2, 4, 6, 8):
        naive, _ = best_naive(text, m, "h0")
        dp, cost = parse_h0_optimal(text, m, counter)
        a, b = entropy_report(dp, 8, totals), entropy_report(naive, 8, totals)
        print(f"{m:2d}   {b.bps(b.h0_bits):8.4f}  ({b.distinct:7d})  {a.bps(a.h0_bits):8.4f}  ({a.distinct:7d})"
              f"   DP cost {cost / text.n:.4f} bps")


if __name__ == "__main__":
    main()
