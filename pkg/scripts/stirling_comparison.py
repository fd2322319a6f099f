#!/usr/bin/env python3
"""Exact normalized log-multinomial against its two Stirling approximations.

The two-term approximation is the natural-log entropy of the block
proportions; the three-term form keeps the (1/2) ln(2 pi M) correction of
each factorial and tracks the exact value far more closely as N grows.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from logent.shannon import stirling_entropy


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--blocks", type=int, default=4, help="number of equal blocks")
    ap.add_argument(
        "--totals", default="100,1000,10000,100000", help="comma-separated N values"
    )
    args = ap.parse_args()

    totals = [int(t) for t in args.totals.split(",")]
    print(f"{args.blocks} equal blocks, values in nats\n")
    header = f"{'N':>8} {'exact':>12} {'two-term':>12} {'three-term':>12} {'err2':>10} {'err3':>10}"
    print(header)
    for total in totals:
        rep = stirling_entropy([total // args.blocks] * args.blocks)
        print(
            f"{total:>8d} {rep.s_exact:>12.8f} {rep.approx2:>12.8f} "
            f"{rep.approx3:>12.8f} {rep.err2:>10.2e} {rep.err3:>10.2e}"
        )


if __name__ == "__main__":
    main()
