#!/usr/bin/env python3
"""Convergence of the sampled entropy estimators toward their analytic targets.

Sweeps trial counts for the pair-distinction and sequence-average estimators
of logical entropy and for the bits-per-letter estimator of Shannon entropy,
printing observed error against the shrinking standard-error band.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from logent.formats import parse_distribution
from logent.logical import logical_entropy_dist
from logent.sampling import (
    average_difference_rate,
    pair_distinction_rate,
    typical_message_stats,
)
from logent.shannon import shannon_entropy_dist


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dist", default="1/2,1/3,1/6", help="probability vector")
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--max-power", type=int, default=6, help="largest 10^k trial count")
    args = ap.parse_args()

    p = parse_distribution(args.dist, exact=True)
    h = float(logical_entropy_dist(p))
    capital_h = shannon_entropy_dist(p)
    print(f"distribution {args.dist}   h = {h:.9f}   H = {capital_h:.9f} bits\n")

    print("pair-distinction estimator of h")
    print(f"{'trials':>10} {'estimate':>12} {'abs error':>12} {'std error':>12}")
    for k in range(3, args.max_power + 1):
        rep = pair_distinction_rate(p, 10**k, args.seed)
        print(
            f"{rep.trials:>10d} {rep.estimate:>12.7f} "
            f"{abs(rep.estimate - h):>12.2e} {rep.std_error:>12.2e}"
        )

    print("\nsequence-average estimator of h")
    print(f"{'length':>10} {'estimate':>12} {'abs error':>12} {'std error':>12}")
    for k in range(3, args.max_power + 1):
        rep = average_difference_rate(p, 10**k, args.seed)
        print(
            f"{rep.trials:>10d} {rep.estimate:>12.7f} "
            f"{abs(rep.estimate - h):>12.2e} {rep.std_error:>12.2e}"
        )

    print("\nbits-per-letter estimator of H (100 messages per row)")
    print(f"{'length':>10} {'estimate':>12} {'abs error':>12} {'std error':>12}")
    for k in range(2, min(args.max_power, 5) + 1):
        rep = typical_message_stats(p, 10**k, 100, args.seed)
        print(
            f"{10**k:>10d} {rep.estimate:>12.7f} "
            f"{abs(rep.estimate - capital_h):>12.2e} {rep.std_error:>12.2e}"
        )


if __name__ == "__main__":
    main()
