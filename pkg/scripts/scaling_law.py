"""Restriction-process scaling law over a range of dilations.

Restricts ``s * base`` to half its size and compares the mean of
``R_{k+1}(mu)`` with ``(m/n)^k R_{k+1}(lambda)``.  Writes one JSON report
per line.

    python scripts/scaling_law.py --base 3,1 --scales 2 4 8 --k 2 3 --trials 2000
"""
import argparse
import json
import sys

from kerov.partitions import Partition, dilate
from kerov.restriction import scaling_experiment


def main() -> None:
    parser = argparse.ArgumentParser(description="restriction scaling law sweep")
    parser.add_argument("--base", type=Partition.parse, default=Partition((3, 1)))
    parser.add_argument("--scales", type=int, nargs="+", default=[2, 4, 8])
    parser.add_argument("--k", type=int, nargs="+", default=[2, 3])
    parser.add_argument("--fraction", type=float, default=0.5, help="m / n")
    parser.add_argument("--trials", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=2026)
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    for s in args.scales:
        lam = dilate(args.base, s)
        m = max(1, round(args.fraction * lam.n))
        for k in args.k:
            r = scaling_experiment(lam, m, k, args.trials, args.seed, workers=args.workers)
            row = r.to_json()
            row["relative_gap"] = r.relative_gap
            row["relative_stderr"] = r.relative_stderr
            json.dump(row, sys.stdout)
            sys.stdout.write("\n")
            sys.stdout.flush()


if __name__ == "__main__":
    main()
