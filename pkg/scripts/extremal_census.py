#!/usr/bin/env python3
"""Exhaustive census of maximum 1-intersecting plane families in F_2^n."""

import argparse
import time
from collections import Counter

from eqcode.search import classify_extremal_family, max_intersecting_family


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, nargs="+", default=[3, 4, 5])
    parser.add_argument("--q", type=int, default=2)
    parser.add_argument("--budget", type=int, default=10 ** 8)
    args = parser.parse_args()

    for n in args.n:
        start = time.perf_counter()
        res = max_intersecting_family(args.q, n, 2, 1, budget=args.budget)
        elapsed = time.perf_counter() - start
        labels = Counter(classify_extremal_family(w) for w in res.witnesses)
        print(f"q={args.q} n={n}: max={res.max_size} "
              f"exhausted={res.exhausted} witnesses={res.witness_count} "
              f"shapes={dict(labels)} nodes={res.nodes_explored} "
              f"({elapsed:.2f}s)")


if __name__ == "__main__":
    main()
