#!/usr/bin/env python3
"""Labeled triple-system counts and the addition-table census on P_2(3)."""

import time

from eqcode.search import count_labeled_sts, verify_fano_uniqueness


def main() -> None:
    for v in (3, 7, 9):
        start = time.perf_counter()
        census = count_labeled_sts(v)
        note = ""
        if census.associative_lifts is not None:
            note = (f", {census.associative_lifts} lift to groups")
        print(f"v={v}: {census.labeled_count} labeled systems{note} "
              f"({time.perf_counter() - start:.2f}s)")

    start = time.perf_counter()
    rep = verify_fano_uniqueness()
    print(f"unique maximum codeword set in P_2(3): "
          f"{rep.codeword_set_count} (plane order {rep.plane_order})")
    print(f"admissible symmetric tables on it: "
          f"{rep.table_census.total_tables}, valid additions: "
          f"{rep.table_census.valid_tables} "
          f"({time.perf_counter() - start:.2f}s)")


if __name__ == "__main__":
    main()
