#!/usr/bin/env python3
"""Print the closed-form size tables and the half-space ratio census."""

from fractions import Fraction

from eqcode.construct import (ratio_report, size_table_by_dimension,
                              size_table_by_field_order)
from eqcode.gfq import SUPPORTED_ORDERS


def main() -> None:
    print("Largest equidistant linear code in P_q(3)")
    print(f"{'q':>3}  {'q^2+q+1':>8}  {'max code':>8}")
    for q, fam, e in size_table_by_field_order():
        print(f"{q:>3}  {fam:>8}  {e:>8}")

    print()
    print("Largest distance-2 equidistant linear code in P_3(n)")
    print(f"{'n':>3}  {'max code':>8}  {'|P_3(n)|':>10}")
    for n, e, p in size_table_by_dimension():
        print(f"{n:>3}  {e:>8}  {p:>10}")

    print()
    print("Fraction of P_q(3) filled by the largest code "
          "(always in (1/4, 1/2], half exactly at q = 2, 5)")
    for q in sorted(SUPPORTED_ORDERS):
        rep = ratio_report(q)
        marker = "  <- half" if rep.ratio == Fraction(1, 2) else ""
        print(f"q={q:>2}: {rep.code_size:>4} / {rep.space_size:>4} "
              f"= {str(rep.ratio):>8}{marker}")


if __name__ == "__main__":
    main()
