#!/usr/bin/env python3
"""Recompute the small-weight multiplicity tables and compare them with
the tabulated reference values.

Every number below is recomputed from the Freudenthal recursion and the
parabolic-stabilizer orbit formula; the tabulated values serve only as
comparison targets.  Rows where the two disagree are marked -- some
tabulated entries are characteristic-p bounds rather than the
characteristic-zero multiplicities computed here, and a few are plain
misprints (the note says which).

Run:  python3 demos/multiplicity_tables.py [rank]
"""

import sys

from weylkit.cartan import LieType, weight_from_dict
from weylkit.freudenthal import dim_weyl_module, dim_weyl_product, multiplicity_table
from weylkit.tables import build_table


def main():
    rank = int(sys.argv[1]) if len(sys.argv) > 1 else 12
    for name in ("lemma-b2", "lemma-b3", "appendix-c", "appendix-d"):
        rep = build_table(name, rank)
        print(f"== {name} at rank {rank} (family {rep.lietype.family}) ==")
        current = None
        for row in rep.rows:
            if row.section != current:
                current = row.section
                print(f"  highest weight {current}:")
            mark = "   <-- " + row.note if row.note else ""
            orbit = f"{row.computed_orbit}" if row.computed_orbit is not None else "-"
            print(f"    {row.mu:14s} mult {row.computed_mult:>4}  orbit {orbit:>8}{mark}")
        print()

    print("Dimension sanity on one table top, both routes:")
    t = LieType("B", rank)
    lam = weight_from_dict(t, {rank: 4})
    a = dim_weyl_module(t, lam)
    b = dim_weyl_product(t, lam)
    print(f"  dim of the {lam} module over B{rank}: orbit sum {a}, Weyl product {b}")
    assert a == b

    print("\nFull table object for 3*w_l over C:")
    t = LieType("C", rank)
    table = multiplicity_table(t, weight_from_dict(t, {rank: 3}))
    for w, m, orb in table.rows():
        print(f"  {str(w):14s} {m:>3}  {orb:>8}")
    print(f"  dimension = {table.dim()}")


if __name__ == "__main__":
    main()
