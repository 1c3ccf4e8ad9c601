"""Recompute the top-dimension table for the twelve admissible K3 groups.

Prints, per group, the computed counts for residues 0, p, 2p, ... with the
defect (0 or 1) of each cell, next to the published values.
"""

import argparse

from hilbfix import audit
from hilbfix.catalog import lookup
from hilbfix.fixloc import table2_row


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--m", type=int, default=2, help="n = m|G| + residue")
    args = parser.parse_args()

    for row in audit.PUBLISHED_TABLE2:
        action = lookup(row.label)
        cells = table2_row(action, args.m)
        cmp = audit.compare_table2(row, action)
        print(f"{row.label:>2} {row.name:<6} |G|={action.order:<3} p printed {row.p}, computed {cmp.p_empirical}")
        print("   computed:", " ".join(f"{c.count}{'*' if c.epsilon else ''}" for c in cells))
        print("   printed: ", " ".join(map(str, row.top)))
        if row.below:
            print("   printed-1:", " ".join(map(str, row.below)))
        for c in cmp.mismatches:
            print(f"   ! {c.row}[{c.index}] at q^{c.exponent}: printed {c.published}, computed {c.computed}")


if __name__ == "__main__":
    main()
