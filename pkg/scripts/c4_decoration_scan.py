"""Search torsion decorations of the C_4 Kummer configuration for the printed series.

Every assignment of (Z/2)^2 elements to the four A_3 and six A_1 points is
tried (as multisets), and the [1]-projected series is compared with the
published one.  A second pass does the same for the 4A_3+3A_1 configuration.
"""

import argparse
from collections import Counter
from dataclasses import replace
from itertools import combinations_with_replacement

from hilbfix.audit import PUBLISHED_KUMMER
from hilbfix.catalog import kummer_action, parse_config
from hilbfix.theta import identity_projection, theta_series


def scan(action, n_a3, n_a1, target):
    elements = list(action.torsion.elements())
    series_seen = Counter()
    hits = []
    for d3 in combinations_with_replacement(elements, n_a3):
        for d1 in combinations_with_replacement(elements, n_a1):
            variant = replace(action, decorations=d3 + d1)
            got = identity_projection(theta_series(variant, len(target) - 1)).coeffs
            series_seen[got] += 1
            if got == target:
                hits.append((d3, d1))
    return series_seen, hits


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--show", type=int, default=3, help="hits to print per configuration")
    args = parser.parse_args()

    target = PUBLISHED_KUMMER["C_4"]
    base = kummer_action("C_4")
    for n_a1 in (6, 3):
        action = replace(base, config=parse_config(f"4A_3+{n_a1}A_1"), decorations=None)
        seen, hits = scan(action, 4, n_a1, target)
        total = sum(seen.values())
        print(f"4A_3+{n_a1}A_1: {total} assignments, {len(seen)} distinct series, {len(hits)} reproduce {target}")
        for d3, d1 in hits[: args.show]:
            print("   A_3:", d3, " A_1:", d1)


if __name__ == "__main__":
    main()
