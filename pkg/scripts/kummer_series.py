"""Theta series of the four Kummer-type groups, full group ring and [1]-projection."""

import argparse

from hilbfix.catalog import kummer_action
from hilbfix.qseries import coefficient
from hilbfix.theta import identity_projection, theta_series
from hilbfix.torsion import augmentation


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--order", type=int, default=8)
    parser.add_argument("--groups", nargs="+", default=["C_2", "C_3", "C_4", "C_6"])
    parser.add_argument("--full", action="store_true", help="also print group-ring coefficients")
    args = parser.parse_args()

    for name in args.groups:
        action = kummer_action(name)
        series = theta_series(action, args.order)
        print(f"{name}: {action.config}, A^G = {action.torsion}")
        print("  [1]   :", list(identity_projection(series).coeffs))
        print("  total :", [augmentation(c) for c in series.coeffs])
        if args.full:
            for e in range(args.order + 1):
                print(f"  q^{e}: {coefficient(series, e)}")


if __name__ == "__main__":
    main()
