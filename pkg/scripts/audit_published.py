"""List every disagreement between computed values and the published ones."""

import argparse

from hilbfix.audit import audit_warnings


def main():
    argparse.ArgumentParser(description=__doc__).parse_args()
    for line in audit_warnings():
        print("-", line)


if __name__ == "__main__":
    main()
