"""Recompute the published weak core examples and print a comparison table."""

import sys

from weakcore.cli import format_matrix
from weakcore.reference_examples import run_examples


def main() -> int:
    checks = run_examples()
    for c in checks:
        print(f"{c.name:<16} {c.status:<12} {format_matrix(c.computed) if c.computed is not None else '-'}")
    bad = [c.name for c in checks if not c.ok]
    print(f"{len(checks) - len(bad)}/{len(checks)} agree" + (f"; disagreeing: {', '.join(bad)}" if bad else ""))
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
