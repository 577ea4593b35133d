#!/usr/bin/env python3
"""Emit the exponent tuples of count-record and ratio-record setters.

Raw data for eyeballing how the two families of record-setters differ in
the shape of their factorizations; this script tabulates and draws no
conclusion.

Usage: python scripts/exponent_shapes.py [bound]
"""

import sys
from collections import Counter

from recdiv import RecordKind, sieve_records


def main() -> None:
    bound = int(sys.argv[1]) if len(sys.argv) > 1 else 10**6
    table = sieve_records(bound, RecordKind.RHC | RecordKind.RSA)
    print(f"{'n':>9}  {'exponents':<16} kinds")
    shape_counts: dict[str, Counter] = {"RHC": Counter(), "RSA": Counter()}
    for e in table.entries:
        exps = tuple(x for _, x in e.factorization.pairs)
        kinds = [k.name for k in (RecordKind.RHC, RecordKind.RSA) if k in e.kinds]
        for name in kinds:
            shape_counts[name][exps] += 1
        print(f"{e.n:>9}  {str(exps):<16} {','.join(kinds)}")
    for name, counts in shape_counts.items():
        print(f"\n{name} exponent-tuple frequencies:")
        for exps, count in sorted(counts.items()):
            print(f"  {exps}: {count}")


if __name__ == "__main__":
    main()
