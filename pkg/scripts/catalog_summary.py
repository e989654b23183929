#!/usr/bin/env python3
"""Summarise a catalog JSONL file (from ``platbraid catalog``).

Prints a table of word counts by length and component count, the share of
words with an affineness witness, and checks components == len(cycles).
"""

import argparse
import collections
import json
import sys


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("catalog", help="JSONL file, or - for stdin")
    args = p.parse_args(argv)
    fh = sys.stdin if args.catalog == "-" else open(args.catalog, encoding="utf-8")
    table = collections.Counter()
    witnessed = collections.Counter()
    totals = collections.Counter()
    bad = 0
    with fh:
        for line in fh:
            r = json.loads(line)
            length = len(r["word"].split())
            table[(length, r["components"])] += 1
            totals[length] += 1
            witnessed[length] += r["affine_witness"] is not None
            bad += r["components"] != len(r["cycles"])
    comps = sorted({c for _, c in table})
    print("len  " + "  ".join(f"c={c:<6}" for c in comps) + "  witness")
    for length in sorted(totals):
        cells = "  ".join(f"{table[(length, c)]:<8}" for c in comps)
        print(f"{length:<4} {cells}  {witnessed[length] / totals[length]:.3f}")
    print(f"records with components != len(cycles): {bad}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
