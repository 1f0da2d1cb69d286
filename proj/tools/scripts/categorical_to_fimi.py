#!/usr/bin/env python3
"""One-hot encode a categorical table (KEEL .dat or plain CSV) into FIMI format.

Every (column, value) pair becomes one item. Items are numbered from 1 in
column order, values within a column in sorted order. Header lines starting
with '@' are skipped, so KEEL files can be fed in directly.
"""
import argparse
import sys


def read_rows(stream):
    rows = []
    for line in stream:
        line = line.strip()
        if not line or line.startswith("@") or line.startswith("%"):
            continue
        rows.append([tok.strip() for tok in line.split(",")])
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("input")
    ap.add_argument("output")
    args = ap.parse_args()

    with open(args.input) as f:
        rows = read_rows(f)
    if not rows:
        sys.exit("no data rows in " + args.input)
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        sys.exit("ragged rows in " + args.input)

    ids = {}
    for col in range(width):
        for value in sorted({r[col] for r in rows}):
            ids[(col, value)] = len(ids) + 1

    with open(args.output, "w") as out:
        for r in rows:
            out.write(" ".join(str(ids[(c, v)]) for c, v in enumerate(r)) + "\n")
    print(f"{args.output}: {len(rows)} rows, {len(ids)} items, {width} items per row",
          file=sys.stderr)


if __name__ == "__main__":
    main()
