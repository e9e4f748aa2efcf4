#!/usr/bin/env python3
"""Convert UCI source files into the sparse `label idx:val` text format.

Two converters:

  agaricus  -- UCI mushroom data (agaricus-lepiota.data). Categorical
               attributes are expanded into binary indicators; attributes
               with missing values ('?') are dropped entirely, which yields
               the usual 112-feature encoding. Labels: e -> 1, p -> 2.
  spambase  -- UCI spambase (spambase.data, or a CSV export with a header
               row and spam/nonspam class strings). 57 numeric features,
               zeros omitted. Labels: spam -> 1, nonspam -> 0.

Output is plain text; pipe through gzip if a .gz is wanted.
"""
import argparse
import sys


def convert_agaricus(lines, out):
    rows = [ln.strip().split(",") for ln in lines if ln.strip()]
    nattr = len(rows[0]) - 1
    keep = []
    for j in range(1, nattr + 1):
        vals = sorted({r[j] for r in rows})
        if "?" in vals:
            continue
        keep.append((j, vals))
    index = {}
    nxt = 1
    for j, vals in keep:
        for v in vals:
            index[(j, v)] = nxt
            nxt += 1
    for r in rows:
        label = "1" if r[0] == "e" else "2"
        feats = [index[(j, r[j])] for j, _ in keep]
        out.write(label + " " + " ".join(f"{i}:1" for i in sorted(feats)) + "\n")
    return nxt - 1, len(rows)


def convert_spambase(lines, out):
    n = 0
    for ln in lines:
        ln = ln.strip()
        if not ln:
            continue
        toks = ln.split(",")
        try:
            float(toks[0])
        except ValueError:
            continue  # header row
        cls = toks[-1]
        if cls in ("spam", "nonspam"):
            label = "1" if cls == "spam" else "0"
        else:
            label = str(int(float(cls)))
        feats = []
        for i, tok in enumerate(toks[:-1], start=1):
            v = float(tok)
            if v != 0.0:
                feats.append(f"{i}:{repr(v)}")
        out.write(label + " " + " ".join(feats) + "\n")
        n += 1
    return len(toks) - 1, n


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("kind", choices=["agaricus", "spambase"])
    ap.add_argument("input")
    ap.add_argument("output")
    args = ap.parse_args()
    with open(args.input) as f, open(args.output, "w") as out:
        if args.kind == "agaricus":
            dim, n = convert_agaricus(f, out)
        else:
            dim, n = convert_spambase(f, out)
    print(f"{args.output}: {n} instances, {dim} features", file=sys.stderr)


if __name__ == "__main__":
    main()
