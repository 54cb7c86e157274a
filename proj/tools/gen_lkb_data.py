#!/usr/bin/env python3
"""Write data/lkb_generators.json: Krammer's matrices for the
Lawrence-Krammer-Bigelow representation of B_n, 2 <= n <= 6.

Basis x_{i,j} (1 <= i < j <= n), ordered lexicographically. Column (i,j)
holds the image of x_{i,j} under sigma_k. Coefficients in Z[q^+-, t^+-]
stored as {(q_exp, t_exp): coeff}.
"""
import argparse
import json
from collections import defaultdict


def poly(*terms):
    p = defaultdict(int)
    for c, qe, te in terms:
        p[(qe, te)] += c
    return p


def krammer(n, k):
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    idx = {p: a for a, p in enumerate(pairs)}
    cols = defaultdict(lambda: defaultdict(lambda: defaultdict(int)))

    def put(src, dst, p):
        for key, c in p.items():
            cols[idx[src]][idx[dst]][key] += c

    for (i, j) in pairs:
        src = (i, j)
        if (i, j) == (k, k + 1):
            put(src, (k, k + 1), poly((1, 2, 1)))
        elif j == k and i < k:
            put(src, (i, k), poly((1, 0, 0), (-1, 1, 0)))
            put(src, (i, k + 1), poly((1, 1, 0)))
        elif j == k + 1 and i < k:
            put(src, (i, k), poly((1, 0, 0)))
            e = k - i + 1
            put(src, (k, k + 1), poly((1, e + 1, 1), (-1, e, 1)))
        elif i == k and k + 1 < j:
            put(src, (k, k + 1), poly((1, 2, 1), (-1, 1, 1)))
            put(src, (k + 1, j), poly((1, 1, 0)))
        elif i == k + 1 and k + 1 < j:
            put(src, (k, j), poly((1, 0, 0)))
            put(src, (k + 1, j), poly((1, 0, 0), (-1, 1, 0)))
        elif j < k or i > k + 1:
            put(src, (i, j), poly((1, 0, 0)))
        elif i < k and k + 1 < j:
            put(src, (i, j), poly((1, 0, 0)))
            e = k - i
            # t q^e (q-1)^2
            put(src, (k, k + 1), poly((1, e + 2, 1), (-2, e + 1, 1), (1, e, 1)))
        else:
            raise ValueError((i, j, k))

    entries = []
    for col in sorted(cols):
        for row in sorted(cols[col]):
            terms = [[c, [qe, te], []] for (qe, te), c in sorted(cols[col][row].items()) if c != 0]
            if terms:
                entries.append((row, col, terms))
    entries.sort()
    return {
        "ring": {"free_rank": 2, "torsion2_rank": 0, "variables": ["q", "t"]},
        "rows": len(pairs),
        "cols": len(pairs),
        "row_labels": [list(p) for p in pairs],
        "col_labels": [list(p) for p in pairs],
        "entries": [[r, c, t] for r, c, t in entries],
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--out", default="data/lkb_generators.json")
    args = ap.parse_args()
    out = {
        "version": 1,
        "source": "Krammer, Braid groups are linear (Ann. of Math. 2002), generator formulas",
        "convention": "column (i,j) is the image of x_{i,j}",
        "matrices": {},
    }
    for n in range(2, args.max_n + 1):
        for k in range(1, n):
            out["matrices"][f"{n},{k}"] = krammer(n, k)
    with open(args.out, "w") as f:
        json.dump(out, f, separators=(",", ":"))
        f.write("\n")


if __name__ == "__main__":
    main()
