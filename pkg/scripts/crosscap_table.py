"""Tabulate Cr(p, q) for every even p <= P by all three methods.

    python scripts/crosscap_table.py --max-p 40 --csv crosscap.csv
"""
import argparse
import csv
import sys
from math import gcd

from lenscap import crosscap_bw, crosscap_new, normalize_lens, slope_path


def rows(p_max):
    for p in range(2, p_max + 1, 2):
        for q in range(1, p // 2 + 1):
            if gcd(p, q) != 1:
                continue
            lens = normalize_lens(p, q)
            bw, new = crosscap_bw(lens), crosscap_new(lens)
            path = slope_path(p, q)
            yield {
                "p": p,
                "q": q,
                "expansion": " ".join(map(str, bw.a)),
                "bw": bw.total,
                "new": new.total,
                "path": path.crosscap,
                "slopes": " ".join(map(str, path.slopes)),
            }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-p", type=int, default=30)
    ap.add_argument("--csv")
    args = ap.parse_args()
    table = list(rows(args.max_p))
    bad = [r for r in table if not r["bw"] == r["new"] == r["path"]]
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(table[0]))
            w.writeheader()
            w.writerows(table)
    else:
        for r in table:
            print(f"L({r['p']},{r['q']})  [{r['expansion']}]  Cr={r['bw']}  {r['slopes']}")
    print(f"{len(table)} lens spaces, {len(bad)} disagreements", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
