"""List graphs other than K_n that attain an endpoint of the R_{-1}-based enclosures.

The bounds are claimed tight only for complete graphs; this sweep records
every other labeled connected graph (n <= 6 by default) that meets a theorem
endpoint within tolerance, grouped by degree sequence.

Usage:
    python scripts/equality_cases.py [--max-n 6] [--tol 1e-9]
"""
import argparse
from collections import defaultdict

from normlap.graph import enumerate_connected
from normlap.report import evaluate


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--tol", type=float, default=1e-9)
    args = ap.parse_args()

    for n in range(3, args.max_n + 1):
        hits = defaultdict(lambda: [0, set()])
        total = 0
        for g in enumerate_connected(n):
            total += 1
            if g.m == n * (n - 1) // 2:
                continue
            rep = evaluate(g, tol=args.tol)
            labels = [x for x in rep.equality_attainments() if x.startswith("theorem:")]
            if labels:
                key = tuple(rep.degrees)
                hits[key][0] += 1
                hits[key][1].update(labels)
        print(f"n={n}: {sum(h[0] for h in hits.values())} of {total} labeled graphs (non-complete) attain a theorem endpoint")
        for deg, (count, labels) in sorted(hits.items()):
            print(f"  degrees {deg}: {count:5d} labelings  {', '.join(sorted(labels))}")


if __name__ == "__main__":
    main()
