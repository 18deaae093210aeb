"""Average enclosure width per index for the R_{-1} bounds versus the degree-only bounds.

Usage:
    python scripts/sharpness.py [--n 10 20 30] [--trials 200] [--p 0.5] [--seed 0]
"""
import argparse

import numpy as np

from normlap.campaign import trial_seed
from normlap.graph import gen_random_connected
from normlap.report import evaluate


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, nargs="+", default=[10, 20, 30])
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--p", type=float, default=0.5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print(f"{'n':>4} {'method':<18} {'mean width rho_1':>17} {'mean width rho_mid':>19} {'mean width rho_last':>20}")
    for n in args.n:
        widths = {"theorem": [], "corollary_degree": []}
        for t in range(args.trials):
            g = gen_random_connected(n, args.p, trial_seed(args.seed, n, t))
            rep = evaluate(g)
            for method, acc in widths.items():
                w = {c.index: c.upper - c.lower for c in rep.bounds if c.method == method}
                acc.append((w[1], w[n // 2], w[n - 1]))
        for method, acc in widths.items():
            a = np.mean(acc, axis=0)
            print(f"{n:>4} {method:<18} {a[0]:>17.4f} {a[1]:>19.4f} {a[2]:>20.4f}")


if __name__ == "__main__":
    main()
