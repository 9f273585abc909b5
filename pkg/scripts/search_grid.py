"""Scan the minimum-length parameter search over a grid of strengths and
size exponents, printing the best (q, lambda, N) found per cell.

Usage: python3 scripts/search_grid.py [--m-min 5] [--m-max 30] [--s-max 8]
"""

import argparse

from sic.codes import search_params


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m-min", type=int, default=5)
    ap.add_argument("--m-max", type=int, default=30)
    ap.add_argument("--s-max", type=int, default=8)
    ap.add_argument("--q-max", type=int, default=64)
    args = ap.parse_args()

    strengths = list(range(2, args.s_max + 1))
    header = "  m " + "".join(f"{f's={s}':>14}" for s in strengths)
    print("best (q,lambda,N) with 2^m <= size < 2^(m+1), weight s*lambda+1")
    print(header)
    for m in range(args.m_min, args.m_max + 1):
        cells = []
        for s in strengths:
            p = search_params(s, m, q_max=args.q_max)
            cells.append("-" if p is None else f"{p.q},{p.lam},{p.N}")
        print(f"{m:4d} " + "".join(f"{c:>14}" for c in cells))


if __name__ == "__main__":
    main()
