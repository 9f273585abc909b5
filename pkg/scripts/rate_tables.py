"""Print the rate-bound tables: the recurrent upper-bound sequence and the
two-parameter upper/lower grid, in the layout used for comparisons.

Usage: python3 scripts/rate_tables.py [--z-max 17] [--s-max 8]
"""

import argparse

from sic.bounds import (
    lower_z1,
    lower_zu,
    recurrent_upper,
    threshold_lower,
    universal_upper,
    upper_zu,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--z-max", type=int, default=17)
    ap.add_argument("--s-max", type=int, default=8)
    args = ap.parse_args()

    print(f"reciprocal recurrent upper bounds, z = 2..{args.z_max}")
    seq = recurrent_upper(args.z_max)
    for z in range(2, args.z_max + 1):
        print(f"  z={z:2d}  R={seq[z - 1]:.6f}  1/R={1 / seq[z - 1]:.4f}")

    print(f"\nrate bounds for strict threshold designs, strength s = 2..{args.s_max}")
    print("(threshold u: lower bound / upper bound on the (s-u+1, u) rate)")
    for u in (1, 2, 3):
        cells = []
        for s in range(u + 1, args.s_max + 1):
            z = s - u + 1
            lo = lower_z1(z).value if u == 1 else lower_zu(z, u)
            hi = upper_zu(z, u).value
            cells.append(f"s={s}: {lo:.4f}/{hi:.4f}")
        print(f"  u={u}:  " + "  ".join(cells))

    print("\nuniversal upper bound vs the label-counting rate, l=3")
    for s in (10, 13):
        print(f"  s={s}: universal {universal_upper(3, s):.4f}  labels {2 / s:.4f}")

    print("\nmax-min random-coding lower bound for threshold designs")
    for u, s in [(2, 3), (2, 5), (3, 6)]:
        rb = threshold_lower(u, s)
        print(f"  u={u} s={s}: {rb.value:.6f} at beta={rb.optimizer['beta']:.4f} "
              f"(worst group {rb.optimizer['group']})")


if __name__ == "__main__":
    main()
