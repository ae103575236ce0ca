#!/usr/bin/env python3
"""Print the full table of maximal dominant weight multiplicities for one (n, k).

Each row lists the family index ell, the root coefficient vector, the coroot
pairings of the weight, and the exact multiplicity.

Usage: python scripts/multiplicity_table.py --n 10 --k 4
"""

import argparse

from latmult import maximal_dominant_family


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, required=True, help="rank parameter (>= 2)")
    parser.add_argument("--k", type=int, required=True, help="level (>= 2)")
    args = parser.parse_args()

    print(f"n = {args.n}, k = {args.k}")
    print(f"{'ell':>4}  {'root coefficients':<32}  {'pairings':<32}  multiplicity")
    for entry in maximal_dominant_family(args.n, args.k):
        root = ",".join(str(c) for c in entry.root.coeffs)
        pair = ",".join(str(p) for p in entry.weight.pairings)
        print(f"{entry.ell:>4}  {root:<32}  {pair:<32}  {entry.multiplicity}")


if __name__ == "__main__":
    main()
