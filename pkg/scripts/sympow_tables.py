#!/usr/bin/env python3
"""Print the full symmetric-power decomposition tables for a list of primes.

For each prime p and each simple L_m the rows show the expansion of S^i L_m,
its integer dimension, its dimension mod p, and the number of invariants.
Example:

    python scripts/sympow_tables.py --p-list 5,7
"""
import argparse
from math import comb

from verlinde_kit import dim_mod_p, invariant_dim, sym_power_simple


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p-list", default="3,5,7", help="comma-separated odd primes")
    args = parser.parse_args()

    for p in (int(s) for s in args.p_list.split(",")):
        print(f"=== symmetric powers in Ver_{p} ===")
        for m in range(2, p):
            print(f"L{m}:")
            for i in range(p - m + 1):
                obj = sym_power_simple(i, m, p)
                dim = comb(m + i - 1, i)
                print(
                    f"  S^{i:<2} = {str(obj):<24} dim={dim:<6} "
                    f"dim mod p={dim_mod_p(obj) if not obj.is_zero() else 0:<3} "
                    f"invariants={invariant_dim(i, m, p)}"
                )
        print()


if __name__ == "__main__":
    main()
