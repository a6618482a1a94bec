#!/usr/bin/env python3
"""Survey how the number of invariants in S^i L_m stabilizes as p grows.

For each (i, m) cell the row lists the invariant count in Ver_p for the
admissible primes, then the classical count for binary forms.  Cells where
the truncation is still active, i.e. where 2p <= i(m-1) + 2, are marked with
a star: there the modular count can genuinely differ from the classical one
even though p already exceeds i + m + 1.

    python scripts/invariant_survey.py --max-total 11
"""
import argparse

from verlinde_kit import classical_invariant_count, invariant_dim, is_prime


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-total", type=int, default=10, help="largest i+m to survey")
    parser.add_argument("--max-p", type=int, default=23)
    args = parser.parse_args()

    primes = [p for p in range(3, args.max_p + 1) if is_prime(p)]
    header = "  i  m | " + " ".join(f"p={p:<3}" for p in primes) + " | classical"
    print(header)
    print("-" * len(header))
    for total in range(2, args.max_total + 1):
        for m in range(2, total):
            i = total - m
            cells = []
            for p in primes:
                if m > p - 1 or i > p - m:
                    cells.append("  .  ")
                    continue
                count = invariant_dim(i, m, p)
                star = "*" if 2 * p <= i * (m - 1) + 2 else " "
                cells.append(f"{count:>3}{star} ")
            classical = classical_invariant_count(i, m)
            print(f"{i:>3} {m:>2} | " + " ".join(cells) + f" | {classical:>5}")


if __name__ == "__main__":
    main()
