"""
Restriction classes of closed orbits as sums of Schubert polynomials.

For one string the class matches a product of binomials x_i + x_j; the
loop below checks this for n up to 8.  The two candidate powers of 2 in
front of the class are compared for a few compositions with several parts.
"""

import time

from complete_quadrics.perm import Permutation
from complete_quadrics.schubert import (
    check_conjecture, compare_exponents, restriction_class, schubert,
)


def main():
    print("S_1432 =", schubert(Permutation((1, 4, 3, 2))).poly)
    print("class of (3):", restriction_class((3,)))

    for n in range(2, 9):
        start = time.perf_counter()
        rep = check_conjecture(n)
        print(f"n={n}: {'equal' if rep.ok else 'DIFFERENT'} "
              f"({len(rep.restriction)} terms, {time.perf_counter() - start:.2f}s)")

    print("\nmu       sum floor(mu_i/2)  floor(n/2)  differ")
    for mu in [(3,), (3, 1), (2, 2), (1, 1, 1, 1), (3, 3), (4, 2), (1, 2, 3)]:
        rep = compare_exponents(mu)
        print(f"{str(rep.mu):<8} {rep.strings_exponent:>17}  {rep.floor_half_exponent:>10}  {rep.flagged}")


if __name__ == "__main__":
    main()
